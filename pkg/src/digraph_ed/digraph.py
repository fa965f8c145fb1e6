"""Directed graphs G(V, L): validation, degrees, generators, and transforms.

Vertices are labeled 0..M-1 internally; graph files may use 1-based labels
(see ``from_json_dict``). Edges are ordered pairs (a, b). The default policy
forbids self-loops, duplicate edges, and antiparallel pairs; the last can be
admitted explicitly, in which case downstream consumers fall back to the
statevector route for entanglement values.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

import numpy as np

from .errors import (
    AntiparallelPairError,
    BadParamsError,
    DuplicateEdgeError,
    IndexOutOfRangeError,
    NotABijectionError,
    ParseError,
    SelfLoopError,
    UnsupportedKindError,
)

GENERATOR_KINDS = ("path", "cycle", "star_out", "star_in", "complete_dag", "erdos_renyi")


@dataclass(frozen=True)
class DirectedGraph:
    """A directed graph on M vertices with an ordered edge list.

    Construction normalizes the edge list but performs no policy checks;
    call :func:`validate` (or any operation that requires a valid graph)
    to enforce the invariants.
    """

    M: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "edges", tuple((int(a), int(b)) for a, b in self.edges)
        )

    @property
    def num_edges(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class DegreeRecord:
    """Out-, in-, and total degree of one vertex; total = out + in."""

    out_degree: int
    in_degree: int
    total: int

    def __post_init__(self):
        if self.total != self.out_degree + self.in_degree:
            raise ValueError(
                f"total degree {self.total} != {self.out_degree} + {self.in_degree}"
            )


def validate(g: DirectedGraph, allow_antiparallel: bool = False) -> None:
    """Raise unless ``g`` satisfies the structural invariants.

    Self-loops, duplicate edges, and out-of-range endpoints are always
    rejected. Antiparallel pairs (a, b)/(b, a) are rejected by default;
    ``allow_antiparallel=True`` admits them.
    """
    if g.M < 1:
        raise IndexOutOfRangeError(f"M must be positive, got {g.M}")
    seen: set[tuple[int, int]] = set()
    for a, b in g.edges:
        if not (0 <= a < g.M and 0 <= b < g.M):
            raise IndexOutOfRangeError(f"edge ({a}, {b}) out of range for M={g.M}")
        if a == b:
            raise SelfLoopError(a)
        if (a, b) in seen:
            raise DuplicateEdgeError(a, b)
        if not allow_antiparallel and (b, a) in seen:
            raise AntiparallelPairError(b, a)
        seen.add((a, b))


def has_antiparallel_pairs(g: DirectedGraph) -> bool:
    edge_set = set(g.edges)
    return any((b, a) in edge_set for a, b in g.edges)


def degrees(g: DirectedGraph) -> list[DegreeRecord]:
    """Per-vertex degree records, counting incident edges.

    Works for escape-hatch graphs too (antiparallel pairs allowed): each
    edge contributes one to its tail's out-degree and one to its head's
    in-degree.
    """
    validate(g, allow_antiparallel=True)
    out = [0] * g.M
    inc = [0] * g.M
    for a, b in g.edges:
        out[a] += 1
        inc[b] += 1
    return [DegreeRecord(o, i, o + i) for o, i in zip(out, inc)]


def generate(kind: str, M: int, params: dict | None = None, seed: int = 0) -> DirectedGraph:
    """Deterministic graph fixtures; pure function of (kind, M, params, seed).

    Kinds: path, cycle (M >= 3), star_out, star_in, complete_dag, and
    erdos_renyi with ``params={"p": float}``. The Erdos-Renyi sampler draws
    each ordered pair (a, b), a != b, with probability p in a fixed scan
    order and skips draws that would create an antiparallel pair, so the
    output always passes :func:`validate` under the default policy.
    """
    params = dict(params or {})
    if kind not in GENERATOR_KINDS:
        raise UnsupportedKindError(f"unknown kind {kind!r}; expected one of {GENERATOR_KINDS}")
    if M < 1:
        raise BadParamsError(f"M must be >= 1, got {M}")

    if kind == "erdos_renyi":
        if "p" not in params:
            raise BadParamsError("erdos_renyi requires params['p']")
        p = float(params.pop("p"))
        if not 0.0 <= p <= 1.0:
            raise BadParamsError(f"edge probability p={p} outside [0, 1]")
    if params:
        raise BadParamsError(f"unexpected params for kind {kind!r}: {sorted(params)}")

    edges: list[tuple[int, int]] = []
    if kind == "path":
        edges = [(i, i + 1) for i in range(M - 1)]
    elif kind == "cycle":
        if M < 3:
            raise BadParamsError(f"cycle needs M >= 3 (M={M} would violate edge policy)")
        edges = [(i, (i + 1) % M) for i in range(M)]
    elif kind == "star_out":
        edges = [(0, j) for j in range(1, M)]
    elif kind == "star_in":
        edges = [(j, 0) for j in range(1, M)]
    elif kind == "complete_dag":
        edges = [(i, j) for i in range(M) for j in range(i + 1, M)]
    else:  # erdos_renyi
        rng = np.random.default_rng(seed)
        present: set[tuple[int, int]] = set()
        for a in range(M):
            for b in range(M):
                if a == b:
                    continue
                # one draw per ordered pair, consumed whether or not accepted
                if rng.random() < p and (b, a) not in present:
                    present.add((a, b))
                    edges.append((a, b))

    g = DirectedGraph(M, tuple(edges))
    validate(g)
    return g


def permute(g: DirectedGraph, perm: list[int] | tuple[int, ...]) -> DirectedGraph:
    """Relabel vertices: edge (a, b) becomes (perm[a], perm[b])."""
    perm = list(perm)
    if sorted(perm) != list(range(g.M)):
        raise NotABijectionError(f"perm {perm} is not a bijection on 0..{g.M - 1}")
    return DirectedGraph(g.M, tuple((perm[a], perm[b]) for a, b in g.edges))


def reverse_edges(
    g: DirectedGraph, subset, allow_antiparallel: bool = False
) -> DirectedGraph:
    """Flip the orientation of the edges at the given indices.

    The result must still satisfy the edge policy; per-vertex total degrees
    are unchanged by construction.
    """
    idx = set(int(i) for i in subset)
    for i in idx:
        if not 0 <= i < len(g.edges):
            raise IndexOutOfRangeError(f"edge index {i} out of range (|L|={len(g.edges)})")
    new_edges = tuple(
        (b, a) if i in idx else (a, b) for i, (a, b) in enumerate(g.edges)
    )
    out = DirectedGraph(g.M, new_edges)
    validate(out, allow_antiparallel=allow_antiparallel)
    return out


def graph_hash(g: DirectedGraph) -> str:
    """SHA-256 digest of the canonical JSON form (edge order included)."""
    canon = json.dumps(to_json_dict(g), separators=(",", ":"))
    return hashlib.sha256(canon.encode("ascii")).hexdigest()


# ------------------------------------------------------------------
# Graph JSON schema: {"M": <int>, "edges": [[a, b], ...]}, 0-based;
# an optional {"labels_base": 1} requests 1-based interpretation on input.
# ------------------------------------------------------------------

def to_json_dict(g: DirectedGraph) -> dict:
    return {"M": g.M, "edges": [[a, b] for a, b in g.edges]}


def from_json_dict(obj) -> DirectedGraph:
    """Parse the graph schema; structural validation is left to the caller."""
    if not isinstance(obj, dict):
        raise ParseError(f"graph document must be a JSON object, got {type(obj).__name__}")
    unknown = set(obj) - {"M", "edges", "labels_base"}
    if unknown:
        raise ParseError(f"unknown graph keys: {sorted(unknown)}")
    if "M" not in obj or "edges" not in obj:
        raise ParseError("graph object requires keys 'M' and 'edges'")
    M = obj["M"]
    if not isinstance(M, int) or isinstance(M, bool) or M < 1:
        raise ParseError(f"'M' must be a positive integer, got {M!r}")
    base = obj.get("labels_base", 0)
    if base not in (0, 1):
        raise ParseError(f"'labels_base' must be 0 or 1, got {base!r}")
    raw = obj["edges"]
    if not isinstance(raw, list):
        raise ParseError("'edges' must be a list of [a, b] pairs")
    edges = []
    for n, e in enumerate(raw):
        if (
            not isinstance(e, list)
            or len(e) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in e)
        ):
            raise ParseError(f"edges[{n}] must be a pair of integers, got {e!r}")
        edges.append((e[0] - base, e[1] - base))
    return DirectedGraph(M, tuple(edges))


def load_graph(path, allow_antiparallel: bool = False) -> DirectedGraph:
    """Read and validate a graph JSON file."""
    with open(path, "r", encoding="utf-8") as f:
        try:
            obj = json.load(f)
        except json.JSONDecodeError as e:
            raise ParseError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    g = from_json_dict(obj)
    validate(g, allow_antiparallel=allow_antiparallel)
    return g


def dump_graph(g: DirectedGraph) -> str:
    """Canonical serialized form, newline-terminated."""
    return json.dumps(to_json_dict(g), separators=(", ", ": ")) + "\n"
