"""Entanglement distance (ED) of edge-gated graph states, two ways.

The ED per qubit of a pure state is 1 minus the mean squared Bloch-vector
length over the qubits: 0 for product states, 1 when every single-qubit
reduced state is maximally mixed. For states built by
:func:`~digraph_ed.statevector.build_graph_state` from a policy-valid graph
the measure collapses to a function of the degree sequence alone,

    E = 1 - (1/M) * sum_i cos(theta)^(2 d(i)),

independent of psi, of edge orientations, and of vertex labels. This module
computes ED from first principles (Pauli expectations on the statevector),
evaluates the closed form, and provides the sweep and verification helpers
used to check one against the other.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from . import digraph
from .digraph import DirectedGraph
from .errors import BadGridError, NegativeEigenvalueError, PolicyViolationError
from .statevector import (
    DensityMatrix1Q,
    GateParams,
    PureState,
    PauliVector,
    build_graph_state,
    pauli_expectation,
    reduced_density_1q,
)

#: Closed form vs statevector agreement threshold; absorbs 2^M-term rounding.
DISCREPANCY_TOL = 1e-10

ALPHA_INV_SQRT2 = 2**-0.5


def fmt17(x: float) -> str:
    """Floating-point text at 17 significant digits (round-trip exact)."""
    return format(float(x), ".17g")


@dataclass(frozen=True)
class EDReport:
    """Per-vertex and total ED for one graph, with the closed-form cross-check.

    ``total_closed_form`` and ``discrepancy`` are None when the graph was
    admitted under the antiparallel escape hatch, which the closed form does
    not cover.
    """

    per_vertex: tuple[float, ...]
    total_statevector: float
    total_closed_form: float | None
    discrepancy: float | None
    graph_hash: str
    gp: GateParams
    policy: str
    seed_info: str = ""

    def to_json(self) -> str:
        """Serialize with fixed key names and 17-significant-digit floats."""
        cf = "null" if self.total_closed_form is None else fmt17(self.total_closed_form)
        disc = "null" if self.discrepancy is None else fmt17(self.discrepancy)
        fields = [
            ('"per_vertex": [' + ", ".join(fmt17(v) for v in self.per_vertex) + "]"),
            f'"total_sv": {fmt17(self.total_statevector)}',
            f'"total_cf": {cf}',
            f'"discrepancy": {disc}',
            f'"theta": {fmt17(self.gp.theta)}',
            f'"psi": {fmt17(self.gp.psi)}',
            f'"graph_hash": {json.dumps(self.graph_hash)}',
            f'"policy": {json.dumps(self.policy)}',
            f'"seed_info": {json.dumps(self.seed_info)}',
        ]
        return "{" + ", ".join(fields) + "}"


@dataclass(frozen=True)
class SweepResult:
    """Samples of (parameter, E, S, D_HS) along one axis, with grid extrema.

    ``degenerate`` marks a flat E profile (e.g. theta = 0, where no
    entanglement is generated at any parameter value), in which case the
    extremum fields are reported but carry no information.
    """

    axis: str
    samples: tuple[tuple[float, float, float, float], ...]
    argmax_E: float
    argmax_S: float
    argmin_DHS: float
    degenerate: bool


def ed_per_vertex(state: PureState, i: int) -> float:
    """Contribution of qubit i: 1 - |Bloch vector|^2, in [0, 1]."""
    return 1.0 - pauli_expectation(state, i).norm_sq


def ed_total(state: PureState) -> float:
    """ED per qubit: 1 - mean over qubits of the squared Bloch length."""
    acc = 0.0
    for i in range(state.M):
        acc += pauli_expectation(state, i).norm_sq
    return 1.0 - acc / state.M


def ed_closed_form(g: DirectedGraph, theta: float) -> float:
    """Degree-only evaluation: 1 - (1/M) sum_i cos(theta)^(2 d(i)).

    Uses total degrees only, so it is independent of psi and of edge
    orientations by construction. Refused (PolicyViolationError) for graphs
    with antiparallel pairs: repeated interaction between the same two
    vertices falls outside the cos^(2d) law, and callers must use
    :func:`ed_total` on the built state instead.
    """
    digraph.validate(g, allow_antiparallel=True)
    if digraph.has_antiparallel_pairs(g):
        raise PolicyViolationError(
            "closed form refused: graph has antiparallel pairs; use the statevector route"
        )
    c = math.cos(theta)
    acc = 0.0
    for rec in digraph.degrees(g):
        acc += c ** (2 * rec.total)
    return 1.0 - acc / g.M


def pauli_vector_closed_form(d_out: int, d_in: int, gp: GateParams) -> PauliVector:
    """Bloch vector of a vertex with d_out outgoing and d_in incoming edges.

    cos(theta)^(d_out + d_in) * (cos(phi), -sin(phi), 0), where the phase
    accumulates psi once per outgoing (control-side) edge and theta once per
    incoming (target-side) edge: phi = d_out*psi + d_in*theta. The phase
    composition is pinned against the statevector route in the test suite;
    the squared length depends on the total degree only.
    """
    if d_out < 0 or d_in < 0:
        raise ValueError(f"degrees must be non-negative, got ({d_out}, {d_in})")
    r = math.cos(gp.theta) ** (d_out + d_in)
    phi = d_out * gp.psi + d_in * gp.theta
    return PauliVector(r * math.cos(phi), -r * math.sin(phi), 0.0)


def hs_distance(rho: DensityMatrix1Q) -> float:
    """Hilbert-Schmidt distance of rho from the maximally mixed state I/2."""
    d = rho.matrix - 0.5 * np.eye(2)
    return math.sqrt(0.5 * float(np.sum(np.abs(d) ** 2)))


def von_neumann_entropy(rho: DensityMatrix1Q) -> float:
    """-tr[rho ln rho] in nats, with 0 ln 0 := 0; ranges over [0, ln 2].

    Eigenvalues below -1e-10 raise; tiny negatives from rounding are
    clamped to zero.
    """
    s = 0.0
    for lam in rho.eigenvalues():
        if lam < -1e-10:
            raise NegativeEigenvalueError(f"eigenvalue {lam} below -1e-10")
        lam = min(max(lam, 0.0), 1.0)
        if lam > 0.0:
            s -= lam * math.log(lam)
    return s


def alpha_sweep(gp: GateParams, grid: int) -> SweepResult:
    """Initial-state sweep on the two-qubit single-edge graph.

    For t on a uniform grid over [0, 1], builds the state from
    alpha0 = sqrt(t), alpha1 = sqrt(1 - t) (real non-negative amplitudes
    suffice; phases are checked irrelevant in the tests) and records the
    total ED, the entropy, and the HS distance of qubit 0's reduced state.
    Extrema are reported at grid resolution, no interpolation.
    """
    if grid < 3:
        raise BadGridError(f"grid must be >= 3, got {grid}")
    g = DirectedGraph(2, ((0, 1),))
    samples = []
    for j in range(grid):
        t = j / (grid - 1)
        state = build_graph_state(g, gp, math.sqrt(t), math.sqrt(1.0 - t))
        rho = reduced_density_1q(state, 0)
        samples.append((t, ed_total(state), von_neumann_entropy(rho), hs_distance(rho)))
    e_vals = [s[1] for s in samples]
    s_vals = [s[2] for s in samples]
    d_vals = [s[3] for s in samples]
    return SweepResult(
        axis="alpha",
        samples=tuple(samples),
        argmax_E=samples[int(np.argmax(e_vals))][0],
        argmax_S=samples[int(np.argmax(s_vals))][0],
        argmin_DHS=samples[int(np.argmin(d_vals))][0],
        degenerate=(max(e_vals) - min(e_vals)) < 1e-12,
    )


def verify_graph(
    g: DirectedGraph,
    gp: GateParams,
    allow_antiparallel: bool = False,
    seed_info: str = "",
) -> EDReport:
    """Dual-route ED for one graph at the balanced initial state.

    Builds the state with alpha0 = alpha1 = 1/sqrt(2), computes per-vertex
    and total ED from Pauli expectations, and evaluates the closed form
    whenever the policy permits; the recorded discrepancy stays below
    ``DISCREPANCY_TOL`` for every policy-conforming graph.
    """
    digraph.validate(g, allow_antiparallel=allow_antiparallel)
    state = build_graph_state(
        g, gp, ALPHA_INV_SQRT2, ALPHA_INV_SQRT2, allow_antiparallel=allow_antiparallel
    )
    per_vertex = tuple(ed_per_vertex(state, i) for i in range(g.M))
    total_sv = ed_total(state)
    if digraph.has_antiparallel_pairs(g):
        total_cf = None
        disc = None
        policy = "allow_antiparallel"
    else:
        total_cf = ed_closed_form(g, gp.theta)
        disc = abs(total_sv - total_cf)
        policy = "default"
    return EDReport(
        per_vertex=per_vertex,
        total_statevector=total_sv,
        total_closed_form=total_cf,
        discrepancy=disc,
        graph_hash=digraph.graph_hash(g),
        gp=gp,
        policy=policy,
        seed_info=seed_info,
    )
