"""Dense 2^M-amplitude pure-state engine for edge-gated product states.

Bit convention, used everywhere in this package: amplitude index k encodes
the basis ket whose qubit-i value is bit i of k (little-endian; qubit 0 is
the least significant bit). In a reshaped ``(2,)*M`` view, qubit i therefore
lives on axis ``M - 1 - i``.

The only production gate is the diagonal two-qubit edge gate

    controlled-U(theta, psi):  |0c> -> |0c>,
                               |10> -> e^{i(theta-psi)} |10>,
                               |11> -> e^{-i(theta+psi)} |11>,

with the first slot the control. Because it is diagonal, application is a
per-amplitude phase multiply: exactly unitary, order-free across edges. A
generic dense 4x4 two-qubit path is kept alongside purely so tests can
cross-validate the fast kernel against straight matrix arithmetic.

States are never renormalized; norm drift beyond 1e-9 raises, since with
phase-only gates any drift signals a kernel bug.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digraph import DirectedGraph, validate
from .errors import (
    BadParamsError,
    CapacityError,
    IndexOutOfRangeError,
    NotNormalizedError,
    SelfLoopError,
)

#: Default qubit cap: 2^24 complex amplitudes = 256 MiB, the desk-scale bound.
DEFAULT_MAX_QUBITS = 24

_TWO_PI = 2.0 * math.pi
_NORM_TOL = 1e-9


def _canonical_angle(x: float) -> float:
    # maps to [-pi, pi)
    return (float(x) + math.pi) % _TWO_PI - math.pi


@dataclass(frozen=True)
class GateParams:
    """Angles (theta, psi) of the edge gate, canonicalized into [-pi, pi)."""

    theta: float
    psi: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.theta) and math.isfinite(self.psi)):
            raise BadParamsError(f"gate angles must be finite, got ({self.theta}, {self.psi})")
        object.__setattr__(self, "theta", _canonical_angle(self.theta))
        object.__setattr__(self, "psi", _canonical_angle(self.psi))


@dataclass(frozen=True)
class PureState:
    """Normalized vector of 2^M complex amplitudes (see module bit convention).

    The amplitude array is frozen on construction and the unit norm is
    checked to 1e-9; it is never silently repaired.
    """

    M: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=np.complex128)
        if self.M < 1:
            raise IndexOutOfRangeError(f"M must be positive, got {self.M}")
        if amps.shape != (1 << self.M,):
            raise NotNormalizedError(
                f"expected {1 << self.M} amplitudes for M={self.M}, got shape {amps.shape}"
            )
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > _NORM_TOL:
            raise NotNormalizedError(f"state norm^2 = {norm_sq!r} deviates from 1 beyond {_NORM_TOL}")
        amps = amps.copy()
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)

    def qubit_slices(self, i: int) -> tuple[np.ndarray, np.ndarray]:
        """Views of the amplitudes with qubit i fixed to 0 and to 1."""
        if not 0 <= i < self.M:
            raise IndexOutOfRangeError(f"qubit {i} out of range for M={self.M}")
        view = self.amplitudes.reshape((2,) * self.M)
        sel: list = [slice(None)] * self.M
        sel[self.M - 1 - i] = 0
        a0 = view[tuple(sel)]
        sel[self.M - 1 - i] = 1
        a1 = view[tuple(sel)]
        return a0, a1


@dataclass(frozen=True)
class PauliVector:
    """Single-qubit expectations (<x>, <y>, <z>); length bounded by the Bloch ball."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        if self.norm_sq > 1.0 + 1e-9:
            raise ValueError(f"Bloch bound violated: |v|^2 = {self.norm_sq}")

    @property
    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y + self.z * self.z


@dataclass(frozen=True)
class DensityMatrix1Q:
    """One-qubit density matrix as four entries; Hermitian with unit trace."""

    rho00: complex
    rho01: complex
    rho10: complex
    rho11: complex

    def __post_init__(self):
        if abs(self.rho10 - np.conj(self.rho01)) > 1e-12:
            raise ValueError("density matrix is not Hermitian: rho10 != conj(rho01)")
        if abs(self.rho00.imag) > 1e-12 or abs(self.rho11.imag) > 1e-12:
            raise ValueError("diagonal of a density matrix must be real")
        if abs(self.rho00 + self.rho11 - 1.0) > 1e-10:
            raise ValueError(f"trace {self.rho00 + self.rho11} deviates from 1 beyond 1e-10")

    @classmethod
    def from_matrix(cls, m) -> "DensityMatrix1Q":
        m = np.asarray(m, dtype=np.complex128)
        if m.shape != (2, 2):
            raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
        return cls(complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0]), complex(m[1, 1]))

    @property
    def matrix(self) -> np.ndarray:
        return np.array([[self.rho00, self.rho01], [self.rho10, self.rho11]], dtype=np.complex128)

    def eigenvalues(self) -> tuple[float, float]:
        """Both eigenvalues, ascending, from the closed 2x2 Hermitian form."""
        mean = (self.rho00.real + self.rho11.real) / 2.0
        half_gap = (self.rho00.real - self.rho11.real) / 2.0
        disc = math.hypot(half_gap, abs(self.rho01))
        return (mean - disc, mean + disc)


def edge_gate_matrix(gp: GateParams) -> np.ndarray:
    """The edge gate as a 4x4 matrix in the basis |control, target>."""
    return np.diag(
        [
            1.0,
            1.0,
            np.exp(1j * (gp.theta - gp.psi)),
            np.exp(-1j * (gp.theta + gp.psi)),
        ]
    ).astype(np.complex128)


def init_product_state(
    M: int,
    alpha0: complex,
    alpha1: complex,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> PureState:
    """Uniform product state: every qubit in alpha0|0> + alpha1|1>.

    Amplitude at index k is the product over qubits of alpha0 or alpha1
    according to bit i of k. Requires |alpha0|^2 + |alpha1|^2 = 1 to 1e-12.
    """
    if M < 1:
        raise IndexOutOfRangeError(f"M must be positive, got {M}")
    if M > max_qubits:
        raise CapacityError(M, max_qubits)
    alpha0 = complex(alpha0)
    alpha1 = complex(alpha1)
    nrm = abs(alpha0) ** 2 + abs(alpha1) ** 2
    if abs(nrm - 1.0) > 1e-12:
        raise NotNormalizedError(f"|alpha0|^2 + |alpha1|^2 = {nrm!r} deviates from 1 beyond 1e-12")
    qubit = np.array([alpha0, alpha1], dtype=np.complex128)
    amps = np.array([1.0 + 0.0j])
    for _ in range(M):
        amps = np.kron(qubit, amps)  # new qubit becomes the next-higher bit
    return PureState(M, amps)


def _check_edge(M: int, edge: tuple[int, int]) -> tuple[int, int]:
    a, b = int(edge[0]), int(edge[1])
    if not (0 <= a < M and 0 <= b < M):
        raise IndexOutOfRangeError(f"edge ({a}, {b}) out of range for M={M}")
    if a == b:
        raise SelfLoopError(a)
    return a, b


def apply_edge_gate(state: PureState, edge: tuple[int, int], gp: GateParams) -> PureState:
    """Diagonal fast path: multiply phases on the control=1 half of the state.

    Index k with bit_a(k)=1 picks up e^{i(theta-psi)} when bit_b(k)=0 and
    e^{-i(theta+psi)} when bit_b(k)=1; everything else is untouched, so the
    norm is preserved exactly.
    """
    a, b = _check_edge(state.M, edge)
    amps = state.amplitudes.copy()
    view = amps.reshape((2,) * state.M)
    sel: list = [slice(None)] * state.M
    sel[state.M - 1 - a] = 1
    sel[state.M - 1 - b] = 0
    view[tuple(sel)] *= np.exp(1j * (gp.theta - gp.psi))
    sel[state.M - 1 - b] = 1
    view[tuple(sel)] *= np.exp(-1j * (gp.theta + gp.psi))
    return PureState(state.M, amps)


def _apply_two_qubit_dense_raw(
    amps: np.ndarray, M: int, a: int, b: int, matrix: np.ndarray
) -> np.ndarray:
    view = amps.reshape((2,) * M)
    moved = np.moveaxis(view, (M - 1 - a, M - 1 - b), (0, 1)).reshape(4, -1)
    out = np.asarray(matrix, dtype=np.complex128) @ moved
    out = out.reshape((2, 2) + (2,) * (M - 2))
    return np.moveaxis(out, (0, 1), (M - 1 - a, M - 1 - b)).reshape(-1)


def apply_two_qubit_dense(
    state: PureState, edge: tuple[int, int], matrix: np.ndarray
) -> PureState:
    """Generic dense 4x4 two-qubit gate; the cross-validation route.

    ``matrix`` is indexed in the |first, second> basis (row 2*v_a + v_b).
    Deliberately takes no shortcuts for diagonal input.
    """
    a, b = _check_edge(state.M, edge)
    return PureState(state.M, _apply_two_qubit_dense_raw(state.amplitudes, state.M, a, b, matrix))


def build_graph_state(
    g: DirectedGraph,
    gp: GateParams,
    alpha0: complex = 2**-0.5,
    alpha1: complex = 2**-0.5,
    allow_antiparallel: bool = False,
    max_qubits: int = DEFAULT_MAX_QUBITS,
) -> PureState:
    """Apply one edge gate per edge of ``g`` to the uniform product state.

    All edge gates are diagonal, hence mutually commuting: the result does
    not depend on the edge order.
    """
    validate(g, allow_antiparallel=allow_antiparallel)
    state = init_product_state(g.M, alpha0, alpha1, max_qubits=max_qubits)
    for edge in g.edges:
        state = apply_edge_gate(state, edge, gp)
    return state


def pauli_expectation(state: PureState, i: int) -> PauliVector:
    """Expectations of the three Pauli operators on qubit i.

    With a0/a1 the amplitude blocks where bit i is 0/1:
        x + i y = 2 * sum(conj(a0) * a1)   (y sign fixed by sigma_y|0> = i|1>)
        z       = |a0|^2 - |a1|^2
    Each component is divided by <psi|psi> (a Rayleigh quotient). The state
    is already unit-norm to 1e-9 and no amplitude is ever modified; the
    division only stops ulp-level norm rounding from leaking into the
    expectations, e.g. it pins the separable reference point of the ED to
    zero exactly.
    """
    a0, a1 = state.qubit_slices(i)
    t = np.vdot(a0, a1)
    p0 = float(np.vdot(a0, a0).real)
    p1 = float(np.vdot(a1, a1).real)
    nrm = p0 + p1
    return PauliVector(2.0 * t.real / nrm, 2.0 * t.imag / nrm, (p0 - p1) / nrm)


def reduced_density_1q(state: PureState, i: int) -> DensityMatrix1Q:
    """Single-qubit reduced density matrix by partial trace over the rest.

    Entries are divided by the raw trace (the squared state norm) so the
    result traces to one exactly in the common case; this matches the
    Rayleigh-quotient convention of :func:`pauli_expectation`.
    """
    a0, a1 = state.qubit_slices(i)
    p0 = float(np.vdot(a0, a0).real)
    p1 = float(np.vdot(a1, a1).real)
    tr = p0 + p1
    rho01 = complex(np.vdot(a1, a0)) / tr  # sum a0 * conj(a1), normalized
    return DensityMatrix1Q(complex(p0 / tr), rho01, np.conj(rho01), complex(p1 / tr))


def dump_amplitudes(state: PureState) -> str:
    """Debug dump: JSON array of [re, im] pairs in amplitude-index order."""
    pairs = ", ".join(f"[{float(a.real)!r}, {float(a.imag)!r}]" for a in state.amplitudes)
    return "[" + pairs + "]"


def commutation_check(gp: GateParams) -> float:
    """Max entrywise magnitude over pairwise commutators of U01, U12, U02.

    The three-qubit 8x8 operators are assembled column by column through the
    dense gate path (no diagonality assumed); the contract is a result below
    1e-14 for every parameter choice, since the gates are in fact diagonal.
    """
    u4 = edge_gate_matrix(gp)
    ops = []
    for a, b in ((0, 1), (1, 2), (0, 2)):
        cols = []
        for k in range(8):
            e = np.zeros(8, dtype=np.complex128)
            e[k] = 1.0
            cols.append(_apply_two_qubit_dense_raw(e, 3, a, b, u4))
        ops.append(np.column_stack(cols))
    worst = 0.0
    for m in range(3):
        for n in range(m + 1, 3):
            comm = ops[m] @ ops[n] - ops[n] @ ops[m]
            worst = max(worst, float(np.max(np.abs(comm))))
    return worst
