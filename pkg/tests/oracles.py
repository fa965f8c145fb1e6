"""Independent brute-force references used to pin expected values.

Everything here is deliberately written the slow, obvious way (explicit bit
loops, full 2^M x 2^M operators) and shares no code with the package
kernels, so a test comparing the two exercises genuinely different routes.
"""

import numpy as np

SIGMA = {
    "x": np.array([[0, 1], [1, 0]], dtype=complex),
    "y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "z": np.array([[1, 0], [0, -1]], dtype=complex),
}
I2 = np.eye(2, dtype=complex)


def product_amplitude(M, alpha0, alpha1, k):
    """Amplitude of basis index k in the uniform product state, bit by bit."""
    v = 1.0 + 0.0j
    for i in range(M):
        v *= alpha1 if (k >> i) & 1 else alpha0
    return v


def u4_controlled(theta, psi):
    """Two-qubit controlled gate from projectors, basis |control, target>."""
    p0 = np.array([[1, 0], [0, 0]], dtype=complex)
    p1 = np.array([[0, 0], [0, 1]], dtype=complex)
    ubar = np.exp(-1j * psi) * np.array(
        [[np.exp(1j * theta), 0], [0, np.exp(-1j * theta)]], dtype=complex
    )
    return np.kron(p0, I2) + np.kron(p1, ubar)


def dense_edge_operator(M, a, b, u4):
    """Embed a 4x4 two-qubit operator into the full 2^M space, entry by entry."""
    dim = 1 << M
    full = np.zeros((dim, dim), dtype=complex)
    rest_mask = ~((1 << a) | (1 << b))
    for k in range(dim):
        col = 2 * ((k >> a) & 1) + ((k >> b) & 1)
        for row in range(4):
            kp = (k & rest_mask) | ((row >> 1) << a) | ((row & 1) << b)
            full[kp, k] += u4[row, col]
    return full


def dense_pauli_operator(M, i, which):
    """sigma_which on qubit i as a full 2^M x 2^M matrix via kron chain."""
    full = np.array([[1.0 + 0.0j]])
    for q in range(M):
        factor = SIGMA[which] if q == i else I2
        full = np.kron(factor, full)  # qubit q becomes the next-higher bit
    return full


def pauli_expectation_dense(amps, M, i):
    """(<x>, <y>, <z>) for qubit i via full matrices, norm divided out."""
    amps = np.asarray(amps, dtype=complex)
    nrm = float(np.vdot(amps, amps).real)
    return tuple(
        float(np.vdot(amps, dense_pauli_operator(M, i, w) @ amps).real) / nrm
        for w in ("x", "y", "z")
    )


def partial_trace_1q(amps, M, i):
    """Reduced density matrix of qubit i by explicit index bookkeeping."""
    amps = np.asarray(amps, dtype=complex)
    rho = np.zeros((2, 2), dtype=complex)
    for k in range(1 << M):
        r = (k >> i) & 1
        for s in (0, 1):
            kp = (k & ~(1 << i)) | (s << i)
            rho[r, s] += amps[k] * np.conj(amps[kp])
    return rho / np.trace(rho).real


def ed_total_dense(amps, M):
    """1 - mean squared Bloch length, entirely via the dense route."""
    acc = 0.0
    for i in range(M):
        x, y, z = pauli_expectation_dense(amps, M, i)
        acc += x * x + y * y + z * z
    return 1.0 - acc / M


def random_state(rng, M):
    """Haar-ish random normalized amplitude vector."""
    v = rng.normal(size=1 << M) + 1j * rng.normal(size=1 << M)
    return v / np.linalg.norm(v)
