"""Entanglement quantification for two-qubit states and density matrices.

Provides the von Neumann entropy of the reduced state (numeric route and
the closed form driven by the residual entangling phase), Wootters
concurrence, negativity of the partial transpose (zero iff separable for
two qubits) and the spin-correlation witness |<sx sz> - <sy sy>| in its
fixed-frame and frame-optimized variants. The frame-optimized witness is
the Ky Fan 2-norm of the 3x3 correlation matrix: it bounds the whole
witness family over local measurement frames and stays at or below 1 for
every separable state.
"""

from __future__ import annotations

import math

import numpy as np

from ._linalg import eigh_jacobi, eigvalsh2, hermitian_part, sqrtm_psd
from .interferometer import ExperimentConfig, evolve, residual_entangling_phase

SIGMA_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex)
SIGMA_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)
_PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)
_SYSY = np.kron(SIGMA_Y, SIGMA_Y)
_PAULI_PAIRS = np.array([[np.kron(si, sj) for sj in _PAULIS] for si in _PAULIS])

# Eigenvalues in [-1e-10, 0) are rounding noise on a PSD matrix; anything
# smaller in magnitude than 1e-13 is treated as zero before square roots.
PSD_TOL = 1e-10
_CLAMP = 1e-13


def density_matrix(state: np.ndarray) -> np.ndarray:
    """Rank-1 projector |psi><psi| of a normalized two-qubit state."""
    psi = np.asarray(state, dtype=complex).reshape(-1)
    if psi.shape != (4,):
        raise ValueError(f"expected 4 amplitudes, got shape {np.shape(state)}")
    norm = float(np.sum(np.abs(psi) ** 2))
    if abs(norm - 1.0) > 1e-12:
        raise ValueError(f"state is not normalized: |psi|^2 = {norm}")
    return np.outer(psi, psi.conj())


def _check_density_matrix(rho: np.ndarray, dim: int = 4) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-12:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > 1e-12:
        raise ValueError(f"density matrix trace is {np.trace(rho)}, not 1")
    return rho


def validate_density_matrix(rho: np.ndarray, dim: int = 4) -> np.ndarray:
    """Full check: Hermitian, unit trace and positive semidefinite."""
    rho = _check_density_matrix(rho, dim)
    w = eigvalsh2(rho) if dim == 2 else eigh_jacobi(rho)[0]
    if w[0] < -PSD_TOL:
        raise ValueError(f"density matrix has negative eigenvalue {w[0]}")
    return rho


def partial_trace_B(rho: np.ndarray) -> np.ndarray:
    """Reduced 2x2 state of the first qubit, Tr_B[rho]."""
    rho = _check_density_matrix(rho)
    return np.einsum("abcb->ac", rho.reshape(2, 2, 2, 2))


def von_neumann_entropy(rho_a: np.ndarray) -> float:
    """Entropy -sum lambda log2 lambda of a single-qubit state, in bits."""
    rho_a = _check_density_matrix(rho_a, dim=2)
    entropy = 0.0
    for lam in eigvalsh2(rho_a):
        if lam < -PSD_TOL:
            raise ValueError(f"density matrix has negative eigenvalue {lam}")
        if lam > 0.0:
            entropy -= lam * math.log2(lam)
    return max(0.0, entropy)


def entropy_closed_form(config: ExperimentConfig) -> float:
    """Entanglement entropy in bits straight from the residual phase Delta.

    lambda_pm = 1/2 +- (1/2) sqrt((1 + cos Delta) / 2); agrees with the
    numeric evolve/trace/eigenvalue route to 1e-12.
    """
    delta = residual_entangling_phase(config)
    radius = 0.5 * math.sqrt(0.5 * (1.0 + math.cos(delta)))
    entropy = 0.0
    for lam in (0.5 - radius, 0.5 + radius):
        if lam > 0.0:
            entropy -= lam * math.log2(lam)
    return max(0.0, entropy)


def concurrence(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix, in [0, 1].

    max{0, l1 - l2 - l3 - l4} with l_i the descending square roots of the
    eigenvalues of rho rho~, rho~ = (sy x sy) rho* (sy x sy); computed via
    the Hermitian product sqrt(rho) rho~ sqrt(rho).
    """
    rho = _check_density_matrix(rho)
    rho_tilde = _SYSY @ rho.conj() @ _SYSY
    root = sqrtm_psd(rho)
    w, _ = eigh_jacobi(hermitian_part(root @ rho_tilde @ root))
    w = np.where(np.abs(w) < _CLAMP, 0.0, w)
    if w[0] < -PSD_TOL:
        raise ValueError(f"rho rho~ produced negative eigenvalue {w[0]}")
    lams = np.sqrt(np.clip(w, 0.0, None))[::-1]
    return max(0.0, float(lams[0] - lams[1] - lams[2] - lams[3]))


def correlation_matrix(rho: np.ndarray) -> np.ndarray:
    """3x3 real matrix T_ij = Tr[rho (sigma_i x sigma_j)], i, j in {x, y, z}."""
    rho = _check_density_matrix(rho)
    return np.einsum("ab,ijba->ij", rho, _PAULI_PAIRS).real


def witness_fixed_frame(rho: np.ndarray) -> float:
    """|<sigma_x sigma_z> - <sigma_y sigma_y>| in the computational frame."""
    t = correlation_matrix(rho)
    return abs(t[0, 2] - t[1, 1])


def witness_optimized(rho: np.ndarray) -> float:
    """Best value of the witness over all local measurement frames.

    Equals the sum of the two largest singular values of the correlation
    matrix; above 1 only for entangled states, and 1 + concurrence for
    pure states.
    """
    t = correlation_matrix(rho)
    w, _ = eigh_jacobi(t.T @ t)
    w = np.where(np.abs(w) < _CLAMP, 0.0, w)  # rank-deficient T: kill sqrt noise
    singular = np.sqrt(np.clip(w, 0.0, None))
    return float(singular[-1] + singular[-2])


def negativity(rho: np.ndarray) -> float:
    """Sum of |negative eigenvalues| of the partial transpose.

    Zero iff the two-qubit state is separable; eigenvalues above -1e-10
    count as rounding noise and clamp to zero.
    """
    rho = _check_density_matrix(rho)
    pt = rho.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)
    w, _ = eigh_jacobi(pt)
    return float(-np.sum(w[w < -PSD_TOL]))


def evolve_density_matrix(config: ExperimentConfig) -> np.ndarray:
    """Convenience wrapper: density matrix of the evolved two-qubit state."""
    return density_matrix(evolve(config))
