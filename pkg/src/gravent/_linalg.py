"""Small dense Hermitian eigensolvers (cyclic complex Jacobi).

Written out here so the 2x2/4x4 eigenvalue work of the entanglement
measures does not depend on an external linear-algebra stack; the test
suite cross-checks every routine against an independent solver.
"""

from __future__ import annotations

import math

import numpy as np


def hermitian_part(a: np.ndarray) -> np.ndarray:
    return 0.5 * (a + a.conj().T)


def _off_norm(h: np.ndarray) -> float:
    # Sum of squared off-diagonal magnitudes; the diagonal is zeroed first
    # (subtracting whole-matrix and diagonal sums would cancel to ~sqrt(eps)).
    a2 = h.real**2 + h.imag**2
    np.fill_diagonal(a2, 0.0)
    return math.sqrt(float(a2.sum()))


def eigh_jacobi(a: np.ndarray, vectors: bool = False, max_sweeps: int = 100):
    """Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi.

    Returns (w, v) with eigenvalues w ascending; v has the matching
    eigenvectors as columns when ``vectors`` is true and is None otherwise.
    Intended for the small (n <= 8) matrices used in this package.
    """
    h = np.array(a, dtype=complex)
    n = h.shape[0]
    if h.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {h.shape}")
    v = np.eye(n, dtype=complex) if vectors else None
    scale = max(float(np.sqrt(np.sum(np.abs(h) ** 2))), 1e-300)
    for _ in range(max_sweeps):
        if _off_norm(h) <= 1e-15 * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = h[p, q]
                absg = abs(g)
                if absg <= 1e-18 * scale:
                    continue
                alpha = h[p, p].real
                beta = h[q, q].real
                phase = g / absg
                tau = (beta - alpha) / (2.0 * absg)
                if tau >= 0.0:
                    t = -1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = 1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # h <- U^dag h U with U the (p, q)-plane rotation
                hp = h[:, p].copy()
                hq = h[:, q].copy()
                h[:, p] = c * hp + s * np.conj(phase) * hq
                h[:, q] = -s * phase * hp + c * hq
                hp = h[p, :].copy()
                hq = h[q, :].copy()
                h[p, :] = c * hp + s * phase * hq
                h[q, :] = -s * np.conj(phase) * hp + c * hq
                if vectors:
                    vp = v[:, p].copy()
                    vq = v[:, q].copy()
                    v[:, p] = c * vp + s * np.conj(phase) * vq
                    v[:, q] = -s * phase * vp + c * vq
    else:
        raise RuntimeError("Jacobi eigensolver failed to converge")
    w = np.diag(h).real.copy()
    order = np.argsort(w)
    w = w[order]
    if vectors:
        return w, v[:, order]
    return w, None


def eigvalsh2(a: np.ndarray) -> np.ndarray:
    """Closed-form ascending eigenvalues of a 2x2 Hermitian matrix."""
    p = a[0, 0].real
    q = a[1, 1].real
    half_trace = 0.5 * (p + q)
    radius = math.sqrt((0.5 * (p - q)) ** 2 + abs(a[0, 1]) ** 2)
    return np.array([half_trace - radius, half_trace + radius])


def sqrtm_psd(a: np.ndarray) -> np.ndarray:
    """Hermitian square root of a positive-semidefinite matrix.

    Eigenvalues in [-1e-10, 0) are treated as rounding noise and clamped
    to zero.
    """
    w, v = eigh_jacobi(hermitian_part(a), vectors=True)
    if w[0] < -1e-10:
        raise ValueError(f"matrix is not positive semidefinite (min eigenvalue {w[0]})")
    w = np.clip(w, 0.0, None)
    return (v * np.sqrt(w)) @ v.conj().T
