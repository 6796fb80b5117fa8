"""Dense complex matrix helpers: Hermitian eigensystems, tensor products,
partial traces, matrix powers and the norms used throughout the package.

All functions accept array-likes and work on complex128 ndarrays. Matrices
are row-major and never carry hidden state; Hermiticity is checked where the
math requires it instead of being tracked by a flag.
"""
from __future__ import annotations

import numpy as np

# Absolute floor added to the scale-aware Hermiticity / PSD tolerances.
ATOL = 1e-10


def asmatrix(m) -> np.ndarray:
    """Return m as a square complex128 ndarray."""
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def dag(m) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(m).conj().T


def hermitianize(m) -> np.ndarray:
    """Return the Hermitian part (m + m^dagger)/2."""
    a = asmatrix(m)
    return 0.5 * (a + a.conj().T)


def require_hermitian(m, tol: float = ATOL) -> np.ndarray:
    """Return m hermitianized, raising if it deviates beyond tol (scale-aware)."""
    a = asmatrix(m)
    scale = 1.0 + np.abs(a).max(initial=0.0)
    dev = np.abs(a - a.conj().T).max(initial=0.0)
    if dev > tol * scale:
        raise ValueError(f"matrix is not Hermitian: max deviation {dev:.3e}")
    return 0.5 * (a + a.conj().T)


def eig_hermitian(m) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, real) and eigenvector columns of a Hermitian matrix."""
    a = require_hermitian(m)
    w, v = np.linalg.eigh(a)
    return w, v


def kron(*ms) -> np.ndarray:
    """Tensor (Kronecker) product of one or more matrices, left to right."""
    out = np.asarray(ms[0], dtype=np.complex128)
    for m in ms[1:]:
        out = np.kron(out, np.asarray(m, dtype=np.complex128))
    return out


def partial_trace(m, dims, keep) -> np.ndarray:
    """Trace out all tensor factors of m not listed in keep.

    dims gives the local dimensions in tensor order; keep is an iterable of
    factor indices to retain, in their original order. The result acts on the
    kept factors only.
    """
    a = asmatrix(m)
    dims = tuple(int(d) for d in dims)
    n = len(dims)
    if a.shape[0] != int(np.prod(dims)):
        raise ValueError(f"dims {dims} do not match matrix size {a.shape[0]}")
    keep = sorted(int(k) for k in keep)
    if any(k < 0 or k >= n for k in keep):
        raise ValueError(f"keep indices {keep} out of range for {n} factors")
    t = a.reshape(dims + dims)
    # Row factor k carries label k; its column partner carries n+k when kept
    # and k (forcing the contraction) when traced out.
    row = list(range(n))
    col = [n + k if k in keep else k for k in range(n)]
    out = [k for k in keep] + [n + k for k in keep]
    dk = int(np.prod([dims[k] for k in keep])) if keep else 1
    return np.einsum(t, row + col, out).reshape(dk, dk)


def psd_min_eig(m) -> float:
    """Smallest eigenvalue of a Hermitian matrix (PSD check helper)."""
    a = require_hermitian(m)
    return float(np.linalg.eigvalsh(a)[0])


def herm_pow(m, p: float) -> np.ndarray:
    """Matrix power of a Hermitian matrix through its eigensystem.

    Fractional powers clamp eigenvalues in [-1e-12, 0) to zero; negative
    powers require every eigenvalue to exceed 1e-12.
    """
    w, v = eig_hermitian(m)
    if p < 0:
        if w.min(initial=np.inf) <= 1e-12:
            raise ValueError(
                f"negative power needs eigenvalues > 1e-12, got min {w.min():.3e}")
    elif abs(p - round(p)) > 1e-12:
        if w.min(initial=0.0) < -1e-12:
            raise ValueError(
                f"fractional power of an indefinite matrix (min eig {w.min():.3e})")
        w = np.clip(w, 0.0, None)
    return (v * np.power(w, p)) @ v.conj().T


def trace_norm(m) -> float:
    """Sum of singular values."""
    a = np.asarray(m, dtype=np.complex128)
    return float(np.linalg.svd(a, compute_uv=False).sum())


def op_norm(m) -> float:
    """Largest absolute eigenvalue of a Hermitian matrix."""
    a = require_hermitian(m)
    w = np.linalg.eigvalsh(a)
    return float(max(abs(w[0]), abs(w[-1])))
