"""Thermal (Gibbs) states, their purifications and entropic quantities.

Populations are the native parametrization: a thermal state is a strictly
positive probability vector over the energy eigenbasis, so the basis is
always the computational one and negative temperatures are representable.
All entropies are in nats.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import qmat

# Populations must sum to one within this tolerance.
NORM_TOL = 1e-9
# Eigenvalues at or below this are treated as exact zeros inside logarithms.
EIG_CLAMP = 1e-14


@dataclass(frozen=True)
class ThermalState:
    """A full-rank diagonal Gibbs state given by its populations."""

    populations: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.populations, dtype=float).ravel()
        if g.size == 0 or np.any(g <= 0.0):
            raise ValueError("thermal populations must be strictly positive")
        if abs(g.sum() - 1.0) > NORM_TOL:
            raise ValueError(f"thermal populations must sum to 1, got {g.sum()!r}")
        object.__setattr__(self, "populations", g)

    @property
    def dim(self) -> int:
        return self.populations.size

    @property
    def g_min(self) -> float:
        return float(self.populations.min())

    @property
    def g_max(self) -> float:
        return float(self.populations.max())

    @property
    def matrix(self) -> np.ndarray:
        return np.diag(self.populations).astype(np.complex128)

    def tensor(self, other: "ThermalState") -> "ThermalState":
        """Joint thermal state of two independent systems."""
        return ThermalState(np.kron(self.populations, other.populations))


def thermofield_double(gamma: ThermalState) -> np.ndarray:
    """Canonical two-sided purification sum_i sqrt(g_i) |i>|i> as a density matrix.

    Both marginals equal gamma and every off-diagonal athermality resource of
    gamma sits in the cross correlations.
    """
    d = gamma.dim
    vec = np.zeros(d * d, dtype=np.complex128)
    for i, g in enumerate(gamma.populations):
        vec[i * d + i] = np.sqrt(g)
    return np.outer(vec, vec.conj())


def purify(gamma: ThermalState, u) -> np.ndarray:
    """General purification of gamma: rotate the second leg of the canonical one.

    The first marginal stays exactly gamma for any unitary u; choosing u from
    the Haar measure sweeps all purifications.
    """
    u = np.asarray(u, dtype=np.complex128)
    if u.shape != (gamma.dim, gamma.dim):
        raise ValueError("unitary dimension does not match the thermal state")
    if np.abs(u @ u.conj().T - np.eye(gamma.dim)).max() > 1e-9:
        raise ValueError("purification rotation is not unitary")
    w = qmat.kron(np.eye(gamma.dim), u)
    return w @ thermofield_double(gamma) @ w.conj().T


def von_neumann(rho) -> float:
    """Entropy -Tr(rho ln rho) in nats; eigenvalues below the clamp are zeros."""
    w = np.linalg.eigvalsh(qmat.require_hermitian(rho))
    w = w[w > EIG_CLAMP]
    return float(-(w * np.log(w)).sum())


def rel_entropy(rho, sigma) -> float:
    """Relative entropy Tr(rho ln rho) - Tr(rho ln sigma) in nats.

    Raises when the support of rho escapes the support of sigma, where the
    quantity diverges.
    """
    rho = qmat.require_hermitian(rho)
    wr, vr = np.linalg.eigh(rho)
    ws, vs = np.linalg.eigh(qmat.require_hermitian(sigma))
    kernel = vs[:, ws <= EIG_CLAMP]
    if kernel.size:
        leak = float(np.real(np.einsum("ai,ab,bi->", kernel.conj(), rho, kernel)))
        if leak > 1e-12:
            raise ValueError(f"support violation: rho leaks {leak:.3e} outside sigma")
    wr_pos = wr[wr > EIG_CLAMP]
    first = float((wr_pos * np.log(wr_pos)).sum())
    # Tr(rho ln sigma) evaluated in sigma's eigenbasis; kernel components of
    # rho are zero there by the support check.
    overlap = np.real(np.einsum("ai,ab,bi->i", vs.conj(), rho, vs))
    keep = ws > EIG_CLAMP
    second = float((overlap[keep] * np.log(ws[keep])).sum())
    return first - second


def mutual_information(rho_ab, dims) -> float:
    """I(A:B) = S(A) + S(B) - S(AB) for a bipartite state with local dims."""
    da, db = (int(x) for x in dims)
    rho_a = qmat.partial_trace(rho_ab, (da, db), keep=(0,))
    rho_b = qmat.partial_trace(rho_ab, (da, db), keep=(1,))
    return von_neumann(rho_a) + von_neumann(rho_b) - von_neumann(rho_ab)


def d_max(rho, sigma) -> float:
    """Max-relative entropy ln min{lam | rho <= lam*sigma} in nats.

    Requires sigma to be positive definite on the support of rho; full-rank
    sigma is assumed (herm_pow raises otherwise).
    """
    s_inv = qmat.herm_pow(sigma, -0.5)
    lam = float(np.linalg.eigvalsh(qmat.hermitianize(s_inv @ np.asarray(rho, dtype=np.complex128) @ s_inv))[-1])
    if lam <= 0.0:
        raise ValueError("d_max needs a nonzero PSD first argument")
    return float(np.log(lam))


def mutual_info_at_tfd(ch, gamma: ThermalState) -> float:
    """Mutual information of (identity (x) channel) applied to the canonical
    purification of gamma; the channel acts on the second leg."""
    from . import channels

    if ch.d_in != gamma.dim:
        raise ValueError("channel input dimension does not match gamma")
    lifted = channels.tensor(channels.make_identity(gamma.dim), ch)
    out = channels.apply(lifted, thermofield_double(gamma))
    return mutual_information(out, (gamma.dim, ch.d_out))
