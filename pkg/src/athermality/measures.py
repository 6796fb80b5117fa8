"""Resource measures of states and channels relative to a thermal reference:
athermality (r_t), signalling (r_s), the joint channel measure (r_joint) and
its restriction to Gibbs-preserving channels (p_t).

r_t and r_joint reduce to extreme eigenvalues of Gibbs-conjugated operators
and are computed exactly; r_s has no closed form and is always delegated to
the interior-point solver. All measures return the robustness itself (the
optimal mixing weight), not 1 + robustness.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import channels, qmat, sdpsolve
from .channels import QuantumChannel
from .thermo import ThermalState


def _thermal(gamma) -> ThermalState:
    return gamma if isinstance(gamma, ThermalState) else ThermalState(np.asarray(gamma, dtype=float))


def _conjugated(rho, gamma: ThermalState) -> np.ndarray:
    g_isqrt = np.diag(1.0 / np.sqrt(gamma.populations))
    return qmat.hermitianize(g_isqrt @ np.asarray(rho, dtype=np.complex128) @ g_isqrt)


def r_t_state(rho, gamma) -> float:
    """Athermality robustness of a state: largest eigenvalue of
    gamma^{-1/2} rho gamma^{-1/2}, minus one."""
    gamma = _thermal(gamma)
    rho = qmat.require_hermitian(rho)
    if rho.shape[0] != gamma.dim:
        raise ValueError("state and thermal state dimensions differ")
    return float(np.linalg.eigvalsh(_conjugated(rho, gamma))[-1]) - 1.0


def r_t_state_dual(rho, gamma) -> tuple[float, np.ndarray]:
    """Optimal value together with a rank-1 dual witness S.

    S is built from the top eigenvector of the Gibbs-conjugated state; it
    satisfies S >= 0, Tr(S gamma) = 1 and Tr(S rho) = 1 + r_t_state(rho).
    """
    gamma = _thermal(gamma)
    rho = qmat.require_hermitian(rho)
    w, v = np.linalg.eigh(_conjugated(rho, gamma))
    g_isqrt = np.diag(1.0 / np.sqrt(gamma.populations))
    top = g_isqrt @ v[:, -1]
    witness = np.outer(top, top.conj())
    return float(w[-1]) - 1.0, witness


def r_t_channel(ch: QuantumChannel, gamma_in, gamma_out) -> float:
    """Athermality robustness of a channel: that of its thermal output.

    Mixing the channel toward Gibbs-preserving maps costs exactly as much as
    mixing its image of the thermal input toward the output Gibbs state, so
    the channel quantity collapses to the state one.
    """
    gamma_in = _thermal(gamma_in)
    gamma_out = _thermal(gamma_out)
    if gamma_in.dim != ch.d_in:
        raise ValueError("input Gibbs dimension does not match the channel")
    return r_t_state(channels.apply(ch, gamma_in.matrix), gamma_out)


def r_joint(ch: QuantumChannel, gamma_out) -> float:
    """Joint athermality-and-signalling measure against the completely
    thermalising channel: conjugate the Choi matrix by 1 (x) gamma^{-1/2}
    and take the top eigenvalue, minus one."""
    gamma_out = _thermal(gamma_out)
    if gamma_out.dim != ch.d_out:
        raise ValueError("output Gibbs dimension does not match the channel")
    g_isqrt = qmat.kron(np.eye(ch.d_in), np.diag(1.0 / np.sqrt(gamma_out.populations)))
    conj = qmat.hermitianize(g_isqrt @ ch.choi @ g_isqrt)
    return float(np.linalg.eigvalsh(conj)[-1]) - 1.0


def p_t(ch: QuantumChannel, gamma_in, gamma_out) -> float:
    """Athermality preservability of a Gibbs-preserving channel; raises with
    the Gibbs residual when the channel is not one."""
    ok, residual = channels.is_gibbs_preserving(ch, _thermal(gamma_in).populations,
                                                _thermal(gamma_out).populations)
    if not ok:
        raise ValueError(
            f"preservability needs a Gibbs-preserving channel; residual {residual:.3e}")
    return r_joint(ch, gamma_out)


def r_signalling(ch: QuantumChannel, solver: sdpsolve.SdpOptions | None = None) -> float:
    """Signalling robustness via the SDP min{Tr X | X >= 0, 1 (x) X >= J}."""
    sol = sdpsolve.solve(sdpsolve.build_rs(ch), solver)
    if sol.status != "optimal":
        raise RuntimeError(
            f"signalling SDP did not converge: status={sol.status} "
            f"gap={sol.gap:.3e} after {sol.iterations} iterations")
    return float(sol.primal_value) - 1.0


def thm4_bounds(ch: QuantumChannel, gamma_in, gamma_out,
                solver: sdpsolve.SdpOptions | None = None) -> tuple[float, float]:
    """Slacks of the signalling sandwich:

        upper_slack = r_joint - r_s                       (>= 0)
        lower_slack = r_s - 2 g_min(AB)^2 (r_joint - r_t)^2  (>= 0)

    with g_min(AB) the smallest population of the joint input (x) output
    thermal state. Both come out nonnegative up to solver tolerance.
    """
    gamma_in = _thermal(gamma_in)
    gamma_out = _thermal(gamma_out)
    r = r_joint(ch, gamma_out)
    rt = r_t_channel(ch, gamma_in, gamma_out)
    rs = r_signalling(ch, solver)
    g_min_ab = gamma_in.tensor(gamma_out).g_min
    upper = r - rs
    lower = rs - 2.0 * g_min_ab ** 2 * (r - rt) ** 2
    return float(upper), float(lower)


def continuity_gap(rho, sigma, gamma) -> tuple[float, float]:
    """(|r_t(rho) - r_t(sigma)|, trace_norm(rho - sigma) / (2 g_min));
    the first never exceeds the second."""
    gamma = _thermal(gamma)
    lhs = abs(r_t_state(rho, gamma) - r_t_state(sigma, gamma))
    rhs = qmat.trace_norm(np.asarray(rho) - np.asarray(sigma)) / (2.0 * gamma.g_min)
    return float(lhs), float(rhs)


class MostAthermal(NamedTuple):
    state: np.ndarray
    value: float
    degenerate: bool


def most_athermal(gamma) -> MostAthermal:
    """Eigenstate of the smallest thermal population and its robustness
    1/g_min - 1; the maximizer is unique only when g_min is, so ties are
    reported through the degenerate flag."""
    gamma = _thermal(gamma)
    g = gamma.populations
    idx = int(np.argmin(g))
    state = np.zeros((gamma.dim, gamma.dim), dtype=np.complex128)
    state[idx, idx] = 1.0
    degenerate = bool(np.sum(np.abs(g - g[idx]) < 1e-12) > 1)
    return MostAthermal(state=state, value=1.0 / gamma.g_min - 1.0,
                        degenerate=degenerate)


@dataclass
class ResourceReport:
    """All four measures of one channel plus the bound slacks the theorems
    promise to be nonnegative; p_t is populated only for Gibbs-preserving
    channels."""

    r_t: float
    r_s: float
    r_joint: float
    transmission: float
    p_t: float | None
    bound_slacks: dict[str, float]

    def to_text(self) -> str:
        lines = [
            f"r_t: {self.r_t:.12g}",
            f"r_s: {self.r_s:.12g}",
            f"r_joint: {self.r_joint:.12g}",
            f"transmission: {self.transmission:.12g}",
            f"p_t: {self.p_t:.12g}" if self.p_t is not None else "p_t: n/a (not Gibbs-preserving)",
        ]
        for name in sorted(self.bound_slacks):
            lines.append(f"slack {name}: {self.bound_slacks[name]:.12g}")
        return "\n".join(lines) + "\n"


def measure_channel(ch: QuantumChannel, gamma_in, gamma_out,
                    solver: sdpsolve.SdpOptions | None = None) -> ResourceReport:
    """Evaluate every measure and slack of one channel in one pass."""
    gamma_in = _thermal(gamma_in)
    gamma_out = _thermal(gamma_out)
    rt = r_t_channel(ch, gamma_in, gamma_out)
    rj = r_joint(ch, gamma_out)
    rs = r_signalling(ch, solver)
    upper, lower = rj - rs, rs - 2.0 * (gamma_in.tensor(gamma_out).g_min ** 2) * (rj - rt) ** 2
    gibbs_ok, _ = channels.is_gibbs_preserving(ch, gamma_in.populations,
                                               gamma_out.populations)
    cap = float(np.sum(1.0 / gamma_out.populations)) - 1.0
    slacks = {
        "eq9": rj - max(rt, rs),
        "joint_cap": cap - rj,
        "thm4_upper": upper,
        "thm4_lower": lower,
    }
    return ResourceReport(r_t=rt, r_s=rs, r_joint=rj, transmission=rj - rt,
                          p_t=rj if gibbs_ok else None, bound_slacks=slacks)
