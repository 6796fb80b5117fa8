"""Higher-order constructions on channels: the two-order quantum switch,
coherent control between two implementations, the channels they induce once
a control qubit is fed in, their analytic athermality formulas and bounds,
and the Gibbs-preserving dilation that simulates an arbitrary channel.

Ordering convention, used without exception: the control qubit is the first
tensor factor on both sides, so two-input maps act C (x) A -> C' (x) B and
induced maps act A -> C' (x) B.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import channels, measures, qmat
from .channels import QuantumChannel
from .thermo import ThermalState


@dataclass(frozen=True)
class ControlQubitSpec:
    """Control state rho_C = r |psi><psi| + (1-r) I/2 with
    |psi> = sqrt(alpha)|0> + e^{i phi} sqrt(1-alpha)|1>; its athermality
    against the uniform qubit reference is exactly r."""

    alpha: float
    phi: float = 0.0
    r: float = 1.0

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not 0.0 <= self.phi <= 2.0 * np.pi + 1e-12:
            raise ValueError(f"phi must lie in [0, 2*pi], got {self.phi}")
        if not 0.0 <= self.r <= 1.0:
            raise ValueError(f"r must lie in [0, 1], got {self.r}")

    @property
    def state(self) -> np.ndarray:
        a = self.alpha
        psi = np.array([np.sqrt(a), np.exp(1j * self.phi) * np.sqrt(1.0 - a)])
        return self.r * np.outer(psi, psi.conj()) + (1.0 - self.r) * 0.5 * np.eye(2)


def switch(ch: QuantumChannel) -> QuantumChannel:
    """Two uses of the channel in a qubit-controlled superposition of orders.

    Kraus members pair every (m, n): branch |0> applies member m then member
    n, branch |1> the reverse. The result is a channel on C (x) A.
    """
    if ch.d_in != ch.d_out:
        raise ValueError("the switch needs a square channel")
    p0 = np.diag([1.0, 0.0]).astype(np.complex128)
    p1 = np.diag([0.0, 1.0]).astype(np.complex128)
    ks = ch.kraus
    out = [qmat.kron(p0, kn @ km) + qmat.kron(p1, km @ kn)
           for km in ks for kn in ks]
    return QuantumChannel(kraus=out)


def coherent_control(ch: QuantumChannel) -> QuantumChannel:
    """Qubit-controlled choice between two runs of the same Kraus list.

    C_mn = (|0><0| (x) K_m + |1><1| (x) K_n) / sqrt(N) over all pairs; the
    1/sqrt(N) prefactor restores trace preservation. The construction depends
    on the Kraus list itself (length and order), which is part of the input
    contract, not a defect.
    """
    if ch.d_in != ch.d_out:
        raise ValueError("coherent control needs a square channel")
    p0 = np.diag([1.0, 0.0]).astype(np.complex128)
    p1 = np.diag([0.0, 1.0]).astype(np.complex128)
    ks = ch.kraus
    norm = 1.0 / np.sqrt(len(ks))
    out = [norm * (qmat.kron(p0, km) + qmat.kron(p1, kn))
           for km in ks for kn in ks]
    return QuantumChannel(kraus=out)


def feed_control(two_input: QuantumChannel, rho_c) -> QuantumChannel:
    """Partially apply a two-input map (control first) to a fixed control state."""
    rho_c = qmat.require_hermitian(rho_c)
    dc = rho_c.shape[0]
    if two_input.d_in % dc:
        raise ValueError("control dimension does not divide the joint input")
    da = two_input.d_in // dc
    w, v = np.linalg.eigh(rho_c)
    eye_a = np.eye(da)
    ks = []
    for p, col in zip(w, v.T):
        if p < 1e-14:
            continue
        embed = qmat.kron(col.reshape(dc, 1), eye_a)
        for k in two_input.kraus:
            ks.append(np.sqrt(p) * (k @ embed))
    return QuantumChannel(kraus=ks, d_in=da, d_out=two_input.d_out)


def induced_switch(ch: QuantumChannel, ctrl: ControlQubitSpec) -> QuantumChannel:
    """Channel A -> C' (x) B obtained by running the switch of ch on the
    control state of ctrl."""
    return feed_control(switch(ch), ctrl.state)


def induced_cc(ch: QuantumChannel, ctrl: ControlQubitSpec) -> QuantumChannel:
    """Channel A -> C' (x) B obtained by running the coherent control of ch
    on the control state of ctrl."""
    return feed_control(coherent_control(ch), ctrl.state)


def rt_switch_analytic(ctrl: ControlQubitSpec, s: float, g_max: float) -> float:
    """Closed-form athermality of the induced switch channel for a qubit
    system with largest thermal population g_max; independent of phi."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {s}")
    if not 0.0 < g_max < 1.0:
        raise ValueError(f"g_max must lie in (0, 1), got {g_max}")
    a = ctrl.alpha
    q = 1.0 - g_max * g_max
    inner = 1.0 - 4.0 * q * (2.0 - q * s * s) * s * s * a * (1.0 - a)
    return ctrl.r * float(np.sqrt(max(inner, 0.0)))


def p_t_identity(gamma) -> float:
    """Preservability of the identity channel: Tr(gamma^{-1}) - 1."""
    g = np.asarray(getattr(gamma, "populations", gamma), dtype=float)
    return float(np.sum(1.0 / g)) - 1.0


def switch_upper_bound(ctrl: ControlQubitSpec, s: float, gamma) -> float:
    """Upper bound on the joint measure of the induced switch channel:
    r + (1+r)(1-s)^2 * p_t_identity(gamma)."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {s}")
    r = ctrl.r
    return r + (1.0 + r) * (1.0 - s) ** 2 * p_t_identity(gamma)


def rt_cc_analytic(alpha: float, d: int) -> float:
    """Closed-form athermality of the induced coherent-control channel when
    the controlled channel is completely thermalising; any dimension d."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    if d < 2:
        raise ValueError(f"dimension must be at least 2, got {d}")
    return float(np.sqrt((1.0 - 2.0 * alpha) ** 2
                         + 4.0 * alpha * (1.0 - alpha) / (d * d)))


def _r_t_hermitian(op, gamma_joint: np.ndarray) -> float:
    """Extension of the athermality robustness to a Hermitian (possibly
    non-state) argument: top eigenvalue of the Gibbs-conjugated operator,
    minus one. Used only inside the coherent-control upper bound, whose
    correction term is built from a traceless Hermitian operator."""
    g_isqrt = qmat.herm_pow(gamma_joint, -0.5)
    return float(np.linalg.eigvalsh(
        qmat.hermitianize(g_isqrt @ op @ g_isqrt))[-1]) - 1.0


def cc_correction_factor(gamma: ThermalState, phi: float = 0.0) -> float:
    """Coefficient f(gamma) of the sqrt(alpha(1-alpha)s(1-s)) term in the
    coherent-control upper bound.

    Built from the Hermitian cross operator chi = (e^{-i phi}|0><1| + h.c.)
    (x) (|p><t| + |t><p|), where |t> is the two-sided purification of gamma
    and |p> the product vector of sqrt-populations; f = (1 + r_t(chi))/(d^2+1)
    with r_t extended to Hermitian arguments (top-eigenvalue form).
    """
    d = gamma.dim
    sq = np.sqrt(gamma.populations)
    prod = np.kron(sq, sq).astype(np.complex128)
    tfd = np.zeros(d * d, dtype=np.complex128)
    tfd[np.arange(d) * d + np.arange(d)] = sq
    tau = np.outer(prod, tfd.conj()) + np.outer(tfd, prod.conj())
    flip = np.array([[0.0, np.exp(-1j * phi)], [np.exp(1j * phi), 0.0]])
    chi = qmat.kron(flip, tau)
    gamma_joint = qmat.kron(0.5 * np.eye(2), np.diag(np.kron(gamma.populations,
                                                             gamma.populations)))
    return (1.0 + _r_t_hermitian(chi, gamma_joint)) / (d * d + 1.0)


def cc_upper_bound(ctrl: ControlQubitSpec, s: float, gamma: ThermalState) -> float:
    """Upper bound on the joint measure of the induced coherent-control
    channel for a pure control (r = 1):
    1 + 2(1-s) p_t_identity + sqrt(alpha(1-alpha)s(1-s)) f(gamma)."""
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"mixing weight must lie in [0, 1], got {s}")
    a = ctrl.alpha
    correction = np.sqrt(max(a * (1.0 - a) * s * (1.0 - s), 0.0))
    return (1.0 + 2.0 * (1.0 - s) * p_t_identity(gamma)
            + correction * cc_correction_factor(gamma, ctrl.phi))


def gpo_dilation(ch: QuantumChannel, gamma_in, gamma_out
                 ) -> tuple[np.ndarray, ThermalState, QuantumChannel]:
    """Simulate ch as a Gibbs-preserving channel fed with a resource state.

    Returns (rho_c, gamma_c, g_tilde) with g_tilde on C (x) A -> B and
    g_tilde(rho_c (x) rho) = ch(rho) exactly. The control populations encode
    the channel's athermality, and the control state |0><0| carries exactly
    that much athermality relative to gamma_c. A channel with zero
    athermality needs no resource: the dilation degenerates to the channel
    itself with a one-dimensional control.
    """
    gamma_in = gamma_in if isinstance(gamma_in, ThermalState) else ThermalState(np.asarray(gamma_in, float))
    gamma_out = gamma_out if isinstance(gamma_out, ThermalState) else ThermalState(np.asarray(gamma_out, float))
    rt = measures.r_t_channel(ch, gamma_in, gamma_out)
    if rt <= 1e-10:
        rho_c = np.ones((1, 1), dtype=np.complex128)
        g_tilde = QuantumChannel(kraus=list(ch.kraus), d_in=ch.d_in, d_out=ch.d_out)
        return rho_c, ThermalState(np.array([1.0])), g_tilde

    out_thermal = channels.apply(ch, gamma_in.matrix)
    sigma = qmat.hermitianize(((1.0 + rt) * gamma_out.matrix - out_thermal) / rt)
    replace = channels.make_replace(sigma, d_in=ch.d_in)
    sel0 = qmat.kron(np.array([[1.0, 0.0]]), np.eye(ch.d_in))
    sel1 = qmat.kron(np.array([[0.0, 1.0]]), np.eye(ch.d_in))
    ks = [k @ sel0 for k in ch.kraus] + [k @ sel1 for k in replace.kraus]
    g_tilde = QuantumChannel(kraus=ks, d_in=2 * ch.d_in, d_out=ch.d_out)
    rho_c = np.diag([1.0, 0.0]).astype(np.complex128)
    gamma_c = ThermalState(np.array([1.0 / (1.0 + rt), rt / (1.0 + rt)]))
    return rho_c, gamma_c, g_tilde
