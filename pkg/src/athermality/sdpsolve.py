"""Dense primal-dual interior-point solver for small semidefinite programs.

Problems are stated in inequality form over a real variable x in R^n:

    minimize    c . x
    subject to  S_b(x) = F0_b + sum_i x_i F_b[i]  >= 0   (Hermitian LMI blocks)
                A x = b                                   (real equalities)

The solver eliminates the equalities up front (particular solution by least
squares, null-space basis by SVD) and runs a Nesterov-Todd scaled
predictor-corrector iteration in the reduced variable:

  * the primal iterate keeps S(x) exactly equal to its affine expression, so
    every returned LMI block is PSD up to eigensolver roundoff;
  * the dual block Z starts at the identity and gains feasibility as the
    (linear) dual residual is driven to zero;
  * each step solves one Schur system M dx = h with
    M_ij = sum_b Tr(G_i W^-1 G_j W^-1), assembled densely and factored by
    Cholesky; the corrector right-hand side comes from a Lyapunov solve in
    the eigenbasis of the scaled point V;
  * step lengths back off from the block boundaries by a fixed fraction.

Everything is deterministic: no randomization, no iteration-order dependence.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg as sla

from . import qmat

DEFAULT_GAP_TOL = 1e-7
DEFAULT_FEAS_TOL = 1e-9
DEFAULT_MAX_ITER = 200
# Fraction of the distance to the cone boundary taken per step.
STEP_FRACTION = 0.98


@dataclass
class LmiBlock:
    """One constraint block F0 + sum_i x_i F[i] >= 0; coeffs has shape (n, p, p)."""

    f0: np.ndarray
    coeffs: np.ndarray

    def __post_init__(self):
        self.f0 = np.asarray(self.f0, dtype=np.complex128)
        self.coeffs = np.asarray(self.coeffs, dtype=np.complex128)
        p = self.f0.shape[0]
        if self.f0.shape != (p, p) or self.coeffs.shape[1:] != (p, p):
            raise ValueError("block shapes are inconsistent")

    def at(self, x: np.ndarray) -> np.ndarray:
        return qmat.hermitianize(self.f0 + np.einsum("i,ipq->pq", x, self.coeffs))


@dataclass
class SdpProblem:
    """Objective, LMI blocks and optional equalities; see the module docstring."""

    objective: np.ndarray
    blocks: list[LmiBlock]
    eq_mat: np.ndarray | None = None
    eq_rhs: np.ndarray | None = None
    initial_x: np.ndarray | None = None

    def __post_init__(self):
        self.objective = np.asarray(self.objective, dtype=float).ravel()
        n = self.objective.size
        for blk in self.blocks:
            if blk.coeffs.shape[0] != n:
                raise ValueError("block coefficient count does not match objective")
        if (self.eq_mat is None) != (self.eq_rhs is None):
            raise ValueError("equality matrix and rhs must come together")
        if self.eq_mat is not None:
            self.eq_mat = np.asarray(self.eq_mat, dtype=float)
            self.eq_rhs = np.asarray(self.eq_rhs, dtype=float).ravel()
            if self.eq_mat.shape != (self.eq_rhs.size, n):
                raise ValueError("equality shapes are inconsistent")

    @property
    def n(self) -> int:
        return self.objective.size


@dataclass
class SdpSolution:
    x: np.ndarray
    primal_value: float
    dual_value: float
    gap: float
    status: str                    # "optimal" | "max_iter" | "infeasible"
    iterations: int
    lmi_min_eig: float
    eq_residual: float


@dataclass
class SdpOptions:
    gap_tol: float = DEFAULT_GAP_TOL
    feas_tol: float = DEFAULT_FEAS_TOL
    max_iter: int = DEFAULT_MAX_ITER


def _psd_sqrt_pair(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(m^{1/2}, m^{-1/2}) of a Hermitian positive definite matrix."""
    w, v = np.linalg.eigh(m)
    if w[0] <= 0.0:
        raise np.linalg.LinAlgError(f"matrix not positive definite (min eig {w[0]:.3e})")
    rw = np.sqrt(w)
    return (v * rw) @ v.conj().T, (v / rw) @ v.conj().T


def _max_step(pos: np.ndarray, delta: np.ndarray, pos_inv_sqrt: np.ndarray) -> float:
    """Largest alpha with pos + alpha*delta still PSD (inf if unconstrained)."""
    w = np.linalg.eigvalsh(qmat.hermitianize(pos_inv_sqrt @ delta @ pos_inv_sqrt))
    lo = float(w[0])
    return np.inf if lo >= -1e-16 else 1.0 / (-lo)


def solve(problem: SdpProblem, opts: SdpOptions | None = None) -> SdpSolution:
    """Run the interior-point iteration; see the module docstring for the scheme."""
    opts = opts or SdpOptions()
    c_full = problem.objective
    n = problem.n

    # Eliminate equalities: x = x_part + N u with N an orthonormal null basis.
    if problem.eq_mat is not None and problem.eq_mat.size:
        x_part, *_ = np.linalg.lstsq(problem.eq_mat, problem.eq_rhs, rcond=None)
        resid = np.abs(problem.eq_mat @ x_part - problem.eq_rhs).max()
        if resid > 1e-8 * (1.0 + np.abs(problem.eq_rhs).max()):
            return SdpSolution(x=x_part, primal_value=np.nan, dual_value=np.nan,
                               gap=np.inf, status="infeasible", iterations=0,
                               lmi_min_eig=np.nan, eq_residual=float(resid))
        nullb = sla.null_space(problem.eq_mat)
    else:
        x_part = np.zeros(n)
        nullb = np.eye(n)

    def assemble(u: np.ndarray) -> np.ndarray:
        return x_part + nullb @ u

    def finish(u, primal, dual, gap, status, it):
        x = assemble(u)
        mineig = min((qmat.psd_min_eig(blk.at(x)) for blk in problem.blocks),
                     default=0.0)
        eq_res = 0.0
        if problem.eq_mat is not None and problem.eq_mat.size:
            eq_res = float(np.abs(problem.eq_mat @ x - problem.eq_rhs).max())
        return SdpSolution(x=x, primal_value=float(primal), dual_value=float(dual),
                           gap=float(gap), status=status, iterations=it,
                           lmi_min_eig=float(mineig), eq_residual=eq_res)

    offset = float(c_full @ x_part)
    if nullb.shape[1] == 0:
        # Equalities pin x completely; only feasibility remains to check.
        mineig = min((qmat.psd_min_eig(blk.at(x_part)) for blk in problem.blocks),
                     default=0.0)
        status = "optimal" if mineig >= -1e-8 else "infeasible"
        return finish(np.zeros(0), offset, offset, 0.0, status, 0)

    c = nullb.T @ c_full
    g0s = [qmat.hermitianize(blk.f0 + np.einsum("i,ipq->pq", x_part, blk.coeffs))
           for blk in problem.blocks]
    gs = [np.einsum("ij,ipq->jpq", nullb, blk.coeffs) for blk in problem.blocks]

    # Strictly feasible start for the primal; identity start for the dual.
    u = None
    candidates = []
    if problem.initial_x is not None:
        candidates.append(nullb.T @ (np.asarray(problem.initial_x, float) - x_part))
    candidates.append(np.zeros(nullb.shape[1]))
    for cand in candidates:
        ss = [qmat.hermitianize(g0 + np.einsum("j,jpq->pq", cand, g))
              for g0, g in zip(g0s, gs)]
        if all(np.linalg.eigvalsh(s)[0] > 0.0 for s in ss):
            u = cand
            break
    if u is None:
        raise ValueError("no strictly feasible initial point available; "
                         "pass initial_x inside the LMI cone")
    zs = [np.eye(s.shape[0], dtype=np.complex128) for s in ss]
    p_tot = sum(s.shape[0] for s in ss)
    c_scale = 1.0 + np.abs(c).max(initial=0.0)

    primal = dual = offset
    gap = np.inf
    for it in range(1, opts.max_iter + 1):
        primal = offset + float(c @ u)
        dual = offset - float(sum(np.trace(g0 @ z).real for g0, z in zip(g0s, zs)))
        r = c - sum(np.einsum("jpq,qp->j", g, z).real for g, z in zip(gs, zs))
        comp = float(sum(np.trace(s @ z).real for s, z in zip(ss, zs)))
        gap = abs(primal - dual)
        if (max(gap, comp) <= opts.gap_tol
                and np.abs(r).max() <= 1e-8 * c_scale):
            return finish(u, primal, dual, gap, "optimal", it - 1)

        mu = comp / p_tot

        # Nesterov-Todd scaling point per block: W Z W = S.
        winvs, rws, rwinvs, vs_list, s_isqrts, z_isqrts = [], [], [], [], [], []
        try:
            for s, z in zip(ss, zs):
                s_sqrt, s_isqrt = _psd_sqrt_pair(s)
                inner_sqrt, inner_isqrt = _psd_sqrt_pair(
                    qmat.hermitianize(s_sqrt @ z @ s_sqrt))
                w_mat = qmat.hermitianize(s_sqrt @ inner_isqrt @ s_sqrt)
                rw, rwinv = _psd_sqrt_pair(w_mat)
                winvs.append(rwinv @ rwinv)
                rws.append(rw)
                rwinvs.append(rwinv)
                vs_list.append(qmat.hermitianize(rwinv @ s @ rwinv))
                s_isqrts.append(s_isqrt)
                _, z_isqrt = _psd_sqrt_pair(z)
                z_isqrts.append(z_isqrt)
        except np.linalg.LinAlgError:
            return finish(u, primal, dual, gap, "max_iter", it - 1)

        # T_k = W^-1 G_k W^-1 by broadcast matmul, then pair up traces.
        schur = sum(np.einsum("jpq,kqp->jk", g, winv[None] @ g @ winv[None]).real
                    for g, winv in zip(gs, winvs))
        schur = 0.5 * (schur + schur.T)
        jitter = 0.0
        for _ in range(8):
            try:
                cho = sla.cho_factor(
                    schur + jitter * np.eye(schur.shape[0]), lower=True)
                break
            except np.linalg.LinAlgError:
                jitter = max(2.0 * jitter, 1e-14 * (1.0 + np.trace(schur)))
        else:
            return finish(u, primal, dual, gap, "max_iter", it - 1)

        def newton_step(es):
            h = sum(np.einsum("jpq,qp->j", g, e).real for g, e in zip(gs, es)) - r
            du = sla.cho_solve(cho, h)
            dss = [np.einsum("j,jpq->pq", du, g) for g in gs]
            dzs = [qmat.hermitianize(e - winv @ ds @ winv)
                   for e, ds, winv in zip(es, dss, winvs)]
            return du, dss, dzs

        # Predictor (affine) direction.
        du_a, dss_a, dzs_a = newton_step([-z for z in zs])
        ap = min((_max_step(s, ds, si) for s, ds, si in zip(ss, dss_a, s_isqrts)),
                 default=np.inf)
        ad = min((_max_step(z, dz, zi) for z, dz, zi in zip(zs, dzs_a, z_isqrts)),
                 default=np.inf)
        ap_trial, ad_trial = min(1.0, ap), min(1.0, ad)
        mu_aff = sum(np.trace((s + ap_trial * ds) @ (z + ad_trial * dz)).real
                     for s, ds, z, dz in zip(ss, dss_a, zs, dzs_a)) / p_tot
        sigma = float(np.clip((max(mu_aff, 0.0) / mu) ** 3, 1e-10, 1.0))

        # Corrector: Lyapunov solve in each block's scaled eigenbasis.
        es = []
        for s, z, rw, rwinv, v_mat, ds_a, dz_a in zip(
                ss, zs, rws, rwinvs, vs_list, dss_a, dzs_a):
            dvz = qmat.hermitianize(rw @ dz_a @ rw)
            dvs = qmat.hermitianize(rwinv @ ds_a @ rwinv)
            cross = dvz @ dvs
            rhs = (sigma * mu * np.eye(v_mat.shape[0])
                   - v_mat @ v_mat - 0.5 * (cross + cross.conj().T))
            wv, vv = np.linalg.eigh(v_mat)
            rhs_e = vv.conj().T @ rhs @ vv
            denom = 0.5 * (wv[:, None] + wv[None, :])
            e_mat = vv @ (rhs_e / denom) @ vv.conj().T
            es.append(qmat.hermitianize(rwinv @ e_mat @ rwinv))

        du, dss, dzs = newton_step(es)
        ap = min((_max_step(s, ds, si) for s, ds, si in zip(ss, dss, s_isqrts)),
                 default=np.inf)
        ad = min((_max_step(z, dz, zi) for z, dz, zi in zip(zs, dzs, z_isqrts)),
                 default=np.inf)
        alpha_p = min(1.0, STEP_FRACTION * ap)
        alpha_d = min(1.0, STEP_FRACTION * ad)
        if alpha_p <= 1e-12 and alpha_d <= 1e-12:
            return finish(u, primal, dual, gap, "max_iter", it)

        u = u + alpha_p * du
        ss = [qmat.hermitianize(g0 + np.einsum("j,jpq->pq", u, g))
              for g0, g in zip(g0s, gs)]
        zs = [qmat.hermitianize(z + alpha_d * dz) for z, dz in zip(zs, dzs)]

    return finish(u, primal, dual, gap, "max_iter", opts.max_iter)


# ---------------------------------------------------------------------------
# Problem builders for the two channel measures posed as SDPs.


def _state_basis(d: int) -> np.ndarray:
    """Real-orthonormal Hermitian basis of the d x d matrices, diagonal first."""
    out = np.zeros((d * d, d, d), dtype=np.complex128)
    idx = 0
    for i in range(d):
        out[idx, i, i] = 1.0
        idx += 1
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    for i in range(d):
        for j in range(i + 1, d):
            out[idx, i, j] = out[idx, j, i] = inv_sqrt2
            idx += 1
            out[idx, i, j] = -1j * inv_sqrt2
            out[idx, j, i] = 1j * inv_sqrt2
            idx += 1
    return out


def build_rs(ch) -> SdpProblem:
    """Signalling robustness: minimize Tr X with X >= 0 and 1 (x) X >= J.

    The optimum equals 1 + R_S; the feasible X certifies a trace-and-replace
    channel whose scaled mixture absorbs the channel's signalling.
    """
    j = ch.choi
    d_in, d_out = ch.d_in, ch.d_out
    basis = _state_basis(d_out)
    eye_in = np.eye(d_in)
    lifted = np.stack([qmat.kron(eye_in, b) for b in basis])
    c = np.array([np.trace(b).real for b in basis])
    tau = qmat.op_norm(j) + 1.0
    x0 = tau * c                      # coordinates of tau * identity
    return SdpProblem(objective=c,
                      blocks=[LmiBlock(f0=np.zeros((d_out, d_out)), coeffs=basis),
                              LmiBlock(f0=-j, coeffs=lifted)],
                      initial_x=x0)


def build_rt_channel(ch, gamma_in, gamma_out) -> SdpProblem:
    """Channel athermality as an SDP over a dominating Gibbs-preserving cone.

    Variables are a Hermitian matrix J (the scaled free Choi candidate, d^2
    real coordinates) and a scale lam; constraints force J >= J_ch, J >= 0,
    and J to be (scaled) trace- and Gibbs-preserving. The optimal lam equals
    1 + R_T of the channel.
    """
    from .thermo import ThermalState

    if not isinstance(gamma_in, ThermalState):
        gamma_in = ThermalState(np.asarray(gamma_in, dtype=float))
    if not isinstance(gamma_out, ThermalState):
        gamma_out = ThermalState(np.asarray(gamma_out, dtype=float))
    if gamma_in.dim != ch.d_in or gamma_out.dim != ch.d_out:
        raise ValueError("Gibbs dimensions do not match the channel")
    j_ch = ch.choi
    d_in, d_out = ch.d_in, ch.d_out
    dd = d_in * d_out
    basis = _state_basis(dd)
    n = dd * dd + 1
    coeffs = np.concatenate([basis, np.zeros((1, dd, dd))])
    c = np.zeros(n)
    c[-1] = 1.0

    b_in = _state_basis(d_in)
    b_out = _state_basis(d_out)
    eye_out = np.eye(d_out)
    gm_in = gamma_in.matrix
    gm_out = gamma_out.matrix
    rows = np.zeros((d_in * d_in + d_out * d_out, n))
    for m, h in enumerate(b_in):
        probe = qmat.kron(h, eye_out)
        rows[m, :-1] = np.einsum("kab,ba->k", basis, probe).real
        rows[m, -1] = -np.trace(h).real
    for m, h in enumerate(b_out):
        probe = qmat.kron(gm_in, h)
        rows[d_in * d_in + m, :-1] = np.einsum("kab,ba->k", basis, probe).real
        rows[d_in * d_in + m, -1] = -np.trace(h @ gm_out).real
    rhs = np.zeros(rows.shape[0])

    g_isqrt = qmat.kron(np.eye(d_in), qmat.herm_pow(gm_out, -0.5))
    tau = qmat.op_norm(qmat.hermitianize(g_isqrt @ j_ch @ g_isqrt)) + 1.0
    j_init = tau * qmat.kron(np.eye(d_in), gm_out)
    x0 = np.empty(n)
    x0[:-1] = np.einsum("kab,ba->k", basis, j_init).real
    x0[-1] = tau
    return SdpProblem(objective=c,
                      blocks=[LmiBlock(f0=-j_ch, coeffs=coeffs),
                              LmiBlock(f0=np.zeros((dd, dd)), coeffs=coeffs)],
                      eq_mat=rows, eq_rhs=rhs, initial_x=x0)


def check_tight(x_op, y_op, tol: float = 1e-9) -> bool:
    """Whether the operator inequality X <= Y holds with a touching direction:
    the smallest eigenvalue of Y - X sits within tol of zero."""
    gap = qmat.psd_min_eig(np.asarray(y_op) - np.asarray(x_op))
    return -tol <= gap <= tol
