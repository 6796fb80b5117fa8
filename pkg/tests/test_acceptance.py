"""Acceptance gate: the twelve headline checks, each printing one pass/fail
line. Every SDP solve issued while this module runs is recorded so the final
criterion can audit solver health across all of them."""
import time

import numpy as np
import pytest

from athermality import channels, measures, qmat, sdpsolve, superops, thermo, verify
from athermality.channels import QuantumChannel, substream
from athermality.thermo import ThermalState

GIBBS = ThermalState(np.array([0.75, 0.25]))
UNIFORM = ThermalState(np.array([0.5, 0.5]))

SOLVE_LOG: list[tuple[str, float, float]] = []


@pytest.fixture(scope="module", autouse=True)
def record_every_solve():
    original = sdpsolve.solve

    def recording(problem, opts=None):
        sol = original(problem, opts)
        SOLVE_LOG.append((sol.status, sol.gap, sol.lmi_min_eig))
        return sol

    sdpsolve.solve = recording
    yield
    sdpsolve.solve = original


def _line(num: int, ok: bool, detail: str) -> None:
    print(f"[acceptance] criterion {num:02d}: {'PASS' if ok else 'FAIL'} ({detail})")


def test_criterion_01_sampling_fraction():
    t0 = time.time()
    n, hits = 20000, 0
    for i in range(n):
        ch = channels.random_channel_flat(2, 2, substream(42, i))
        rt = measures.r_t_channel(ch, GIBBS, GIBBS)
        rj = measures.r_joint(ch, GIBBS)
        hits += rt * rj >= 1.0
    elapsed = time.time() - t0
    fraction = hits / n
    ok = 0.867 <= fraction <= 0.897 and elapsed < 300.0
    _line(1, ok, f"fraction {hits}/{n} = {fraction:.5f}, {elapsed:.1f}s")
    assert 0.867 <= fraction <= 0.897
    assert elapsed < 300.0


def test_criterion_02_unitary_constants():
    worst_r = worst_rs = 0.0
    for i in range(50):
        u = channels.random_unitary(2, substream(1002, i))
        ch = QuantumChannel(kraus=[u])
        worst_r = max(worst_r, abs(measures.r_joint(ch, UNIFORM) - 3.0))
        worst_rs = max(worst_rs, abs(measures.r_signalling(ch) - 3.0))
    replace = channels.make_replace(np.diag([0.0, 1.0]), d_in=2)
    dev_rt = abs(measures.r_t_channel(replace, GIBBS, GIBBS) - 3.0)
    ok = worst_r <= 1e-7 and worst_rs <= 1e-6 and dev_rt <= 1e-9
    _line(2, ok, f"|R-3| <= {worst_r:.2e}, |R_S-3| <= {worst_rs:.2e}, "
          f"|R_T-3| = {dev_rt:.2e}")
    assert worst_r <= 1e-7
    assert worst_rs <= 1e-6
    assert dev_rt <= 1e-9


def test_criterion_03_sdp_cross_oracle():
    qutrit = ThermalState(np.array([0.5, 0.3, 0.2]))
    worst = 0.0
    for i in range(200):
        gamma = GIBBS if i % 2 == 0 else qutrit
        ch = channels.random_channel_flat(gamma.dim, gamma.dim,
                                          substream(1003, i))
        sol = sdpsolve.solve(sdpsolve.build_rt_channel(ch, gamma, gamma))
        assert sol.status == "optimal"
        closed = measures.r_t_channel(ch, gamma, gamma)
        worst = max(worst, abs(sol.primal_value - 1.0 - closed))
    ok = worst <= 1e-6
    _line(3, ok, f"max |SDP - closed form| = {worst:.2e} over 200 channels")
    assert worst <= 1e-6


def test_criterion_04_purified_input_equality():
    tfd = thermo.thermofield_double(GIBBS)
    joint = GIBBS.tensor(GIBBS)
    ident = channels.make_identity(2)
    worst = 0.0
    for i in range(200):
        ch = channels.random_channel_flat(2, 2, substream(1004, i))
        rj = measures.r_joint(ch, GIBBS)
        lifted = channels.tensor(ident, ch)
        worst = max(worst, abs(
            rj - measures.r_t_state(channels.apply(lifted, tfd), joint)))
        for k in range(5):
            tau = thermo.purify(GIBBS, channels.random_unitary(
                2, substream(1004, 200 + 5 * i + k)))
            worst = max(worst, abs(
                rj - measures.r_t_state(channels.apply(lifted, tau), joint)))
    ok = worst <= 1e-8
    _line(4, ok, f"max deviation {worst:.2e} over 200 channels x 6 purifications")
    assert worst <= 1e-8


def test_criterion_05_signalling_sandwich():
    worst = np.inf
    for i in range(1000):
        ch = channels.random_channel_flat(2, 2, substream(1005, i))
        upper, lower = measures.thm4_bounds(ch, GIBBS, GIBBS)
        worst = min(worst, upper, lower)
    g_min_ab = GIBBS.tensor(GIBBS).g_min
    worst_gpo = np.inf
    for i in range(100):
        gpo = channels.random_gpo(GIBBS.populations, substream(1055, i))
        pt = measures.p_t(gpo, GIBBS, GIBBS)
        rs = measures.r_signalling(gpo)
        worst_gpo = min(worst_gpo, pt - rs, rs - 2.0 * g_min_ab ** 2 * pt ** 2)
    ok = worst >= -1e-6 and worst_gpo >= -1e-6
    _line(5, ok, f"min slack {worst:.2e} on 1000 channels, "
          f"{worst_gpo:.2e} on 100 GPOs")
    assert worst >= -1e-6
    assert worst_gpo >= -1e-6


def test_criterion_06_dilation():
    worst_choi = worst_gibbs = worst_cost = 0.0
    worst_bracket = np.inf
    worst_eq = 0.0
    n_eq = 0
    for i in range(200):
        ch = channels.random_channel_flat(2, 2, substream(1006, i))
        rt = measures.r_t_channel(ch, GIBBS, GIBBS)
        rj = measures.r_joint(ch, GIBBS)
        rho_c, gamma_c, g_tilde = superops.gpo_dilation(ch, GIBBS, GIBBS)
        sim = superops.feed_control(g_tilde, rho_c)
        worst_choi = max(worst_choi, qmat.trace_norm(sim.choi - ch.choi))
        joint = gamma_c.tensor(GIBBS)
        _, res = channels.is_gibbs_preserving(g_tilde, joint.populations,
                                              GIBBS.populations, tol=1e-10)
        worst_gibbs = max(worst_gibbs, res)
        worst_cost = max(worst_cost,
                         abs(measures.r_t_state(rho_c, gamma_c) - rt))
        pt = measures.p_t(g_tilde, joint, GIBBS)
        worst_bracket = min(worst_bracket, pt - rj, max(1.0 / rt, rj) - pt)
        if rt * rj >= 1.0:
            n_eq += 1
            worst_eq = max(worst_eq, abs(pt - rj))
    ok = (worst_choi <= 1e-10 and worst_gibbs <= 1e-10 and worst_cost <= 1e-8
          and worst_bracket >= -1e-6 and worst_eq <= 1e-5)
    _line(6, ok, f"choi {worst_choi:.1e}, gibbs {worst_gibbs:.1e}, "
          f"cost {worst_cost:.1e}, bracket {worst_bracket:.1e}, "
          f"equality {worst_eq:.1e} on {n_eq} channels")
    assert worst_choi <= 1e-10
    assert worst_gibbs <= 1e-10
    assert worst_cost <= 1e-8
    assert worst_bracket >= -1e-6
    assert worst_eq <= 1e-5


def test_criterion_07_switch_grid():
    out_gamma = UNIFORM.tensor(UNIFORM)
    g_min_ab = UNIFORM.tensor(out_gamma).g_min
    grid = np.linspace(0.0, 1.0, 11)
    worst_formula = worst_thermal = worst_edge = 0.0
    worst_upper = worst_sand = np.inf
    for a in grid:
        for s in grid:
            ctrl = superops.ControlQubitSpec(alpha=float(a), phi=0.0, r=1.0)
            base = channels.make_signalling_gpo(UNIFORM.populations, float(s))
            ind = superops.induced_switch(base, ctrl)
            rt = measures.r_t_channel(ind, UNIFORM, out_gamma)
            rj = measures.r_joint(ind, out_gamma)
            rs = measures.r_signalling(ind)
            worst_formula = max(worst_formula, abs(
                rt - superops.rt_switch_analytic(ctrl, float(s), 0.5)))
            bound = superops.switch_upper_bound(ctrl, float(s), UNIFORM)
            worst_upper = min(worst_upper, bound - rj)
            worst_sand = min(worst_sand, rj - rs,
                             rs - 2.0 * g_min_ab ** 2 * (rj - rt) ** 2)
            if a in (0.0, 1.0) or s in (0.0, 1.0):
                worst_edge = max(worst_edge, abs(bound - rj))
            if s == 1.0:
                worst_thermal = max(worst_thermal, abs(rj - 1.0))
    ok = (worst_formula <= 1e-6 and worst_upper >= -1e-6
          and worst_sand >= -1e-6 and worst_edge <= 1e-6
          and worst_thermal <= 1e-8)
    _line(7, ok, f"formula {worst_formula:.1e}, bound slack {worst_upper:.1e}, "
          f"sandwich slack {worst_sand:.1e}, edge {worst_edge:.1e}, "
          f"s=1 row {worst_thermal:.1e}")
    assert worst_formula <= 1e-6
    assert worst_upper >= -1e-6
    assert worst_sand >= -1e-6
    assert worst_edge <= 1e-6
    assert worst_thermal <= 1e-8


def test_criterion_08_coherent_control_formula():
    worst = worst_ends = 0.0
    for d in (2, 3):
        gamma = ThermalState(np.full(d, 1.0 / d))
        out_gamma = UNIFORM.tensor(gamma)
        base = channels.make_signalling_gpo(gamma.populations, 1.0)
        for a in np.linspace(0.0, 1.0, 11):
            ctrl = superops.ControlQubitSpec(alpha=float(a), phi=0.0, r=1.0)
            ind = superops.induced_cc(base, ctrl)
            rt = measures.r_t_channel(ind, gamma, out_gamma)
            dev = abs(rt - superops.rt_cc_analytic(float(a), d))
            worst = max(worst, dev)
            if a in (0.0, 1.0):
                worst_ends = max(worst_ends, abs(rt - 1.0))
    ok = worst <= 1e-6 and worst_ends <= 1e-6
    _line(8, ok, f"max formula deviation {worst:.2e}, endpoints {worst_ends:.2e}")
    assert worst <= 1e-6
    assert worst_ends <= 1e-6


def test_criterion_09_zero_transmission():
    gamma = ThermalState(np.full(3, 1.0 / 3.0))
    ch = verify.zero_transmission_channel()
    rt = measures.r_t_channel(ch, gamma, gamma)
    rj = measures.r_joint(ch, gamma)
    rs = measures.r_signalling(ch)
    dev = max(abs(1.0 + rt - 1.5), abs(1.0 + rj - 1.5))
    ok = dev <= 1e-9 and rs > 0.01
    _line(9, ok, f"norm deviation {dev:.2e}, r_s = {rs:.4f}")
    assert dev <= 1e-9
    assert rs > 0.01


def test_criterion_10_mutual_info_sandwich():
    g_min_ab = GIBBS.tensor(GIBBS).g_min
    worst = np.inf
    for i in range(500):
        ch = channels.random_channel_flat(2, 2, substream(1010, i))
        info = thermo.mutual_info_at_tfd(ch, GIBBS)
        rt = measures.r_t_channel(ch, GIBBS, GIBBS)
        rj = measures.r_joint(ch, GIBBS)
        rs = measures.r_signalling(ch)
        worst = min(worst,
                    info - 2.0 * g_min_ab ** 2 * (rj - rt) ** 2,
                    float(np.log1p(rs)) - info,
                    rs - float(np.log1p(rs)))
    ok = worst >= -1e-6
    _line(10, ok, f"min sandwich slack {worst:.2e} over 500 channels")
    assert worst >= -1e-6


def test_criterion_11_property_suite():
    dev_faithful = abs(measures.r_t_state(GIBBS.matrix, GIBBS))
    worst_mono = np.inf
    for i in range(100):
        gpo = channels.random_gpo(GIBBS.populations, substream(1111, i))
        rho = channels.random_density(2, substream(1112, i))
        worst_mono = min(worst_mono,
                         measures.r_t_state(rho, GIBBS)
                         - measures.r_t_state(channels.apply(gpo, rho), GIBBS))
    worst_convex = np.inf
    for i in range(200):
        rng = substream(1113, i)
        rho = channels.random_density(2, rng)
        sig = channels.random_density(2, rng)
        p = float(rng.uniform())
        worst_convex = min(
            worst_convex,
            p * measures.r_t_state(rho, GIBBS)
            + (1.0 - p) * measures.r_t_state(sig, GIBBS)
            - measures.r_t_state(p * rho + (1.0 - p) * sig, GIBBS))
    worst_mult = 0.0
    joint = GIBBS.tensor(GIBBS)
    for i in range(200):
        rng = substream(1114, i)
        rho = channels.random_density(2, rng)
        sig = channels.random_density(2, rng)
        worst_mult = max(worst_mult, abs(
            (1.0 + measures.r_t_state(qmat.kron(rho, sig), joint))
            - (1.0 + measures.r_t_state(rho, GIBBS))
            * (1.0 + measures.r_t_state(sig, GIBBS))))
    worst_cont = np.inf
    for i in range(1000):
        rng = substream(1115, i)
        lhs, rhs = measures.continuity_gap(channels.random_density(2, rng),
                                           channels.random_density(2, rng),
                                           GIBBS)
        worst_cont = min(worst_cont, rhs - lhs)
    cap = 1.0 / GIBBS.g_min - 1.0
    worst_cap = np.inf
    for i in range(5000):
        pure = channels.random_pure(2, substream(1116, i))
        worst_cap = min(worst_cap, cap - measures.r_t_state(pure, GIBBS))
    worst_witness = 0.0
    for i in range(200):
        rho = channels.random_density(2, substream(1117, i))
        value, witness = measures.r_t_state_dual(rho, GIBBS)
        w = np.linalg.eigvalsh(witness)
        worst_witness = max(worst_witness, -w[0], abs(w[-2]),
                            abs(np.trace(witness @ GIBBS.matrix).real - 1.0),
                            abs(np.trace(witness @ rho).real - 1.0 - value))
    worst_line = 0.0
    for gm in (UNIFORM, GIBBS):
        pti = superops.p_t_identity(gm)
        for q in (0.0, 0.25, 0.5, 0.75, 1.0):
            mix = channels.make_signalling_gpo(gm.populations, q)
            worst_line = max(worst_line, abs(
                measures.p_t(mix, gm, gm) - (1.0 - q) * pti))
    ok = (dev_faithful <= 1e-9 and worst_mono >= -1e-7 and worst_convex >= -1e-7
          and worst_mult <= 1e-8 and worst_cont >= -1e-9 and worst_cap >= -1e-9
          and worst_witness <= 1e-7 and worst_line <= 1e-8)
    _line(11, ok, f"faithful {dev_faithful:.1e}, mono {worst_mono:.1e}, "
          f"convex {worst_convex:.1e}, mult {worst_mult:.1e}, "
          f"cont {worst_cont:.1e}, cap {worst_cap:.1e}, "
          f"witness {worst_witness:.1e}, line {worst_line:.1e}")
    assert dev_faithful <= 1e-9
    assert worst_mono >= -1e-7
    assert worst_convex >= -1e-7
    assert worst_mult <= 1e-8
    assert worst_cont >= -1e-9
    assert worst_cap >= -1e-9
    assert worst_witness <= 1e-7
    assert worst_line <= 1e-8


def test_criterion_12_solver_health():
    assert SOLVE_LOG, "earlier criteria must have issued SDP solves"
    statuses = {s for s, _, _ in SOLVE_LOG}
    worst_gap = max(g for _, g, _ in SOLVE_LOG)
    worst_lmi = min(m for _, _, m in SOLVE_LOG)
    a = sdpsolve.solve(sdpsolve.build_rs(channels.make_identity(2)))
    b = sdpsolve.solve(sdpsolve.build_rs(channels.make_identity(2)))
    deterministic = (a.primal_value == b.primal_value
                     and np.array_equal(a.x, b.x)
                     and a.iterations == b.iterations)
    ok = (statuses == {"optimal"} and worst_gap <= 1e-7
          and worst_lmi >= -1e-8 and deterministic)
    _line(12, ok, f"{len(SOLVE_LOG)} solves, max gap {worst_gap:.2e}, "
          f"min LMI eig {worst_lmi:.2e}, deterministic {deterministic}")
    assert statuses == {"optimal"}
    assert worst_gap <= 1e-7
    assert worst_lmi >= -1e-8
    assert deterministic
