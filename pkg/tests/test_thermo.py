import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from athermality import channels, measures, qmat, thermo
from athermality.channels import substream
from athermality.thermo import ThermalState

GIBBS = ThermalState(np.array([0.75, 0.25]))


def test_thermal_state_validation():
    with pytest.raises(ValueError):
        ThermalState(np.array([0.5, -0.1, 0.6]))
    with pytest.raises(ValueError):
        ThermalState(np.array([0.5, 0.4]))


def test_thermal_state_accessors():
    assert GIBBS.dim == 2
    assert GIBBS.g_min == 0.25
    assert GIBBS.g_max == 0.75
    assert np.allclose(GIBBS.matrix, np.diag([0.75, 0.25]))
    joint = GIBBS.tensor(GIBBS)
    assert joint.dim == 4
    assert joint.g_min == pytest.approx(0.0625)


def test_thermofield_double_marginals():
    tfd = thermo.thermofield_double(GIBBS)
    assert np.trace(tfd) == pytest.approx(1.0)
    for keep in ((0,), (1,)):
        marg = qmat.partial_trace(tfd, (2, 2), keep=keep)
        assert np.allclose(marg, GIBBS.matrix, atol=1e-12)


def test_purify_rotated():
    u = channels.random_unitary(2, substream(0, 0))
    tau = thermo.purify(GIBBS, u)
    marg = qmat.partial_trace(tau, (2, 2), keep=(0,))
    assert np.allclose(marg, GIBBS.matrix, atol=1e-12)
    # rank 1
    w = np.linalg.eigvalsh(tau)
    assert w[-1] == pytest.approx(1.0, abs=1e-12)


def test_purify_rejects_nonunitary():
    with pytest.raises(ValueError):
        thermo.purify(GIBBS, np.array([[1.0, 0.0], [0.0, 0.5]]))


def test_von_neumann():
    assert thermo.von_neumann(np.diag([1.0, 0.0])) == pytest.approx(0.0, abs=1e-12)
    assert thermo.von_neumann(np.eye(2) / 2) == pytest.approx(np.log(2.0))


def test_rel_entropy_basics():
    rho = channels.random_density(2, substream(1, 0))
    assert thermo.rel_entropy(rho, rho) == pytest.approx(0.0, abs=1e-10)
    with pytest.raises(ValueError):
        thermo.rel_entropy(np.eye(2) / 2, np.diag([1.0, 0.0]))


def test_mutual_information_values():
    rho = qmat.kron(channels.random_density(2, substream(2, 0)),
                    channels.random_density(2, substream(2, 1)))
    assert thermo.mutual_information(rho, (2, 2)) == pytest.approx(0.0, abs=1e-10)
    bell = np.zeros(4, dtype=complex)
    bell[0] = bell[3] = 1.0 / np.sqrt(2.0)
    assert thermo.mutual_information(np.outer(bell, bell.conj()), (2, 2)) == \
        pytest.approx(2.0 * np.log(2.0), abs=1e-10)


def test_d_max_matches_log_robustness():
    rho = channels.random_density(2, substream(3, 0))
    rt = measures.r_t_state(rho, GIBBS)
    assert thermo.d_max(rho, GIBBS.matrix) == pytest.approx(np.log1p(rt), abs=1e-10)


def test_mutual_info_at_tfd_identity():
    uniform = ThermalState(np.array([0.5, 0.5]))
    info = thermo.mutual_info_at_tfd(channels.make_identity(2), uniform)
    assert info == pytest.approx(np.log(4.0), abs=1e-10)


def test_mutual_info_at_tfd_thermalising():
    info = thermo.mutual_info_at_tfd(channels.make_gamma(GIBBS.populations), GIBBS)
    assert info == pytest.approx(0.0, abs=1e-10)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_rel_entropy_nonnegative(seed):
    rho = channels.random_density(2, substream(seed, 0))
    sig = channels.random_density(2, substream(seed, 1)) + 1e-6 * np.eye(2)
    sig = sig / np.trace(sig).real
    assert thermo.rel_entropy(rho, sig) >= -1e-10


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_mutual_info_nonnegative(seed):
    ch = channels.random_channel_flat(2, 2, substream(seed, 0))
    assert thermo.mutual_info_at_tfd(ch, GIBBS) >= -1e-10
