"""Athermality, signalling and joint resource measures of finite-dimensional
quantum channels, with the switch / coherent-control / dilation constructions
and numerical verification suites."""

from .channels import (
    QuantumChannel,
    choi_to_kraus,
    is_gibbs_preserving,
    kraus_to_choi,
    load_channel,
    make_gamma,
    make_identity,
    make_replace,
    make_signalling_gpo,
    random_channel_flat,
    random_gpo,
    random_unitary,
    save_channel,
    substream,
)
from .measures import (
    MostAthermal,
    ResourceReport,
    continuity_gap,
    measure_channel,
    most_athermal,
    p_t,
    r_joint,
    r_signalling,
    r_t_channel,
    r_t_state,
    r_t_state_dual,
    thm4_bounds,
)
from .sdpsolve import SdpOptions, SdpProblem, SdpSolution, build_rs, build_rt_channel, solve
from .superops import (
    ControlQubitSpec,
    cc_upper_bound,
    coherent_control,
    feed_control,
    gpo_dilation,
    induced_cc,
    induced_switch,
    rt_cc_analytic,
    rt_switch_analytic,
    switch,
    switch_upper_bound,
)
from .thermo import (
    ThermalState,
    d_max,
    mutual_info_at_tfd,
    mutual_information,
    purify,
    rel_entropy,
    thermofield_double,
    von_neumann,
)
from .verify import SUITES, TheoremReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "ControlQubitSpec",
    "MostAthermal",
    "QuantumChannel",
    "ResourceReport",
    "SUITES",
    "SdpOptions",
    "SdpProblem",
    "SdpSolution",
    "ThermalState",
    "TheoremReport",
    "build_rs",
    "build_rt_channel",
    "cc_upper_bound",
    "choi_to_kraus",
    "coherent_control",
    "continuity_gap",
    "d_max",
    "feed_control",
    "gpo_dilation",
    "induced_cc",
    "induced_switch",
    "is_gibbs_preserving",
    "kraus_to_choi",
    "load_channel",
    "make_gamma",
    "make_identity",
    "make_replace",
    "make_signalling_gpo",
    "measure_channel",
    "most_athermal",
    "mutual_info_at_tfd",
    "mutual_information",
    "p_t",
    "purify",
    "r_joint",
    "r_signalling",
    "r_t_channel",
    "r_t_state",
    "r_t_state_dual",
    "random_channel_flat",
    "random_gpo",
    "random_unitary",
    "rel_entropy",
    "rt_cc_analytic",
    "rt_switch_analytic",
    "run_all",
    "run_suite",
    "save_channel",
    "solve",
    "substream",
    "switch",
    "switch_upper_bound",
    "thermofield_double",
    "thm4_bounds",
    "von_neumann",
]
