"""Command-line front end.

Subcommands: measure a channel file, sample random channels, sweep the
switch or coherent-control constructions over parameter grids, and run the
verification suites. Delimited output is CSV (UTF-8, '.' decimal, column
order versioned in the leading comment) and is byte-identical for fixed
seed and flags; when --out is given the sweep commands also render a
matplotlib figure next to the CSV. Exit codes: 0 success, 1 verification
failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import numpy as np

from . import channels, measures, superops, verify
from .channels import substream
from .thermo import ThermalState

CSV_VERSION = "athermality-csv-v1"


class UsageError(Exception):
    pass


def _parse_gibbs(text: str) -> ThermalState:
    try:
        pops = np.array([float(tok) for tok in text.split(",")], dtype=float)
    except ValueError as exc:
        raise UsageError(f"bad --gibbs value {text!r}: {exc}") from exc
    if pops.size == 0 or np.any(pops <= 0.0):
        raise UsageError("--gibbs populations must be strictly positive")
    if abs(pops.sum() - 1.0) > 1e-9:
        raise UsageError(f"--gibbs populations must sum to 1, got {pops.sum():.12g}")
    return ThermalState(pops)


def _parse_grid(text: str, name: str, lo: float, hi: float) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"{name} must be start:stop:count, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad {name} {text!r}: {exc}") from exc
    if count < 1:
        raise UsageError(f"{name} count must be >= 1")
    if not (lo <= start <= hi and lo <= stop <= hi):
        raise UsageError(f"{name} range must lie in [{lo:g}, {hi:g}]")
    return np.linspace(start, stop, count)


def _write_csv(path: str | None, command: str, meta: dict, columns: list[str],
               rows: list[list], trailer: list[str] = ()) -> None:
    meta_text = " ".join(f"{k}={v}" for k, v in meta.items())
    out = open(path, "w", encoding="utf-8", newline="") if path else sys.stdout
    try:
        out.write(f"# {CSV_VERSION} command={command} {meta_text}\n")
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
        for line in trailer:
            out.write(f"# {line}\n")
    finally:
        if path:
            out.close()


def _cell(v) -> str:
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _figure_path(out: str) -> Path:
    return Path(out).with_suffix(".png")


def _pyplot():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def cmd_measure(args) -> int:
    ch, g_in, g_out = channels.load_channel(args.channel)
    gamma_in = _parse_gibbs(args.gibbs) if args.gibbs else (
        ThermalState(g_in) if g_in is not None else None)
    gamma_out = _parse_gibbs(args.gibbs_out) if args.gibbs_out else (
        ThermalState(g_out) if g_out is not None else gamma_in)
    if gamma_in is None:
        raise UsageError("no Gibbs populations: pass --gibbs or store gibbs_in "
                         "in the channel file")
    if gamma_in.dim != ch.d_in or gamma_out.dim != ch.d_out:
        raise UsageError(f"Gibbs dimensions ({gamma_in.dim}, {gamma_out.dim}) do "
                         f"not match channel ({ch.d_in} -> {ch.d_out})")
    report = measures.measure_channel(ch, gamma_in, gamma_out)
    text = report.to_text()
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _sample_record(seed: int, index: int, gamma: ThermalState) -> list:
    rng = substream(seed, index)
    ch = channels.random_channel_flat(gamma.dim, gamma.dim, rng)
    rt = measures.r_t_channel(ch, gamma, gamma)
    rj = measures.r_joint(ch, gamma)
    rs = measures.r_signalling(ch)
    return [index, seed, gamma.dim, rt, rs, rj, int(rt * rj >= 1.0)]


def cmd_sample(args) -> int:
    if args.n < 1:
        raise UsageError("--n must be >= 1")
    if args.gibbs:
        gamma = _parse_gibbs(args.gibbs)
        if args.dim is not None and args.dim != gamma.dim:
            raise UsageError("--dim contradicts the --gibbs population count")
    else:
        d = args.dim if args.dim is not None else 2
        gamma = ThermalState(np.full(d, 1.0 / d))
    work = ((args.seed, i, gamma) for i in range(args.n))
    if args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            rows = list(pool.map(lambda w: _sample_record(*w), work))
    else:
        rows = [_sample_record(*w) for w in work]
    hits = sum(r[-1] for r in rows)
    fraction = hits / args.n
    summary = f"fraction_rtr_ge1 = {hits}/{args.n} = {fraction!r}"
    _write_csv(args.out, "sample",
               {"seed": args.seed, "n": args.n,
                "gibbs": ",".join(repr(float(p)) for p in gamma.populations)},
               ["index", "seed", "d", "r_t", "r_s", "r_joint", "rtr_ge1"],
               rows, trailer=[summary])
    print(summary)
    if args.out:
        _render_sample(args.out, rows)
    return 0


def _render_sample(out: str, rows: list[list]) -> None:
    plt = _pyplot()
    rt = np.array([r[3] for r in rows])
    rj = np.array([r[5] for r in rows])
    hit = np.array([bool(r[6]) for r in rows])
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    ax.scatter(rt[hit], rj[hit], s=4, alpha=0.4, label="r_t * r_joint >= 1")
    ax.scatter(rt[~hit], rj[~hit], s=4, alpha=0.4, label="r_t * r_joint < 1")
    xs = np.linspace(max(rt.min(), 1e-3), max(rt.max(), 1.0), 200)
    ax.plot(xs, 1.0 / xs, "k--", lw=1, label="r_t * r_joint = 1")
    ax.set_xlabel("r_t")
    ax.set_ylabel("r_joint")
    ax.set_ylim(0, min(rj.max() * 1.05, 10.0))
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(_figure_path(out), dpi=150)
    plt.close(fig)


def _switch_record(index: int, seed: int, alpha: float, s: float, phi: float,
                   r: float, gamma: ThermalState) -> list:
    ctrl = superops.ControlQubitSpec(alpha=alpha, phi=phi, r=r)
    base = channels.make_signalling_gpo(gamma.populations, s)
    ind = superops.induced_switch(base, ctrl)
    out_gamma = ThermalState(np.array([0.5, 0.5])).tensor(gamma)
    rt = measures.r_t_channel(ind, gamma, out_gamma)
    rj = measures.r_joint(ind, out_gamma)
    rs = measures.r_signalling(ind)
    analytic = superops.rt_switch_analytic(ctrl, s, gamma.g_max)
    upper = superops.switch_upper_bound(ctrl, s, gamma)
    g_min_ab = gamma.tensor(out_gamma).g_min
    lower = 2.0 * g_min_ab ** 2 * (rj - rt) ** 2
    return [index, seed, alpha, s, phi, r, rt, rs, rj, analytic, upper, lower,
            upper - rj, rj - rs, rs - lower]


SWEEP_COLUMNS = ["index", "seed", "alpha", "s", "phi", "r", "r_t", "r_s",
                 "r_joint", "r_t_analytic", "upper_bound", "sandwich_lower",
                 "slack_upper", "slack_sandwich_upper", "slack_sandwich_lower"]


def cmd_switch(args) -> int:
    gamma = _parse_gibbs(args.gibbs)
    alphas = _parse_grid(args.alpha_grid, "--alpha-grid", 0.0, 1.0)
    svals = _parse_grid(args.s_grid, "--s-grid", 0.0, 1.0)
    if not 0.0 <= args.r <= 1.0:
        raise UsageError("--r must lie in [0, 1]")
    if not 0.0 <= args.phi <= 2.0 * np.pi:
        raise UsageError("--phi must lie in [0, 2*pi]")
    points = [(i, args.seed, float(a), float(s), args.phi, args.r, gamma)
              for i, (a, s) in enumerate((a, s) for a in alphas for s in svals)]
    rows = _map_records(_switch_record, points, args.threads)
    _write_csv(args.out, "switch",
               {"seed": args.seed, "phi": repr(args.phi), "r": repr(args.r),
                "gibbs": ",".join(repr(float(p)) for p in gamma.populations)},
               SWEEP_COLUMNS, rows)
    if args.out:
        _render_sweep(args.out, rows, alphas, svals)
    return 0


def _cc_record(index: int, seed: int, alpha: float, s: float, phi: float,
               r: float, gamma: ThermalState) -> list:
    ctrl = superops.ControlQubitSpec(alpha=alpha, phi=phi, r=1.0)
    base = channels.make_signalling_gpo(gamma.populations, s)
    ind = superops.induced_cc(base, ctrl)
    out_gamma = ThermalState(np.array([0.5, 0.5])).tensor(gamma)
    rt = measures.r_t_channel(ind, gamma, out_gamma)
    rj = measures.r_joint(ind, out_gamma)
    rs = measures.r_signalling(ind)
    analytic = superops.rt_cc_analytic(alpha, gamma.dim)
    upper = superops.cc_upper_bound(ctrl, s, gamma)
    g_min_ab = gamma.tensor(out_gamma).g_min
    lower = 2.0 * g_min_ab ** 2 * (rj - rt) ** 2
    return [index, seed, alpha, s, phi, 1.0, rt, rs, rj, analytic, upper, lower,
            upper - rj, rj - rs, rs - lower]


def cmd_cc(args) -> int:
    gamma = _parse_gibbs(args.gibbs)
    alphas = _parse_grid(args.alpha_grid, "--alpha-grid", 0.0, 1.0)
    if not 0.0 <= args.phi <= 2.0 * np.pi:
        raise UsageError("--phi must lie in [0, 2*pi]")
    points = [(i, args.seed, float(a), 1.0, args.phi, 1.0, gamma)
              for i, a in enumerate(alphas)]
    rows = _map_records(_cc_record, points, args.threads)
    _write_csv(args.out, "cc",
               {"seed": args.seed, "phi": repr(args.phi),
                "gibbs": ",".join(repr(float(p)) for p in gamma.populations)},
               SWEEP_COLUMNS, rows)
    if args.out:
        _render_sweep(args.out, rows, alphas, np.array([1.0]))
    return 0


def _map_records(fn, points, threads: int) -> list[list]:
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(lambda p: fn(*p), points))
    return [fn(*p) for p in points]


def _render_sweep(out: str, rows: list[list], alphas: np.ndarray,
                  svals: np.ndarray) -> None:
    plt = _pyplot()
    arr = np.array([r[2:] for r in rows], dtype=float)
    if len(svals) > 1:
        mid = len(alphas) // 2
        sel = arr[np.isclose(arr[:, 0], alphas[mid])]
        x, xlabel = sel[:, 1], "s"
    else:
        sel = arr
        x, xlabel = sel[:, 0], "alpha"
    order = np.argsort(x)
    fig, ax = plt.subplots(figsize=(5.0, 4.0))
    for col, label, style in ((4, "r_t", "o-"), (5, "r_s", "s-"),
                              (6, "r_joint", "d-")):
        ax.plot(x[order], sel[order, col], style, ms=3, label=label)
    ax.plot(x[order], sel[order, 7], "k:", label="r_t analytic")
    ax.plot(x[order], sel[order, 8], "k--", label="upper bound")
    ax.set_xlabel(xlabel)
    ax.set_ylabel("measure value")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(_figure_path(out), dpi=150)
    plt.close(fig)


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    reports = [verify.run_suite(name, seed=args.seed, n_trials=args.n)
               for name in names]
    if args.tol is not None:
        for rep in reports:
            rep.tolerance = args.tol
            rep.passed = rep.max_violation <= args.tol
    text = "\n".join(rep.to_text() for rep in reports)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    for rep in reports:
        print(f"{rep.theorem}: {'pass' if rep.passed else 'FAIL'} "
              f"max_violation={rep.max_violation:.6g} trials={rep.trials}")
    failed = [rep for rep in reports if not rep.passed]
    if failed:
        worst = max(failed, key=lambda rep: rep.max_violation)
        print(f"verification failed: {worst.theorem} "
              f"max_violation={worst.max_violation:.6g} "
              f"tolerance={worst.tolerance:.3g}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="athermality",
        description="Athermality, signalling and joint resource measures of "
                    "quantum channels; switch/coherent-control sweeps; "
                    "verification suites.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("measure", help="measure one channel from a JSON file")
    p.add_argument("--channel", required=True, help="ChannelJson path")
    p.add_argument("--gibbs", help="input Gibbs populations, comma-separated")
    p.add_argument("--gibbs-out", help="output Gibbs populations (default: input)")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.set_defaults(fn=cmd_measure)

    p = sub.add_parser("sample", help="measure random channels, CSV output")
    p.add_argument("--n", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, default=None)
    p.add_argument("--gibbs", help="Gibbs populations (default: uniform on --dim)")
    p.add_argument("--out", help="CSV path (default: stdout); also renders PNG")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_sample)

    p = sub.add_parser("switch", help="sweep the induced switch channel")
    p.add_argument("--alpha-grid", default="0:1:11", help="start:stop:count")
    p.add_argument("--s-grid", default="0:1:11", help="start:stop:count")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--r", type=float, default=1.0)
    p.add_argument("--gibbs", default="0.5,0.5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV path (default: stdout); also renders PNG")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_switch)

    p = sub.add_parser("cc", help="sweep the coherent-control channel at s=1")
    p.add_argument("--alpha-grid", default="0:1:11", help="start:stop:count")
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--gibbs", default="0.5,0.5")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="CSV path (default: stdout); also renders PNG")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(fn=cmd_cc)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all",
                   choices=[*verify.SUITES.keys(), "all"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n", type=int, default=None,
                   help="override the suite's trial count")
    p.add_argument("--tol", type=float, default=None,
                   help="override the pass tolerance")
    p.add_argument("--out", help="write the structured report here")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
