"""Command-line interface.

Subcommands: partition, pnu, gpoly, trace, eigenforms, dirichlet, rademacher,
verify.  JSON is the canonical output format (exact rationals as strings,
floats as 17-significant-digit strings); csv and text are flattened views.
Every record echoes the RunConfig that produced it; timing lives in its own
"timings" key so the rest of the output is byte-deterministic.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 internal
assertion failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import comb

from . import dirichlet as dmod
from . import forms, hecke, partitions, rademacher, rankincohen, verify
from .errors import InternalCancellationError, NotInSpaceError, PentarcError
from .qseries import DEFAULT_PREC
from .serialize import jsonable

ENV_PREFIX = "PENTARC_"


@dataclass(frozen=True)
class RunConfig:
    prec: int = DEFAULT_PREC
    big_m: int = dmod.DEFAULT_BIG_M
    big_n: int | None = None  # None -> per-weight default
    depth_c: int = 50
    float_mode: str = "binary64"
    fmt: str = "json"
    out: str | None = None


def _config_from(args: argparse.Namespace) -> RunConfig:
    """Flags win over environment variables, which win over the config file."""
    values = asdict(RunConfig())
    if getattr(args, "config", None):
        with open(args.config, "r", encoding="utf-8") as fh:
            loaded = json.load(fh)
        for key in values:
            if key in loaded:
                values[key] = loaded[key]
    env_keys = {
        "prec": int,
        "big_m": int,
        "big_n": int,
        "depth_c": int,
        "float_mode": str,
        "fmt": str,
    }
    for key, conv in env_keys.items():
        raw = os.environ.get(ENV_PREFIX + key.upper())
        if raw is not None:
            values[key] = conv(raw)
    for key in ("prec", "big_m", "big_n", "depth_c", "float_mode", "fmt", "out"):
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    return RunConfig(**values)


def _flat(obj, prefix=""):
    items = {}
    if isinstance(obj, dict):
        for k in sorted(obj):
            items.update(_flat(obj[k], f"{prefix}.{k}" if prefix else str(k)))
    elif isinstance(obj, list):
        for i, v in enumerate(obj):
            items.update(_flat(v, f"{prefix}[{i}]"))
    else:
        items[prefix] = obj
    return items


def _render(payload: dict, fmt: str) -> str:
    data = jsonable(payload)
    if fmt == "json":
        return json.dumps(data, indent=2, sort_keys=True) + "\n"
    if fmt == "text":
        flat = _flat(data)
        return "".join(f"{k}: {v}\n" for k, v in flat.items())
    if fmt == "csv":
        rows = data.get("results", [])
        if isinstance(rows, dict):
            rows = [rows]
        flat_rows = [_flat(r) for r in rows]
        header = sorted({k for r in flat_rows for k in r})
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        for r in flat_rows:
            writer.writerow([r.get(k, "") for k in header])
        return buf.getvalue()
    raise ValueError(f"unknown format {fmt!r}")


def _emit(payload: dict, cfg: RunConfig) -> None:
    text = _render(payload, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _partition_by_method(n: int, method: str, cfg: RunConfig, traces=None) -> dict:
    if method == "euler":
        return {"n": n, "method": "euler", "value": Fraction(partitions.partition_table(n).p(n))}
    if method.startswith("trace:"):
        nu = int(method.split(":", 1)[1])
        table = partitions.partition_table(n)
        trace = traces.value(n) if traces is not None else Fraction(0)
        value = partitions.recurrence_rhs(nu, n, trace, table)
        return {"n": n, "method": method, "value": value}
    if method.startswith("rademacher:"):
        depth = int(method.split(":", 1)[1])
        est = rademacher.rademacher_pn(n, depth)
        return {
            "n": n,
            "method": method,
            "value": est.nearest,
            "estimate": est.estimate,
            "gap": est.gap,
            "imag": est.imag,
            "depth": est.depth,
        }
    raise ValueError(f"unknown method {method!r}")


def cmd_partition(args, cfg: RunConfig) -> tuple[dict, int]:
    ns = _parse_range(args.n)
    traces = None
    if args.method.startswith("trace:"):
        nu = int(args.method.split(":", 1)[1])
        if forms.dim_cusp(2 * nu):
            traces = hecke.trace_series(nu, max(ns))
    results, code = [], 0
    for n in ns:
        record = _partition_by_method(n, args.method, cfg, traces)
        if args.cross_check:
            baseline = Fraction(partitions.partition_table(n).p(n))
            agree = Fraction(record["value"]) == baseline
            record["cross_check"] = {"euler": baseline, "agree": agree}
            if not agree:
                record["diff"] = Fraction(record["value"]) - baseline
                code = 1
        results.append(record)
    return {"command": "partition", "results": results}, code


def cmd_pnu(args, cfg: RunConfig) -> tuple[dict, int]:
    nu, prec = args.nu, cfg.prec
    bracket = rankincohen.eta_bracket(nu, prec)
    record: dict = {
        "nu": nu,
        "prec": prec,
        "series": bracket,
        "eisenstein_coefficient": bracket.coeff(0),
    }
    if nu >= 2:
        space = forms.space_basis(2 * nu, prec)
        record["monomial_coordinates"] = forms.decompose(bracket, space)
        c = comb(2 * nu - 2, nu - 2)
        cusp = bracket - forms.eisenstein(2 * nu, prec).scale(c)
        record["cusp_coordinates"] = [cusp.coeff(i + 1) for i in range(space.dim_cusp)]
        if space.dim_cusp == 1:
            record["cusp_multiplier"] = cusp.coeff(1)
        if space.dim_cusp in (1, 2):
            record["projections"] = list(hecke.eigenform_projections(nu))
    return {"command": "pnu", "results": record}, 0


def cmd_gpoly(args, cfg: RunConfig) -> tuple[dict, int]:
    results = [
        {"nu": args.nu, "n": args.n, "k": k, "value": partitions.recurrence_weight(args.nu, args.n, k)}
        for k in _parse_range(args.k)
    ]
    return {"command": "gpoly", "results": results}, 0


def cmd_trace(args, cfg: RunConfig) -> tuple[dict, int]:
    series = hecke.trace_series(args.nu, args.n)
    results = [{"n": n, "value": series.value(n)} for n in range(1, args.n + 1)]
    return {"command": "trace", "nu": args.nu, "results": results}, 0


def cmd_eigenforms(args, cfg: RunConfig) -> tuple[dict, int]:
    fs = hecke.eigenforms(args.weight)
    results = [
        {"weight": f.weight, "d": f.disc, "coefficients": list(f.coeffs)} for f in fs
    ]
    return {"command": "eigenforms", "results": results}, 0


def _parse_float_mode(mode: str) -> int | None:
    if mode == "binary64":
        return None
    if mode.startswith("wide:"):
        return int(mode.split(":", 1)[1])
    raise ValueError(f"unknown float mode {mode!r}")


def cmd_dirichlet(args, cfg: RunConfig) -> tuple[dict, int]:
    nu = args.nu
    big_n = cfg.big_n if cfg.big_n is not None else dmod.default_big_n(nu)
    dps = _parse_float_mode(cfg.float_mode)
    projections = hecke.eigenform_projections(nu)
    embedded = dmod.embedded_eigenforms(nu, big_n)
    results = []
    for i, (f, gamma) in enumerate(zip(embedded, projections)):
        value = dmod.dirichlet_double_sum(f, nu, cfg.big_m, big_n, dps)
        results.append(
            {
                "eigenform": i + 1,
                "double_sum": value,
                "projection_exact": gamma,
                "norm_estimate": value / gamma.embed(),
            }
        )
    payload = {
        "command": "dirichlet",
        "nu": nu,
        "big_m": cfg.big_m,
        "big_n": big_n,
        "results": results,
    }
    return payload, 0


def cmd_rademacher(args, cfg: RunConfig) -> tuple[dict, int]:
    results = []
    for n in _parse_range(args.n):
        est = rademacher.rademacher_pn(n, cfg.depth_c)
        results.append(
            {
                "n": n,
                "estimate": est.estimate,
                "nearest": est.nearest,
                "gap": est.gap,
                "imag": est.imag,
                "depth": est.depth,
            }
        )
    return {"command": "rademacher", "results": results}, 0


def cmd_verify(args, cfg: RunConfig) -> tuple[dict, int]:
    try:
        report = verify.run_suite(args.suite)
    except KeyError as exc:
        raise ValueError(str(exc)) from exc
    payload = {"command": "verify", "results": report}
    return payload, 0 if report["ok"] else 1


def _shared_options() -> argparse.ArgumentParser:
    # SUPPRESS keeps the subparser from clobbering flags given before the
    # subcommand with its own defaults
    S = argparse.SUPPRESS
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--prec", type=int, default=S, help="integer q-coefficients (default 60)")
    shared.add_argument("--big-m", dest="big_m", type=int, default=S, help="Dirichlet m-truncation")
    shared.add_argument("--big-n", dest="big_n", type=int, default=S, help="Dirichlet n-truncation")
    shared.add_argument("--depth-c", dest="depth_c", type=int, default=S, help="Kloosterman depth C")
    shared.add_argument(
        "--float-mode", dest="float_mode", default=S,
        help="binary64 (default) or wide:<dps> for mpmath weight evaluation",
    )
    shared.add_argument("--format", dest="fmt", choices=("json", "csv", "text"), default=S)
    shared.add_argument("--out", default=S, help="write output to a file instead of stdout")
    shared.add_argument("--config", default=S, help="optional JSON config file (flags win)")
    return shared


def build_parser() -> argparse.ArgumentParser:
    shared = _shared_options()
    parser = argparse.ArgumentParser(
        prog="pentarc",
        parents=[shared],
        description="Exact pentagonal partition recurrences, eta-bracket "
        "decompositions, twisted Dirichlet sums, and Kloosterman-Bessel p(n).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str):
        return sub.add_parser(name, help=help_text, parents=[shared])

    p = add("partition", "partition numbers by several methods")
    p.add_argument("n", help="index or inclusive range a..b")
    p.add_argument("--method", default="euler", help="euler | trace:NU | rademacher:C")
    p.add_argument("--cross-check", action="store_true", dest="cross_check")
    p.set_defaults(func=cmd_partition)

    p = add("pnu", "eta bracket with its exact decomposition")
    p.add_argument("nu", type=int)
    p.set_defaults(func=cmd_pnu)

    p = add("gpoly", "recurrence weight polynomial values")
    p.add_argument("nu", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--k", default="0", help="index or inclusive range a..b")
    p.set_defaults(func=cmd_gpoly)

    p = add("trace", "exact trace values 1..N")
    p.add_argument("nu", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_trace)

    p = add("eigenforms", "normalized Hecke eigenforms")
    p.add_argument("weight", type=int)
    p.set_defaults(func=cmd_eigenforms)

    p = add("dirichlet", "truncated Dirichlet sums and norm estimates")
    p.add_argument("nu", type=int)
    p.set_defaults(func=cmd_dirichlet)

    p = add("rademacher", "Kloosterman-Bessel partial sums for p(n)")
    p.add_argument("n", help="index or inclusive range a..b")
    p.set_defaults(func=cmd_rademacher)

    p = add("verify", "run a named verification suite")
    p.add_argument("suite", help="|".join(sorted(verify.SUITES)))
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config_from(args)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"pentarc: bad configuration: {exc}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        payload, code = args.func(args, cfg)
    except InternalCancellationError as exc:
        print(f"pentarc: internal assertion failed: {exc}", file=sys.stderr)
        return 3
    except NotInSpaceError as exc:
        print(f"pentarc: verification failed: {exc}", file=sys.stderr)
        return 1
    except (ValueError, PentarcError) as exc:
        print(f"pentarc: {exc}", file=sys.stderr)
        return 2
    payload["config"] = asdict(cfg)
    payload["timings"] = {"seconds": time.perf_counter() - start}
    _emit(payload, cfg)
    return code


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
