"""Command-line front end.

Every invocation prints exactly one JSON record
``{"artifactVersion", "command", "params", "result"}`` with sorted keys, so
identical inputs produce byte-identical output (``table --csv`` prints plain
CSV instead).  All numbers are exact strings; no floating point is emitted.

Exit codes: 0 success, 1 asserted-identity failure or decreasing valuation,
2 usage error, 3 unsupported integrand spec.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from math import inf

from . import __version__
from .exactfield import PoleError, RationalFunction
from .identities import ASSERTED_IDS, IDENTITY_IDS, SuiteConfig, run_suite
from .padic import (
    BernsteinProduct,
    IntegrandSpec,
    PadicContext,
    ShiftedPower,
    UnsupportedSpecError,
    closed_form_of,
    probe_convergence,
)
from .qcore import (
    BernsteinIndex,
    bernstein,
    classical_euler,
    q_euler_number,
    q_euler_polynomial,
)

COMPUTE_KINDS = (
    "euler-number",
    "euler-poly",
    "bernstein",
    "classical-euler",
    "integral-closed-form",
)


def _emit(command: str, params: dict, result) -> None:
    record = {
        "artifactVersion": __version__,
        "command": command,
        "params": params,
        "result": result,
    }
    sys.stdout.write(json.dumps(record, sort_keys=True) + "\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _factors(text: str) -> tuple[BernsteinIndex, ...]:
    out = []
    for chunk in text.split(","):
        try:
            k, n = chunk.split(":")
            out.append(BernsteinIndex(int(k), int(n)))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(
                f"bad factor {chunk!r}; expected k:n with k <= n"
            ) from exc
    return tuple(out)


def _add_spec_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--integrand",
        choices=("shifted-power", "bernstein-product"),
        default="shifted-power",
    )
    parser.add_argument("--power-n", type=int, help="exponent of the shifted power")
    parser.add_argument("--a", type=int, default=0, help="integer shift of the argument")
    parser.add_argument("--base", choices=("q", "1/q"), default="q")
    parser.add_argument(
        "--reflected", action="store_true", help="integrate [1-x+a] instead of [x+a]"
    )
    parser.add_argument("--measure", choices=("q", "1/q"), default="q")
    parser.add_argument(
        "--factors", type=_factors, help="Bernstein factors as k:n[,k:n...]"
    )


def _spec_from_args(args, parser) -> IntegrandSpec:
    if args.integrand == "shifted-power":
        if args.power_n is None or args.power_n < 0:
            parser.error("shifted-power needs --power-n >= 0")
        kind = ShiftedPower(
            a=args.a, n=args.power_n, base=args.base, reflected=args.reflected
        )
    else:
        if not args.factors:
            parser.error("bernstein-product needs --factors k:n[,k:n...]")
        kind = BernsteinProduct(args.factors)
    return IntegrandSpec(kind, args.measure)


def _spec_params(args) -> dict:
    params: dict = {"integrand": args.integrand, "measure": args.measure}
    if args.integrand == "shifted-power":
        params.update(
            {
                "a": args.a,
                "powerN": args.power_n,
                "base": args.base,
                "reflected": args.reflected,
            }
        )
    else:
        params["factors"] = [[f.k, f.n] for f in args.factors]
    return params


def _cmd_compute(args, parser) -> int:
    kind = args.kind
    params: dict
    if kind == "classical-euler":
        if args.n is None or args.n < 0:
            parser.error("classical-euler needs --n >= 0")
        _emit("compute", {"kind": kind, "n": args.n}, str(classical_euler(args.n)))
        return 0
    if kind == "euler-number":
        if args.n is None or args.n < 0:
            parser.error("euler-number needs --n >= 0")
        value = q_euler_number(args.n)
        params = {"kind": kind, "n": args.n}
    elif kind == "euler-poly":
        if args.n is None or args.n < 0 or args.x is None:
            parser.error("euler-poly needs --n >= 0 and --x")
        value = q_euler_polynomial(args.n, args.x)
        params = {"kind": kind, "n": args.n, "x": args.x}
    elif kind == "bernstein":
        if args.n is None or args.k is None or args.x is None:
            parser.error("bernstein needs --k, --n and --x")
        try:
            idx = BernsteinIndex(args.k, args.n)
        except ValueError as exc:
            parser.error(str(exc))
        value = bernstein(idx, args.x)
        params = {"kind": kind, "k": args.k, "n": args.n, "x": args.x}
    else:  # integral-closed-form
        spec = _spec_from_args(args, parser)
        value = closed_form_of(spec)  # UnsupportedSpecError -> exit 3 in main
        params = {"kind": kind, **_spec_params(args)}
    if args.at is not None:
        params["at"] = str(args.at)
        try:
            _emit("compute", params, str(value.evaluate(args.at)))
        except PoleError as exc:
            parser.error(str(exc))
        return 0
    _emit("compute", params, str(value))
    return 0


def _cmd_verify(args, parser) -> int:
    config = SuiteConfig(
        n_max=args.n_max,
        m_max=args.m_max,
        k_max=args.k_max,
        s_max=args.s_max,
        x_min=args.x_min,
        x_max=args.x_max,
        e8_n_max=args.n_max,
    )
    ids = None if args.id == "all" else {args.id}
    try:
        result = run_suite(config, ids=ids)
    except ValueError as exc:
        parser.error(str(exc))
    payload = {
        "reports": [r.to_record() for r in result.reports],
        "skipped": [
            {"identityId": s.identity_id, "params": {k: v for k, v in s.params}, "reason": s.reason}
            for s in result.skipped
        ],
        "allAssertedHold": result.passed,
    }
    params = {
        "id": args.id,
        "nMax": args.n_max,
        "mMax": args.m_max,
        "kMax": args.k_max,
        "sMax": args.s_max,
        "xMin": args.x_min,
        "xMax": args.x_max,
    }
    _emit("verify", params, payload)
    return 0 if result.passed else 1


def _cmd_convergence(args, parser) -> int:
    try:
        ctx = PadicContext(p=args.p, q0=args.q, max_n=args.max_n)
    except ValueError as exc:
        parser.error(str(exc))
    spec = _spec_from_args(args, parser)
    probe = probe_convergence(spec, ctx)  # UnsupportedSpecError -> exit 3 in main
    rows = [
        {"N": n, "S": str(s), "valuation": "inf" if v == inf else v}
        for (n, s), (_, v) in zip(probe.partials, probe.residual_valuations)
    ]
    vals = [v for _, v in probe.residual_valuations]
    monotone = all(a <= b for a, b in zip(vals, vals[1:]))
    params = {
        "p": args.p,
        "q0": str(ctx.q0),
        "maxN": args.max_n,
        **_spec_params(args),
    }
    _emit(
        "convergence",
        params,
        {"exact": str(probe.exact), "exactValue": str(probe.exact.evaluate(ctx.q0)), "rows": rows},
    )
    return 0 if monotone else 1


def _parse_range(text: str, parser) -> tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        lo = hi = text
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError:
        parser.error(f"bad range {text!r}; expected LO..HI")
    if lo_i < 0 or hi_i < lo_i:
        parser.error(f"bad range {text!r}; need 0 <= LO <= HI")
    return lo_i, hi_i


def _cmd_table(args, parser) -> int:
    lo, hi = _parse_range(args.n, parser)
    rows = []
    for n in range(lo, hi + 1):
        value = q_euler_number(n)
        if args.q is not None:
            try:
                rows.append((n, str(value.evaluate(args.q))))
            except PoleError as exc:
                parser.error(str(exc))
        else:
            rows.append((n, str(value)))
    if args.csv:
        sys.stdout.write("n,value\n")
        for n, value in rows:
            sys.stdout.write(f'{n},"{value}"\n')
        return 0
    params = {"n": args.n}
    if args.q is not None:
        params["q0"] = str(args.q)
    _emit("table", params, {"rows": [{"n": n, "value": v} for n, v in rows]})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qeuler",
        description="Exact q-Euler / q-Bernstein computations, identity "
        "verification, and p-adic convergence probes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_compute = sub.add_parser("compute", help="compute one exact value")
    p_compute.add_argument("kind", choices=COMPUTE_KINDS)
    p_compute.add_argument("--n", type=int)
    p_compute.add_argument("--k", type=int)
    p_compute.add_argument("--x", type=int)
    p_compute.add_argument("--at", type=_fraction, help="also specialize at q = Q0")
    _add_spec_flags(p_compute)
    p_compute.set_defaults(func=_cmd_compute)

    p_verify = sub.add_parser("verify", help="run the identity suite")
    p_verify.add_argument("--id", default="all", help="identity id or 'all'")
    p_verify.add_argument("--n-max", type=int, default=8)
    p_verify.add_argument("--m-max", type=int, default=8)
    p_verify.add_argument("--k-max", type=int, default=4)
    p_verify.add_argument("--s-max", type=int, default=3)
    p_verify.add_argument("--x-min", type=int, default=-2)
    p_verify.add_argument("--x-max", type=int, default=3)
    p_verify.set_defaults(func=_cmd_verify)

    p_conv = sub.add_parser(
        "convergence", help="truncated-integral residual valuations"
    )
    p_conv.add_argument("--p", type=int, required=True, help="odd prime")
    p_conv.add_argument("--q", type=_fraction, required=True, help="rational q0")
    p_conv.add_argument("--max-N", dest="max_n", type=int, required=True)
    _add_spec_flags(p_conv)
    p_conv.set_defaults(func=_cmd_convergence)

    p_table = sub.add_parser("table", help="tabulate q-Euler numbers")
    p_table.add_argument("--n", required=True, help="index range LO..HI")
    p_table.add_argument("--q", type=_fraction, help="specialize at q = Q0")
    p_table.add_argument("--csv", action="store_true")
    p_table.set_defaults(func=_cmd_table)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except UnsupportedSpecError as exc:
        sys.stderr.write(f"unsupported integrand spec: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
