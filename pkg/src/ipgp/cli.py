"""Command-line entry point: ``ipgp compute|verify|roots|sweep``.

Exit codes
----------
0   success
1   invalid parameters
2   I/O failure
3   verify: transfer and oracle polynomials differ
4   verify: instance exceeds the oracle cap
5   roots: root finding did not converge (partial CSV written)
10  sweep: at least one pair contradicts the parity prediction
"""
from __future__ import annotations

import argparse
import io
import json
import math
import os
import sys
from pathlib import Path

from . import __version__
from .analysis import ConjectureRow, counterexamples, sweep_conjecture
from .cache import PolyCache, atomic_write_text, resolve_cache_dir
from .graph import GPParams, ParamError, build_gp
from .oracle import DEFAULT_CAP, OracleCapExceeded, census, census_to_poly
from .plot import roots_svg
from .poly import IntPoly
from .roots import DEFAULT_PRECISION_BITS, RootFindingError, find_roots

EXIT_OK = 0
EXIT_PARAMS = 1
EXIT_IO = 2
EXIT_MISMATCH = 3
EXIT_ORACLE_CAP = 4
EXIT_NO_CONVERGENCE = 5
EXIT_COUNTEREXAMPLE = 10

SCHEMA = 1
SWEEP_HEADER = "n,k,degree,real_count,real_rooted,parity_prediction,agrees,max_im,min_re,max_re"
ROOTS_HEADER = "n,k,root_index,re,im,residual"


def parse_int_range(text: str) -> range:
    """``"7"`` or inclusive ``"3..9"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a..b range, got {text!r}")
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _g17(v: float) -> str:
    return "nan" if v is None or math.isnan(v) else f"{v:.17g}"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def poly_result_json(n: int, k: int, poly: IntPoly) -> str:
    obj = {"schema": SCHEMA, "n": n, "k": k, "coeffs": poly.to_json()["coeffs"],
           "alpha": poly.degree}
    return json.dumps(obj, indent=2) + "\n"


def roots_csv(n: int, k: int, roots, residuals) -> str:
    buf = io.StringIO()
    buf.write(ROOTS_HEADER + "\n")
    for i, (z, res) in enumerate(zip(roots, residuals)):
        buf.write(f"{n},{k},{i},{_g17(z.real)},{_g17(z.imag)},{_g17(res)}\n")
    return buf.getvalue()


def sweep_csv(rows) -> str:
    buf = io.StringIO()
    buf.write(SWEEP_HEADER + "\n")
    for r in rows:
        if r.error:
            buf.write(f"{r.n},{r.k},,,,{_bool(r.parity_prediction)},,nan,nan,nan\n")
            continue
        buf.write(",".join([
            str(r.n), str(r.k), str(r.degree), str(r.exact_real_count),
            _bool(r.is_real_rooted), _bool(r.parity_prediction), _bool(r.agrees),
            _g17(r.max_im), _g17(r.min_re), _g17(r.max_re),
        ]) + "\n")
    return buf.getvalue()


def sweep_json(rows) -> str:
    def clean(row: ConjectureRow):
        obj = row.to_json()
        for key, val in obj.items():
            if isinstance(val, float) and math.isnan(val):
                obj[key] = None
        return obj

    return json.dumps({"schema": SCHEMA, "rows": [clean(r) for r in rows]}, indent=2) + "\n"


def _single(rng: range, name: str) -> int:
    if len(rng) != 1:
        raise ParamError(f"--{name} must be a single integer for this command")
    return rng[0]


def _params(args) -> GPParams:
    n = _single(args.n, "n")
    k_list = args.k
    if len(k_list) != 1:
        raise ParamError("--k must be a single integer for this command")
    return GPParams(n, k_list[0])


def _cache(args):
    if getattr(args, "no_cache", False):
        return None
    return PolyCache(resolve_cache_dir(args.cache_dir), __version__)


def _poly(args, params: GPParams) -> IntPoly:
    from .transfer import independence_polynomial

    cache = _cache(args)
    if cache is None:
        return independence_polynomial(params)
    return cache(params.n, params.k)


def _write(path, text: str) -> None:
    if path is None or str(path) == "-":
        sys.stdout.write(text)
    else:
        atomic_write_text(Path(path), text)


def cmd_compute(args) -> int:
    params = _params(args)
    poly = _poly(args, params)
    text = poly_result_json(params.n, params.k, poly)
    summary = f"GP({params.n},{params.k}): degree {poly.degree}, {len(poly.coeffs)} coefficients"
    if args.out:
        _write(args.out, text)
        print(summary)
    else:
        print(summary, file=sys.stderr)
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .transfer import independence_polynomial

    params = _params(args)
    try:
        oracle = census_to_poly(census(build_gp(params), cap=args.oracle_cap))
    except OracleCapExceeded as exc:
        print(f"oracle cap exceeded: {exc}", file=sys.stderr)
        return EXIT_ORACLE_CAP
    transfer = independence_polynomial(params)
    if transfer == oracle:
        print("MATCH")
        print(f"Ind(GP({params.n},{params.k}), x) = {transfer}")
        return EXIT_OK
    print("MISMATCH")
    width = max(len(transfer), len(oracle))
    for i in range(width):
        a, b = transfer[i], oracle[i]
        if a != b:
            print(f"  x^{i}: transfer={a} oracle={b}")
    return EXIT_MISMATCH


def cmd_roots(args) -> int:
    params = _params(args)
    poly = _poly(args, params)
    code = EXIT_OK
    try:
        report = find_roots(poly, precision_bits=args.precision_bits)
        roots, residuals = report.roots, report.residuals
    except RootFindingError as exc:
        print(f"warning: {exc}; writing partial roots", file=sys.stderr)
        roots = exc.partial or []
        residuals = [math.nan] * len(roots)
        report = None
        code = EXIT_NO_CONVERGENCE
    _write(args.csv, roots_csv(params.n, params.k, roots, residuals))
    if args.svg:
        _write(args.svg, roots_svg(roots, params.n, params.k, version=__version__))
    if report is not None:
        verdict = "real-rooted" if report.is_real_rooted else "NOT real-rooted"
        msg = (f"GP({params.n},{params.k}): degree {report.degree}, exact real roots "
               f"{report.exact_real_count} -> {verdict}; max residual {report.max_residual:.3g}")
        print(msg, file=sys.stderr if args.csv in (None, "-") else sys.stdout)
    return code


def cmd_sweep(args) -> int:
    out_dir = Path(args.out)
    notices = []
    rows = sweep_conjecture(args.n, args.k, workers=args.threads,
                            precision_bits=args.precision_bits,
                            poly_source=_cache(args), notice=notices.append)
    for msg in notices:
        print(f"notice: {msg}", file=sys.stderr)
    out_dir.mkdir(parents=True, exist_ok=True)
    atomic_write_text(out_dir / "sweep.csv", sweep_csv(rows))
    atomic_write_text(out_dir / "sweep.json", sweep_json(rows))

    print(f"{'n':>3} {'k':>2} {'deg':>4} {'real':>4} {'real-rooted':>11} {'k even':>6} {'agrees':>6}")
    for r in rows:
        if r.error:
            print(f"{r.n:>3} {r.k:>2}  ERROR {r.error}")
            continue
        print(f"{r.n:>3} {r.k:>2} {r.degree:>4} {r.exact_real_count:>4} "
              f"{_bool(r.is_real_rooted):>11} {_bool(r.parity_prediction):>6} {_bool(r.agrees):>6}")
    bad = counterexamples(rows)
    if bad:
        where = ", ".join(f"({r.n},{r.k})" for r in bad)
        print(f"PARITY CONJECTURE: COUNTEREXAMPLE FOUND at {where}")
        return EXIT_COUNTEREXAMPLE
    print("PARITY CONJECTURE: consistent")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAMS, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ipgp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"ipgp {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, k_default=None):
        p.add_argument("--n", type=parse_int_range, required=True,
                       help="cycle length, an integer or inclusive range a..b")
        p.add_argument("--k", type=parse_int_list, required=k_default is None, default=k_default,
                       help="inner step, comma-separated list")
        p.add_argument("--cache-dir", default=None,
                       help="polynomial cache directory (default ./.ipgp-cache; "
                            "IPGP_CACHE_DIR overrides)")
        p.add_argument("--no-cache", action="store_true", help="do not read or write the cache")
        p.add_argument("--precision-bits", type=int, default=DEFAULT_PRECISION_BITS)
        p.add_argument("--threads", type=int, default=os.cpu_count() or 1)

    p = sub.add_parser("compute", help="independence polynomial via the transfer matrix")
    common(p)
    p.add_argument("--out", default=None, help="JSON output path (default stdout)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="compare against brute-force enumeration")
    common(p)
    p.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP,
                   help="largest vertex count the oracle accepts")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("roots", help="numeric roots with exact real-root count")
    common(p)
    p.add_argument("--csv", default=None, help="CSV output path (default stdout)")
    p.add_argument("--svg", default=None, help="optional SVG scatter plot path")
    p.set_defaults(func=cmd_roots)

    p = sub.add_parser("sweep", help="parity check over a grid of (n, k)")
    common(p)
    p.add_argument("--out", default="sweep-out", help="output directory for sweep.csv/json")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParamError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARAMS
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
