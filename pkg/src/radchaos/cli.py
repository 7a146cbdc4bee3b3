"""Command-line front end.

Exit codes: 0 success, 1 verification violations, 2 input or usage error,
3 enumeration budget exceeded.  Diagnostics go to stderr prefixed "error:".
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict

from .core import (
    BudgetExceeded,
    Coloring,
    InvariantError,
    MixedNormProfile,
    ParseError,
    chaos_coeffs,
    parse_hypergraph,
    parse_tensor,
)
from .discrepancy import (
    DiscResult,
    balance,
    disc_exact,
    disc_for_coloring,
    disc_monte_carlo,
    expected_disc_exact,
)
from .norms import (
    NormResult,
    cut_norm,
    cut_norm_star,
    linf_chaos,
    linf_multiple,
    lp_rademacher_exact,
    mixed_norm_profile,
    opnorm_inf_to_1,
)
from .parallel import default_workers
from .verify import (
    RANDOM_KINDS,
    SCALING_SUITE,
    SUITE_NAMES,
    SUITES,
    CheckReport,
    ScanTable,
    run_suite,
    scaling_scan,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

NORM_KINDS = ("opnorm", "cut", "cut-star", "linf", "chaos", "lp", "profile")
CHAOS_KINDS = ("cut-star", "chaos")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# --------------------------------------------------------------------------
# serialization


def _num(x):
    if x is None:
        return None
    x = float(x)
    if not math.isfinite(x):
        return str(x)
    return float(f"{x:.12g}")


def _hex(mask):
    return None if mask is None else hex(int(mask))


def to_jsonable(result):
    if isinstance(result, NormResult):
        return {"value": _num(result.value), "witness": {k: _hex(v) for k, v in result.witness.items()}}
    if isinstance(result, DiscResult):
        return {
            "value": _num(result.value),
            "coloring": _hex(result.coloring.mask) if result.coloring is not None else None,
            "witness_subset": _hex(result.witness_subset),
            "stderr": _num(result.stderr),
            "trials": result.trials,
            "best": _num(result.best),
        }
    if isinstance(result, CheckReport):
        d = result.to_dict()
        d["min_ratio"], d["max_ratio"] = _num(d["min_ratio"]), _num(d["max_ratio"])
        d["details"] = {k: ([_num(x) for x in v] if isinstance(v, list) else _num(v))
                        for k, v in d["details"].items()}
        return d
    if isinstance(result, ScanTable):
        return {
            "d": result.d,
            "monotone": result.monotone,
            "rows": [{k: (_num(v) if k != "n" else v) for k, v in asdict(r).items()} for r in result.rows],
        }
    if isinstance(result, MixedNormProfile):
        return {"m": [_num(x) for x in result.m], "max": _num(result.max())}
    if isinstance(result, (list, tuple)):
        return [to_jsonable(r) for r in result]
    if isinstance(result, dict):
        return {k: to_jsonable(v) for k, v in result.items()}
    if isinstance(result, (int, float)) and not isinstance(result, bool):
        return _num(result)
    return result


def emit(result, fmt: str = "json") -> str:
    """JSON for every result; CSV only for scan tables."""
    if fmt == "json":
        return json.dumps(to_jsonable(result), indent=2) + "\n"
    if fmt != "csv":
        raise ValueError(f"unknown format {fmt!r}")
    if not isinstance(result, ScanTable):
        raise ValueError("CSV output is only available for scan tables")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ScanTable.HEADER)
    for r in result.rows:
        w.writerow([r.n] + ["" if v is None else repr(_num(v))
                            for v in (r.disc_exact, r.e_mc, r.best, r.balance, r.n_pow)])
    return buf.getvalue()


# --------------------------------------------------------------------------
# argument parsing


def _common(p):
    p.add_argument("--budget", type=lambda s: int(s, 0), default=None,
                   help="objective-update cap (default $RADCHAOS_BUDGET or 2^28)")
    p.add_argument("--threads", type=int, default=None, help="worker threads (default: all cores)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default="-", help="output path, '-' for stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="radchaos", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    p = sub.add_parser("norm", help="compute one norm of a tensor or chaos/hypergraph input")
    _common(p)
    p.add_argument("--kind", choices=NORM_KINDS, required=True)
    p.add_argument("--input", required=True, help="tensor file (CSV/JSON) or, for cut-star/chaos, hypergraph file")
    p.add_argument("--p", type=float, default=1.0, help="moment for --kind lp")

    p = sub.add_parser("disc", help="discrepancy of a weighted hypergraph")
    _common(p)
    p.add_argument("--input", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="min over colorings (default)")
    mode.add_argument("--expected", action="store_true", help="exact mean over colorings")
    mode.add_argument("--mc", action="store_true", help="Monte-Carlo mean over colorings")
    mode.add_argument("--coloring", help="evaluate one coloring, e.g. '+-+' or '1,-1,1'")

    p = sub.add_parser("verify", help="run inequality suites")
    _common(p)
    p.add_argument("--suite", default="all", help=f"one of: all, {', '.join(SUITE_NAMES)}")
    p.add_argument("--sizes", help="comma list of shapes, e.g. '5' or '4x5,6'")
    p.add_argument("--count", type=int, help="instances per shape and kind")
    p.add_argument("--kind", action="append", choices=RANDOM_KINDS, help="instance kinds (default: all)")
    p.add_argument("--no-catalog", action="store_true", help="skip the pinned extremal catalog")

    p = sub.add_parser("scan", help="discrepancy scaling table for unit complete hypergraphs")
    _common(p)
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--n-min", type=int, default=3)
    p.add_argument("--n-max", type=int, default=7)
    return parser


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _parse_coloring(text: str) -> Coloring:
    text = text.strip()
    if "," in text or " " in text:
        return Coloring(tuple(int(t) for t in text.replace(",", " ").split()))
    table = {"+": 1, "-": -1}
    try:
        return Coloring(tuple(table[c] for c in text))
    except KeyError:
        raise InvariantError(f"bad coloring {text!r}") from None


def _parse_sizes(text: str, order: int) -> tuple[tuple[int, ...], ...]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        dims = tuple(int(k) for k in tok.lower().split("x"))
        if any(k < 1 for k in dims):
            raise UsageError(f"bad size {tok!r}")
        out.append(dims * order if len(dims) == 1 else dims)
    return tuple(out)


# --------------------------------------------------------------------------
# verbs


def _norm(args, workers):
    text = _read(args.input)
    if args.kind in CHAOS_KINDS:
        a = chaos_coeffs(parse_hypergraph(text))
        fn = cut_norm_star if args.kind == "cut-star" else linf_chaos
        return fn(a, budget=args.budget, workers=workers)
    t = parse_tensor(text)
    if args.kind == "lp":
        return {"value": lp_rademacher_exact(t.values.ravel(), args.p)}
    if args.kind == "profile":
        return mixed_norm_profile(t)
    fn = {"opnorm": opnorm_inf_to_1, "cut": cut_norm, "linf": linf_multiple}[args.kind]
    return fn(t, budget=args.budget, workers=workers)


def _disc(args, workers):
    h = parse_hypergraph(_read(args.input))
    if args.coloring:
        res = disc_for_coloring(h, _parse_coloring(args.coloring), budget=args.budget, workers=workers)
    elif args.expected:
        res = expected_disc_exact(h, budget=args.budget, workers=workers)
    elif args.mc:
        res = disc_monte_carlo(h, args.trials, args.seed, budget=args.budget, workers=workers)
    else:
        res = disc_exact(h, budget=args.budget, workers=workers)
    out = to_jsonable(res)
    out["balance"] = _num(balance(h))
    return out


def _verify(args, workers):
    names = SUITE_NAMES if args.suite == "all" else (args.suite,)
    for name in names:
        if name not in SUITE_NAMES:
            raise UsageError(f"unknown suite {name!r}; choose from all, {', '.join(SUITE_NAMES)}")
    reports = []
    for name in names:
        sizes = None
        if args.sizes and name != SCALING_SUITE:
            sizes = _parse_sizes(args.sizes, len(SUITES[name].sizes[0]))
        reports.append(run_suite(
            name, sizes=sizes, count=args.count, seed=args.seed,
            kinds=tuple(args.kind) if args.kind else RANDOM_KINDS,
            budget=args.budget, workers=workers, include_catalog=not args.no_catalog,
            trials=args.trials,
        ))
    return reports if args.suite == "all" else reports[0]


def _scan(args, workers):
    return scaling_scan(args.d, (args.n_min, args.n_max), args.trials, args.seed,
                        budget=args.budget, workers=workers)


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        workers = default_workers() if args.threads is None else args.threads
        if workers < 1:
            raise UsageError("--threads must be positive")
        if args.trials < 1:
            raise UsageError("--trials must be positive")
        result = {"norm": _norm, "disc": _disc, "verify": _verify, "scan": _scan}[args.verb](args, workers)
        text = emit(result, args.format)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, InvariantError, ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)

    reports = result if isinstance(result, list) else [result]
    if any(isinstance(r, CheckReport) and not r.passed for r in reports):
        return EXIT_VIOLATION
    if isinstance(result, ScanTable) and not result.monotone:
        return EXIT_VIOLATION
    return EXIT_OK


def main():
    sys.exit(run())
