"""Command line front end.

    bifree transform --op s|t|rtilde [--order N] [--mode exact|float] MU.json [-o OUT]
    bifree convolve  --op bbmult|bpmult [--order N] [--mode ...] MU.json NU.json [-o OUT]
    bifree oracle    --op bbmult|bpmult|bbadd --pmax P --qmax Q [--mode ...] MU.json NU.json [-o OUT]
    bifree selfcheck [--seeds K] [--dim D ...]

Exit codes: 0 success, 1 usage or input format error, 2 violated
precondition, 3 internal invariant failure.
"""

import argparse
import sys

from . import convolutions, matrix_checks, oracle, transforms
from .errors import InternalInvariantError, PreconditionError
from .serialize import (
    EXACT,
    FLOAT,
    InputFormatError,
    dumps,
    load,
    series_to_json,
    table_to_json,
    twoband_from_json,
    twoband_to_json,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def build_parser():
    parser = _Parser(prog="bifree", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(p, ops, arity):
        p.add_argument("--op", required=True, choices=ops)
        p.add_argument("--mode", choices=[EXACT, FLOAT], default=EXACT)
        p.add_argument("inputs", nargs=arity, metavar="INPUT")
        p.add_argument("-o", "--output")

    p = sub.add_parser("transform", help="partial transform of one law")
    common(p, ["s", "t", "rtilde"], 1)
    p.add_argument("--order", type=_positive)

    p = sub.add_parser("convolve", help="bi-free convolution via transforms")
    common(p, [convolutions.BBMULT, convolutions.BPMULT], 2)
    p.add_argument("--order", type=_positive)

    p = sub.add_parser("oracle", help="moments from the free product model")
    common(p, list(oracle.OPS), 2)
    p.add_argument("--pmax", type=int, required=True)
    p.add_argument("--qmax", type=int, required=True)

    p = sub.add_parser("selfcheck", help="matrix checks of the resolvent identities")
    p.add_argument("--seeds", type=_positive, default=100)
    p.add_argument("--dim", type=_positive, action="append")
    return parser


def _load_law(path, mode, order):
    return twoband_from_json(load(path), mode=mode, order=order)


def _emit(obj, output):
    text = dumps(obj)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _transform(args):
    d = _load_law(args.inputs[0], args.mode, args.order)
    result = transforms.compute(args.op, d)
    _emit(series_to_json(result.series, kind=result.kind), args.output)
    print(f"reliable order: {result.order}", file=sys.stderr)


def _convolve(args):
    mu, nu = (_load_law(p, args.mode, args.order) for p in args.inputs)
    if mu.order != nu.order:
        n = min(mu.order, nu.order)
        mu, nu = mu.truncate(n), nu.truncate(n)
    res = convolutions.convolve(args.op, mu, nu)
    _emit(twoband_to_json(res.result, op=res.op), args.output)
    print(f"reliable order: {res.reliable_order}", file=sys.stderr)


def _oracle(args):
    if args.pmax < 0 or args.qmax < 0:
        raise UsageError("--pmax and --qmax must be non-negative")
    mu, nu = (_load_law(p, args.mode, None) for p in args.inputs)
    table = oracle.oracle_moments(args.op, mu, nu, args.pmax, args.qmax)
    obj = table_to_json(table, op=args.op, order=min(args.pmax, args.qmax),
                        pmax=args.pmax, qmax=args.qmax)
    _emit(obj, args.output)


def _selfcheck(args):
    dims = args.dim or [1, 2, 4, 8]
    reports = matrix_checks.selfcheck(args.seeds, dims)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"seed {r.seed:4d}  dim {r.dim}  mult {r.multiplicative:.3e}  "
              f"add {r.additive:.3e}  {status}")
    failed = sum(not r.passed for r in reports)
    print(f"{len(reports) - failed}/{len(reports)} passed")
    return EXIT_OK if failed == 0 else EXIT_INTERNAL


_VERBS = {
    "transform": _transform,
    "convolve": _convolve,
    "oracle": _oracle,
    "selfcheck": _selfcheck,
}


def run(argv=None):
    """Execute one command and return its exit code."""
    try:
        args = build_parser().parse_args(argv)
        return _VERBS[args.verb](args) or EXIT_OK
    except (UsageError, InputFormatError, OSError) as exc:
        print(f"bifree: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionError as exc:
        print(f"bifree: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except InternalInvariantError as exc:
        print(f"bifree: internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main():
    sys.exit(run())
