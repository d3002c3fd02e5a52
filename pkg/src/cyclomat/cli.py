"""Command-line interface.

Subcommands:

  compute  -- emit the cyclotomic matrix and its derived matrices
  verify   -- run identity suites and emit a pass/fail ledger
  diffset  -- full difference-set report for one context
  search   -- scan a q-range for power difference sets (JSON lines)
  survey   -- column permutation survey (experimental data gathering)

Exit codes: 0 clean, 1 usage or configuration error, 2 verification failure.
Output is byte-identical across runs for a fixed command line.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .cyclotomy import CycloCtx, build_matrices, verify_elementary_laws
from .diffset import (
    as_odd_prime_power,
    build_report,
    modified_diffset,
    search,
)
from .errors import CyclomatError, KEven
from .field import build_field
from .report import dumps, matrix_pretty, matrix_to_csv, matrix_to_obj
from .schur import (
    column_permutation_survey,
    run_identity_suite,
    verify_column_products,
    verify_commutator,
    verify_inner_product_identity,
    verify_matrix_product_law,
    verify_regular_representation,
    verify_structure_constants,
    verify_sum_of_squares,
    verify_traces,
    verify_transposed_product_law,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _add_field_args(sub):
    sub.add_argument("--p", type=int, required=True, help="odd prime characteristic")
    sub.add_argument("--n", type=int, default=1, help="extension degree")
    sub.add_argument("--modulus", type=str, default=None,
                     help="comma-separated c0,c1,...,cn (monic, low degree first)")
    sub.add_argument("--generator", type=int, default=None,
                     help="canonical index of a generator override")


def _build_parser():
    parser = _Parser(prog="cyclo", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("compute", help="emit cyclotomic matrices")
    _add_field_args(c)
    c.add_argument("--ell", type=int, required=True)
    c.add_argument("--emit", type=str, default="a",
                   help="comma-separated subset of a,m,b,s")
    c.add_argument("--format", choices=("json", "csv", "pretty"),
                   default="pretty")

    v = subs.add_parser("verify", help="run identity suites")
    _add_field_args(v)
    v.add_argument("--ell", type=int, required=True)
    v.add_argument("--suite", choices=("schur", "identities", "all"),
                   default="all")
    v.add_argument("--seed", type=int, default=0)

    d = subs.add_parser("diffset", help="difference-set report")
    _add_field_args(d)
    d.add_argument("--ell", type=int, required=True)
    d.add_argument("--modified", action="store_true",
                   help="report on K ∪ {0} instead of K")

    s = subs.add_parser("search", help="scan a range for difference sets")
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--max-q", type=int, required=True)
    s.add_argument("--min-q", type=int, default=3)
    s.add_argument("--prime-only", action="store_true")
    s.add_argument("--jobs", type=int, default=1)

    y = subs.add_parser("survey", help="column permutation survey")
    y.add_argument("--ell", type=int, required=True)
    y.add_argument("--p", type=int, default=None)
    y.add_argument("--n", type=int, default=1)
    y.add_argument("--modulus", type=str, default=None)
    y.add_argument("--generator", type=int, default=None)
    y.add_argument("--max-q", type=int, default=None)
    return parser


def _parse_modulus(text):
    if text is None:
        return None
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise _UsageError("--modulus must be a comma-separated integer list")


def _make_ctx(args):
    field = build_field(args.p, n=args.n, modulus=_parse_modulus(args.modulus),
                        generator=args.generator)
    return CycloCtx(field, args.ell)


def _meta(ctx, **extra):
    meta = {"q": ctx.q, "p": ctx.field.p, "n": ctx.field.n, "ell": ctx.ell,
            "k": ctx.k, "qprime": ctx.qprime,
            "generator": ctx.field.generator_index, "version": __version__}
    meta.update(extra)
    return meta


def _cmd_compute(args, out):
    ctx = _make_ctx(args)
    dm = build_matrices(ctx)
    names = [s.strip().lower() for s in args.emit.split(",") if s.strip()]
    available = {"a": dm.A, "m": dm.M, "b": dm.B, "s": dm.S}
    unknown = [n for n in names if n not in available]
    if unknown or not names:
        raise _UsageError("--emit accepts a subset of a,m,b,s")
    if args.format == "json":
        payload = {"meta": _meta(ctx),
                   "matrices": {n: matrix_to_obj(available[n]) for n in names}}
        out.write(dumps(payload) + "\n")
    elif args.format == "csv":
        if len(names) != 1:
            raise _UsageError("csv format emits exactly one matrix")
        out.write(matrix_to_csv(available[names[0]]))
    else:
        blocks = [matrix_pretty(available[n], label=n.upper()) for n in names]
        out.write("\n".join(blocks))
    return EXIT_OK


def _run_suite(ctx, suite, seed):
    if suite == "all":
        return run_identity_suite(ctx, seed=seed)
    res = verify_elementary_laws(ctx)
    if suite == "schur":
        res.merge(verify_structure_constants(ctx))
        res.merge(verify_regular_representation(ctx))
        return res
    res.merge(verify_matrix_product_law(ctx))
    res.merge(verify_transposed_product_law(ctx))
    res.merge(verify_commutator(ctx))
    res.merge(verify_traces(ctx))
    res.merge(verify_sum_of_squares(ctx))
    res.merge(verify_inner_product_identity(ctx, seed=seed))
    res.merge(verify_column_products(ctx))
    return res


def _cmd_verify(args, out):
    ctx = _make_ctx(args)
    res = _run_suite(ctx, args.suite, args.seed)
    payload = {"meta": _meta(ctx, suite=args.suite, seed=args.seed),
               "checks": res.to_obj()}
    out.write(dumps(payload) + "\n")
    return EXIT_OK if res.passed else EXIT_VERIFICATION


def _cmd_diffset(args, out):
    ctx = _make_ctx(args)
    if args.modified:
        report = modified_diffset(ctx)
        out.write(dumps(report.to_obj()) + "\n")
        return EXIT_OK if report.certificates.passed else EXIT_VERIFICATION
    report = build_report(ctx)
    out.write(dumps(report.to_obj()) + "\n")
    return EXIT_OK if report.certificates_pass else EXIT_VERIFICATION


def _cmd_search(args, out):
    hits = search(args.ell, args.max_q, min_q=args.min_q,
                  prime_only=args.prime_only, jobs=args.jobs)
    code = EXIT_OK
    for report in hits:
        out.write(dumps(report.to_obj(), compact=True) + "\n")
        if not report.certificates_pass:
            code = EXIT_VERIFICATION
    return code


def _cmd_survey(args, out):
    if (args.p is None) == (args.max_q is None):
        raise _UsageError("survey needs exactly one of --p or --max-q")
    if args.p is not None:
        field = build_field(args.p, n=args.n,
                            modulus=_parse_modulus(args.modulus),
                            generator=args.generator)
        ctx = CycloCtx(field, args.ell)
        entries = column_permutation_survey(ctx)
        out.write(dumps({"meta": _meta(ctx), "entries": entries}) + "\n")
        return EXIT_OK
    for q in range(3, args.max_q + 1):
        if q % args.ell != 1:
            continue
        pn = as_odd_prime_power(q)
        if pn is None:
            continue
        ctx = CycloCtx(build_field(pn[0], n=pn[1]), args.ell)
        if ctx.k % 2 == 0:
            continue
        try:
            entries = column_permutation_survey(ctx)
        except KEven:  # pragma: no cover - filtered above
            continue
        out.write(dumps({"meta": _meta(ctx), "entries": entries},
                        compact=True) + "\n")
    return EXIT_OK


_HANDLERS = {
    "compute": _cmd_compute,
    "verify": _cmd_verify,
    "diffset": _cmd_diffset,
    "search": _cmd_search,
    "survey": _cmd_survey,
}


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        err.write("cyclo: error: %s\n" % exc)
        return EXIT_USAGE
    try:
        return _HANDLERS[args.command](args, out)
    except _UsageError as exc:
        err.write("cyclo: error: %s\n" % exc)
        return EXIT_USAGE
    except CyclomatError as exc:
        err.write("cyclo: error: %s: %s\n" % (type(exc).__name__, exc))
        return EXIT_USAGE
    except OSError as exc:
        err.write("cyclo: error: IoFailure: %s\n" % exc)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
