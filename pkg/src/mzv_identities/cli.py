"""Command-line interface.

Exit codes: 0 pass, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from . import identities as ids
from . import index as ix
from .combo import FINITE, REAL
from .errors import MZVError
from .finite import DEFAULT_PRIMES, PrimeSet, eval_fmzv, verify_finite
from .real import DEFAULT_TRUNC, eval_mzv, verify_real

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {n}")
    return n


def _nonnegative(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {n}")
    return n


def _add_instance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--theorem", required=True, choices=ids.THEOREMS)
    p.add_argument("--k", help="index text, e.g. 3,2 or (3,2)")
    p.add_argument("--r", type=_positive)
    p.add_argument("--m", type=_nonnegative)
    p.add_argument("--l", type=_positive, help="derivation level")
    p.add_argument("--word", help="word over x, y, e.g. xxy")


def _add_backend_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--backend", choices=(REAL, FINITE), help="defaults to the theorem's symbol kind")
    p.add_argument("--trunc", type=_positive, default=DEFAULT_TRUNC, help="real-sum cutoff N")
    p.add_argument("--primes", default="{}..{}".format(*DEFAULT_PRIMES), help="inclusive range a..b")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mzv-identities", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    gen = sub.add_parser("gen", help="print both sides of an identity")
    _add_instance_flags(gen)
    gen.add_argument("--format", choices=("latex", "json", "text"), default="latex")

    verify = sub.add_parser("verify", help="verify an identity numerically")
    _add_instance_flags(verify)
    _add_backend_flags(verify)
    verify.add_argument("--format", choices=("text", "json"), default="text")

    ev = sub.add_parser("eval", help="truncated real value of one MZV")
    ev.add_argument("--k", required=True)
    ev.add_argument("--trunc", type=_positive, default=DEFAULT_TRUNC)
    ev.add_argument("--format", choices=("text", "json"), default="text")

    evf = sub.add_parser("eval-finite", help="residues of one truncated sum mod primes")
    evf.add_argument("--k", required=True)
    evf.add_argument("--primes", default="{}..{}".format(*DEFAULT_PRIMES))
    evf.add_argument("--format", choices=("text", "json"), default="text")

    index = sub.add_parser("index", help="index combinatorics")
    index.add_argument("op", choices=("dual", "hdual", "refine", "stats"))
    index.add_argument("k")

    sweep = sub.add_parser("sweep", help="verify every instance up to a total weight")
    sweep.add_argument("--theorem", required=True, choices=ids.THEOREMS)
    sweep.add_argument("--max-weight", type=_positive, required=True)
    _add_backend_flags(sweep)
    return parser


def _backend_for(theorem: str, requested: str | None) -> str:
    kind = ids.THEOREM_KINDS[theorem]
    if requested is not None and requested != kind:
        raise UsageError(f"theorem {theorem!r} has {kind} symbols and cannot use the {requested} backend")
    return kind


def _instance_from_args(args: argparse.Namespace) -> ids.IdentityInstance:
    k = None
    if args.k is not None:
        k = ix.parse_index(args.k)
    return ids.make_instance(args.theorem, k=k, r=args.r, m=args.m, l=args.l, word=args.word)


def _verify(inst: ids.IdentityInstance, backend: str, trunc: int, primes: PrimeSet | None):
    if backend == REAL:
        return verify_real(inst, trunc)
    return verify_finite(inst, primes)


def _sweep_params(theorem: str, max_weight: int) -> Iterator[dict]:
    """Parameter sets in deterministic order: by total weight, then by the generator's own order."""
    needed = ids.theorem_params(theorem)
    for total in range(1, max_weight + 1):
        if needed == ("l", "word"):
            for deg in range(1, total):
                l = total - deg
                for k in ix.all_compositions(deg):
                    w = "".join("x" * (p - 1) + "y" for p in k)
                    if theorem == ids.DERIVATION and not w.startswith("x"):
                        continue
                    yield {"l": l, "word": w}
        elif needed == ("k", "m"):
            for wt in range(1, total + 1):
                for k in ix.all_compositions(wt):
                    if theorem == ids.OHNO and not ix.is_admissible(k):
                        continue
                    yield {"k": k, "m": total - wt}
        elif theorem == ids.HEIGHT_ONE:
            for k in range(1, total):
                yield {"k": k, "r": total - k}
        else:
            for wt in range(1, total):
                r = total - wt
                for k in ix.all_compositions(wt):
                    if r >= len(k):
                        yield {"k": k, "r": r}


def _format_params(params: dict) -> str:
    out = []
    for name, value in params.items():
        if isinstance(value, (tuple, list)):
            value = ix.format_index(value)
        out.append(f"{name}={value}")
    return ";".join(out)


def _run(args: argparse.Namespace, out) -> int:
    verb = args.verb
    if verb == "gen":
        inst = _instance_from_args(args)
        if args.format == "json":
            print(inst.to_json(), file=out)
        elif args.format == "latex":
            print(inst.latex(), file=out)
        else:
            print(inst, file=out)
        return EXIT_OK

    if verb == "verify":
        backend = _backend_for(args.theorem, args.backend)
        primes = PrimeSet.parse(args.primes) if backend == FINITE else None
        inst = _instance_from_args(args)
        report = _verify(inst, backend, args.trunc, primes)
        print(report.to_json() if args.format == "json" else report.summary(), file=out)
        return EXIT_OK if report.passed else EXIT_FAIL

    if verb == "eval":
        k = ix.parse_index(args.k)
        ev = eval_mzv(k, args.trunc)
        if args.format == "json":
            print(json.dumps({"index": list(k), "value": ev.value, "tail_bound": ev.tail_bound,
                              "trunc": ev.trunc_n}), file=out)
        else:
            print(f"{ev.value!r}\t{ev.tail_bound:.3e}\t{ev.trunc_n}", file=out)
        return EXIT_OK

    if verb == "eval-finite":
        k = ix.parse_index(args.k)
        ev = eval_fmzv(k, PrimeSet.parse(args.primes))
        if args.format == "json":
            print(json.dumps({"index": list(k), "residues": {str(p): r for p, r in ev.residues.items()}}), file=out)
        else:
            for p, r in ev.residues.items():
                print(f"{p}\t{r}", file=out)
        return EXIT_OK

    if verb == "index":
        k = ix.parse_index(args.k)
        if args.op == "dual":
            print(ix.format_index(ix.dual(k)), file=out)
        elif args.op == "hdual":
            print(ix.format_index(ix.hoffman_dual(k)), file=out)
        elif args.op == "refine":
            for kp in ix.refinements(k):
                print(ix.format_index(kp), file=out)
        else:
            s = ix.stats(k)
            print(f"weight={s.weight}\tdepth={s.depth}\theight={s.height}\tadmissible={str(s.admissible).lower()}",
                  file=out)
        return EXIT_OK

    if verb == "sweep":
        backend = _backend_for(args.theorem, args.backend)
        primes = PrimeSet.parse(args.primes) if backend == FINITE else None
        lines, failed, count = [], 0, 0
        for params in _sweep_params(args.theorem, args.max_weight):
            inst = ids.make_instance(args.theorem, **params)
            report = _verify(inst, backend, args.trunc, primes)
            count += 1
            failed += not report.passed
            lines.append(f"{args.theorem}\t{_format_params(params)}\t{report.summary()}")
        print("\n".join(lines), file=out)
        print(f"# {count} instances, {failed} failed", file=out)
        return EXIT_OK if failed == 0 else EXIT_FAIL

    raise UsageError(f"unknown verb {verb!r}")


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _run(args, out)
    except (UsageError, MZVError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
