"""Command-line front end.

    hyperquiver analyze FILE
    hyperquiver chern FILE
    hyperquiver table1 [--dmax D] [--nmax N]
    hyperquiver family NAME PARAMS...
    hyperquiver emit FILE --seed S [--range R] [--patch] [-o OUT]
    hyperquiver verify [--trials T] [--seed S]

Exit status: 0 on success, 1 on computation/input errors or oracle
mismatches, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
import warnings
from typing import Callable, Iterable, Optional

from . import chow, families, oracle
from .degree import GUARANTEES, analyze, chern_top_class
from .equations import DEFAULT_RANGE, emit_system, random_assignment
from .fileformat import load
from .model import Hyperquiver, Hyperedge


def format_analysis(res, porcelain: bool = False) -> str:
    lines = [f"empty: {'true' if res.empty else 'false'}"]
    if res.empty:
        lines.append(f"reason: {res.reason.value}")
        summary = "no singular vector tuples"
    else:
        lines.append(f"dimension: {res.dimension}")
        lines.append(f"degree: {res.degree}")
        lines.append(f"finitely-many: {'true' if res.finitely_many else 'false'}")
        g = [x for x in GUARANTEES if x in res.guarantees]
        lines.append(f"guarantees: {','.join(g) if g else 'none'}")
        if res.finitely_many:
            summary = f"{res.degree} singular vector tuples, each of multiplicity one"
        else:
            summary = f"pure dimension {res.dimension}, Segre degree {res.degree}"
    if not porcelain:
        lines.append(f"# {summary}")
    return "\n".join(lines) + "\n"


def table1_rows(dmax: int, nmax: int) -> list[list[int]]:
    return [
        [families.single_edge_degree([d] * n) for n in range(2, nmax + 1)]
        for d in range(1, dmax + 1)
    ]


def _engine(kind: str, params) -> int:
    inst = families.build(families.FamilySpec(kind, params))
    res = analyze(inst.hyperquiver, inst.dims)
    return 0 if res.empty else res.degree


# name -> (arity or None for variadic, closed form, engine route)
FAMILIES: dict[str, tuple[Optional[int], Callable, Callable]] = {
    "eigen": (2, lambda p: families.eigen_count(*p), lambda p: _engine("jordan", p)),
    "kronecker": (
        2,
        lambda p: families.kronecker_count(*p),
        lambda p: _engine("kronecker", (p[0], p[1], p[1])),
    ),
    "periodic": (3, lambda p: families.periodic_count(*p), lambda p: _engine("cycle", p)),
    "star": (None, families.single_edge_degree, lambda p: _engine("star", p)),
    "homology": (2, lambda p: families.homology_count(*p), lambda p: _engine("homology", p)),
    "fo": (None, families.fo_count, lambda p: _engine("fo", p) if len(p) > 1 else 1),
}


def two_cycle(d1: int, d2: int) -> tuple[Hyperquiver, tuple[int, int]]:
    return Hyperquiver(2, (Hyperedge((1,), 2), Hyperedge((2,), 1))), (d1, d2)


def verify_rows(trials: int, seed: int) -> Iterable[tuple[str, int, int, bool]]:
    """Yield ``(label, predicted, observed, ok)`` for every oracle run."""
    seeds = range(seed, seed + trials)
    for d in range(2, 7):
        pred = _engine("jordan", (2, d))
        for s in seeds:
            rep = oracle.matrix_eigen_report(d, s)
            yield f"matrix_eigen d={d} seed={s}", pred, rep.count, rep.count == pred
            yield f"non_isotropic d={d} seed={s}", 1, int(rep.non_isotropic), rep.non_isotropic
    for m in range(3, 7):
        pred = _engine("jordan", (m, 2))
        for s in seeds:
            got = oracle.binary_tensor_eigen_count(m, s)
            yield f"binary_tensor_eigen m={m} seed={s}", pred, got, got == pred
    for d in range(2, 6):
        pred = families.kronecker_count(2, d)
        for s in seeds:
            got = oracle.generalized_eigen_count(d, s)
            yield f"generalized_eigen d={d} seed={s}", pred, got, got == pred
    for d in range(2, 6):
        res = analyze(*two_cycle(d, d))
        pred = res.degree
        for s in seeds:
            got = oracle.matrix_singular_pair_count(d, s)
            yield f"matrix_singular_pairs d={d} seed={s}", pred, got, got == pred


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="hyperquiver",
        description="Dimension and degree of singular vector varieties of hyperquiver representations.",
    )
    ap.add_argument(
        "--porcelain",
        action="store_true",
        help="stable key:value output only (drop trailing '#' summary lines)",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="dimension and degree of a generic representation")
    p.add_argument("file")

    p = sub.add_parser("chern", help="top Chern class of the singular vector bundle")
    p.add_argument("file")

    p = sub.add_parser("table1", help="degrees for one hyperedge with all dims equal")
    p.add_argument("--dmax", type=int, default=6)
    p.add_argument("--nmax", type=int, default=6)

    p = sub.add_parser("family", help="closed form vs engine for a named family")
    p.add_argument("name", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="+", type=int)

    p = sub.add_parser("emit", help="write the defining polynomial system")
    p.add_argument("file")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--range", type=int, default=DEFAULT_RANGE, dest="range_")
    p.add_argument("--patch", action="store_true", help="append one random affine chart per vertex")
    p.add_argument("-o", "--output")

    p = sub.add_parser("verify", help="numeric oracle checks of predicted counts")
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--seed", type=int, default=1)
    return ap


def _run(args, out) -> int:
    if args.command == "analyze":
        f = load(args.file)
        out.write(format_analysis(analyze(f.hyperquiver, f.dims), args.porcelain))
        return 0

    if args.command == "chern":
        f = load(args.file)
        out.write(chow.render(chern_top_class(f.hyperquiver, f.dims)) + "\n")
        return 0

    if args.command == "table1":
        if args.dmax < 1 or args.nmax < 2:
            raise ValueError("need --dmax >= 1 and --nmax >= 2")
        for row in table1_rows(args.dmax, args.nmax):
            out.write(",".join(map(str, row)) + "\n")
        return 0

    if args.command == "family":
        arity, closed, engine = FAMILIES[args.name]
        p = tuple(args.params)
        if arity is not None and len(p) != arity:
            raise ValueError(f"family {args.name} takes {arity} parameters, got {len(p)}")
        a, b = closed(p), engine(p)
        out.write(f"{a} = {b} ok\n" if a == b else f"{a} != {b} MISMATCH\n")
        return 0 if a == b else 1

    if args.command == "emit":
        f = load(args.file)
        A = random_assignment(f.hyperquiver, f.partition, f.dims, args.seed, args.range_)
        text = emit_system(f.hyperquiver, f.partition, f.dims, A, patch=args.patch).to_text()
        if args.output:
            with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0

    if args.command == "verify":
        if args.trials < 1:
            raise ValueError("--trials must be >= 1")
        failures = total = 0
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", oracle.GenericityWarning)
            for label, pred, got, ok in verify_rows(args.trials, args.seed):
                total += 1
                failures += not ok
                out.write(f"{label} predicted={pred} observed={got} {'ok' if ok else 'FAIL'}\n")
        for w in caught:
            out.write(f"# genericity warning: {w.message}\n")
        out.write(f"summary: {total - failures}/{total} ok\n")
        return 0 if failures == 0 else 1

    raise AssertionError(args.command)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _run(args, out)
    except (ValueError, OSError, oracle.RootFindingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
