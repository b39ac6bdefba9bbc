"""Compare every closed-form count with the degree engine over a parameter grid."""
import argparse
import itertools

from hyperquiver.degree import analyze
from hyperquiver.families import (
    FamilySpec,
    build,
    eigen_count,
    homology_count,
    kronecker_count,
    periodic_count,
    single_edge_degree,
)


def engine(kind, params):
    inst = build(FamilySpec(kind, params))
    r = analyze(inst.hyperquiver, inst.dims)
    return 0 if r.empty else r.degree


def rows(size):
    for m, d in itertools.product(range(2, size + 2), range(1, size + 2)):
        yield "eigen", (m, d), eigen_count(m, d), engine("jordan", (m, d))
    for m, d in itertools.product(range(2, size + 1), range(1, size + 1)):
        yield "kronecker", (m, d), kronecker_count(m, d), engine("kronecker", (m, d, d))
    for n, m, d in itertools.product(range(1, size), range(3, size + 1), range(1, size)):
        yield "periodic", (n, m, d), periodic_count(n, m, d), engine("cycle", (n, m, d))
    for k, d in itertools.product(range(1, size + 1), repeat=2):
        yield "homology", (k, d), homology_count(k, d), engine("homology", (k, d))
    for n in range(2, size + 1):
        for dims in itertools.product(range(1, size), repeat=n):
            yield "star", dims, single_edge_degree(dims), engine("star", dims)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--size", type=int, default=4, help="grid extent per parameter")
    ap.add_argument("--verbose", action="store_true")
    args = ap.parse_args()

    total = bad = 0
    for name, params, closed, eng in rows(args.size):
        total += 1
        ok = closed == eng
        bad += not ok
        if args.verbose or not ok:
            print(f"{name}{params}: closed={closed} engine={eng} {'ok' if ok else 'MISMATCH'}")
    print(f"{total - bad}/{total} agree")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
