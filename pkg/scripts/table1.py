"""Print the equal-dims single-edge degree grid with dimensions and timing."""
import argparse
import time

from hyperquiver.families import single_edge_degree


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--dmax", type=int, default=6)
    ap.add_argument("--nmax", type=int, default=6)
    args = ap.parse_args()

    t0 = time.perf_counter()
    width = 24
    print("d\\n " + "".join(f"{n:>{width}}" for n in range(2, args.nmax + 1)))
    for d in range(1, args.dmax + 1):
        row = [single_edge_degree((d,) * n) for n in range(2, args.nmax + 1)]
        print(f"{d:<4}" + "".join(f"{x:>{width}}" for x in row))
    print(f"# dimension of each entry is (d-1)(n-1); {time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    main()
