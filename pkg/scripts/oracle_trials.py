"""Run the numeric oracle on many seeds and tabulate agreement with the engine."""
import argparse
from collections import Counter

from hyperquiver.cli import verify_rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    seen, failed = Counter(), Counter()
    for label, pred, got, ok in verify_rows(args.trials, args.seed):
        key = label.rsplit(" seed=", 1)[0]
        seen[key] += 1
        if not ok:
            failed[key] += 1
            print(f"FAIL {label}: predicted {pred}, observed {got}")
    for key in seen:
        print(f"{key:<32} {seen[key] - failed[key]:>5}/{seen[key]}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
