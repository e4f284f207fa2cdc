"""Run every law suite over several seeds and print a summary table.

    python scripts/run_laws.py --seeds 0 1 2 --depth 5 --cases 300
"""
import argparse
import json

from scoped_effects.generators import GenConfig
from scoped_effects.laws import SUITES, run_law_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, nargs="+", default=[0, 1, 2])
    ap.add_argument("--depth", type=int, default=5)
    ap.add_argument("--cases", type=int, default=300)
    ap.add_argument("--out", help="write all reports as JSON")
    args = ap.parse_args()

    rows = []
    print(f"{'suite':<20} {'seed':>4} {'cases':>7} {'fail':>5} {'ms':>7}")
    for seed in args.seeds:
        cfg = GenConfig(seed=seed, max_depth=args.depth, corpus_size=args.cases)
        for name in SUITES:
            r = run_law_suite(name, cfg)
            rows.append({"seed": seed, **r.to_json()})
            print(f"{name:<20} {seed:>4} {r.cases:>7} {len(r.failures):>5} {r.millis:>7}")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(rows, fh, indent=2)
    failed = sum(len(r["failures"]) for r in rows)
    print(f"total failures: {failed}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
