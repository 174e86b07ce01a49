#!/usr/bin/env python3
"""Classify every 3x3 minor-sum positivity system.

Enumerates the 49 systems (nonempty single-index sums; nonempty pair
sums; determinant always included), groups them under index relabeling
and prints one row per class: the verdict, the catalog criterion or the
rejecting witness, and all member systems.

Run:  python3 scripts/classify_systems.py [--samples N] [--bound B]
"""

import argparse

from minorsum.criteria3 import SearchBudget, classify_all


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--samples",
        type=int,
        default=10_000,
        help="random samples in the counterexample search fallback",
    )
    parser.add_argument(
        "--bound",
        type=int,
        default=4,
        help="diagonal grid bound in the counterexample search",
    )
    args = parser.parse_args()
    budget = SearchBudget(diagonal_bound=args.bound, random_samples=args.samples)

    reports = classify_all(budget)
    width = max(len(r.canonical.spec_text()) for r in reports)
    print(f"{len(reports)} classes over 49 systems\n")
    for report in reports:
        verdict = report.verdict
        if verdict.kind == "ensures_pd":
            outcome = f"ensures PD  [criterion {verdict.catalog_id}]"
        elif verdict.kind == "rejected":
            diag = " | ".join(
                " ".join(str(e) for e in row) for row in verdict.witness.rows
            )
            outcome = f"rejected    [witness {diag}]"
        else:
            outcome = f"undetermined ({verdict.note})"
        print(
            f"class {report.class_id:2d}  "
            f"{report.canonical.spec_text():<{width}}  {outcome}"
        )
        members = ", ".join(m.spec_text() for m in report.members)
        print(f"          members ({len(report.members)}): {members}")
        if verdict.kind == "ensures_pd" and verdict.catalog_id == "derived":
            print(f"          note: {verdict.note}")
        print()


if __name__ == "__main__":
    main()
