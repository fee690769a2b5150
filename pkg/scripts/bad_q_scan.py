#!/usr/bin/env python3
"""Scan a grid of (n, degree) cells for rational q with oversized harmonics.

For each cell the minor gcd of the down-operator constraints is computed,
its rational roots verified as genuine dimension jumps, and the accumulated
set of bad values is compared against the conjectured shape -a/b with
a in 1..n.
"""

import argparse
from fractions import Fraction

from qsteenrod import bad_q_candidates
from qsteenrod.specialize import conjectured_root_form


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vars", type=int, default=3)
    parser.add_argument("--cap", type=int, default=6)
    parser.add_argument(
        "--all-generators",
        action="store_true",
        help="stack every down operator, not just degrees 1 and 2",
    )
    args = parser.parse_args()

    seen: dict[Fraction, list[tuple[int, int]]] = {}
    for n in range(1, args.max_vars + 1):
        for d in range(1, args.cap + 1):
            report = bad_q_candidates(n, d, args.all_generators)
            roots = ", ".join(str(r) for r in report.rational_roots) or "-"
            nonrat = len(report.nonrational_factors)
            print(
                f"n={n} d={d}: rank {report.generic_rank}, "
                f"gcd {report.pretty_gcd()}, roots [{roots}]"
                + (f", {nonrat} irrational factor(s)" if nonrat else "")
            )
            for root, dim in report.jumps:
                seen.setdefault(root, []).append((n, d))

    print("\naccumulated bad-value superset:")
    for root in sorted(seen):
        cells = " ".join(f"({n},{d})" for n, d in seen[root])
        max_n = max(n for n, _ in seen[root])
        form = conjectured_root_form(root, max_n)
        tag = "" if form["a_in_1_to_n"] else "   <-- outside -a/b, a in 1..n"
        print(f"  q = {root}: {cells}{tag}")


if __name__ == "__main__":
    main()
