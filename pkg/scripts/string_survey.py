#!/usr/bin/env python3
"""Survey harmonic strings seeded from harmonic bases.

Strings of length above n would contradict the short-string equivalence, so
the survey reports the maximal observed length per degree, at the generic q
and at the detected bad specializations.
"""

import argparse

from qsteenrod import QParam, bad_q_candidates
from qsteenrod.strings import string_length_survey


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vars", type=int, default=2)
    parser.add_argument("--cap", type=int, default=6)
    args = parser.parse_args()

    for n in range(1, args.max_vars + 1):
        q_values = [QParam.formal(), QParam.rational(0)]
        roots = set()
        for d in range(1, args.cap + 1):
            roots.update(bad_q_candidates(n, d).rational_roots)
        q_values += [QParam(root) for root in sorted(roots)]
        for q in q_values:
            rows = string_length_survey(n, q, args.cap)
            summary = ", ".join(
                f"d={d}:{harm}/{seeds} max {length}"
                for d, seeds, harm, length in rows
                if seeds
            )
            print(f"n={n} q={q}: {summary or 'no seeds'}")
            for d, _, _, length in rows:
                if length > n:
                    print(f"  !! string of length {length} > n at degree {d}")


if __name__ == "__main__":
    main()
