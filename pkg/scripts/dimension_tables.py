#!/usr/bin/env python3
"""Side-by-side dimension tables of harmonic spaces across q values.

Prints, for each n, the per-degree dimensions of the harmonic space at
several specializations next to the classical (q = 0) column and marks the
degrees where a rational q grows past the generic dimension.
"""

import argparse

from qsteenrod import QParam, classical_harm_hilbert, harm_component


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-vars", type=int, default=3)
    parser.add_argument("--cap", type=int, default=6)
    parser.add_argument(
        "--q",
        action="append",
        default=None,
        help="extra rational q columns, e.g. --q -1/2 (repeatable)",
    )
    args = parser.parse_args()
    extra = [QParam.parse(text) for text in (args.q or ["-1/2", "-2/3", "1"])]
    columns = [QParam.formal(), QParam.rational(0)] + extra

    for n in range(1, args.max_vars + 1):
        print(f"\nn = {n}   (classical Hilbert: "
              f"{classical_harm_hilbert(n).coefficients})")
        header = ["d"] + [str(q) for q in columns]
        print("  ".join(h.rjust(8) for h in header))
        for d in range(args.cap + 1):
            dims = [harm_component(n, d, q).dim for q in columns]
            generic = dims[0]
            cells = [str(d).rjust(8)]
            for q, dim in zip(columns, dims):
                mark = "*" if (not q.is_formal and dim > generic) else ""
                cells.append((str(dim) + mark).rjust(8))
            print("  ".join(cells))
    print("\n(* = dimension exceeds the generic one: a bad specialization)")


if __name__ == "__main__":
    main()
