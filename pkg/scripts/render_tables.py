#!/usr/bin/env python3
"""Render bidegree tables of minimal generators in high x-degree.

With no arguments this prints the three reference grids; pass explicit
--degrees/--sigma to render any other shape.
"""
import argparse

from rees.combinat import bidegree_table

REFERENCE = (
    ((3, 16), (3, 0)),
    ((5, 16), (3, 2)),
    ((4, 16), (2, 2)),
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degrees", type=str, default=None,
                    help="comma-separated column degrees, e.g. 4,16")
    ap.add_argument("--sigma", type=str, default=None,
                    help="comma-separated twists, e.g. 2,2")
    args = ap.parse_args()

    if (args.degrees is None) != (args.sigma is None):
        ap.error("--degrees and --sigma must be given together")

    if args.degrees is not None:
        shapes = [(tuple(int(v) for v in args.degrees.split(",")),
                   tuple(int(v) for v in args.sigma.split(",")))]
    else:
        shapes = REFERENCE

    for degrees, sigma in shapes:
        table = bidegree_table(degrees, sigma)
        print(f"column degrees {list(degrees)}, twists {list(sigma)}:")
        print(table.render())
        print()


if __name__ == "__main__":
    main()
