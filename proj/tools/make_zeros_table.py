#!/usr/bin/env python3
"""Regenerate data/riemann_zeros_100.txt.

Writes the imaginary parts of the first COUNT nontrivial zeta zeros, one
per line, 15 significant digits, in the '#'-comment format parse_zeros
expects. Requires mpmath.
"""

import argparse
import pathlib

import mpmath


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument(
        "--out",
        type=pathlib.Path,
        default=pathlib.Path(__file__).resolve().parent.parent
        / "data"
        / "riemann_zeros_100.txt",
    )
    args = ap.parse_args()

    mpmath.mp.dps = 25
    lines = [
        "# Imaginary parts of the first %d nontrivial zeros of zeta," % args.count,
        "# ascending, 15 significant digits. Regenerate with",
        "# tools/make_zeros_table.py.",
    ]
    for k in range(1, args.count + 1):
        lines.append(mpmath.nstr(mpmath.zetazero(k).imag, 15))
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text("\n".join(lines) + "\n")
    print("wrote %s (%d zeros)" % (args.out, args.count))


if __name__ == "__main__":
    main()
