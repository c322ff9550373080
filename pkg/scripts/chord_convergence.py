"""How fast 2^n sin(theta/2^n) climbs to theta.

Prints, per level, the kernel enclosure of the deficit theta - 2^n sin(theta/2^n)
and the ratio of successive deficits (tends to 1/4).
"""

import argparse
from fractions import Fraction

from halfangle.arith import iv_scale2
from halfangle.kernel import sin_cos


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--theta", default="3/2")
    parser.add_argument("--levels", type=int, default=40)
    parser.add_argument("--bits", type=int, default=200)
    args = parser.parse_args()

    theta = Fraction(args.theta)
    prev = None
    print(f"{'n':>3}  {'deficit':>12}  {'ratio':>10}")
    for n in range(args.levels + 1):
        value = iv_scale2(sin_cos(theta / 2**n, args.bits).sin_enc, n)
        deficit = theta - value.midpoint
        ratio = "" if prev is None else f"{float(deficit / prev):.8f}"
        print(f"{n:>3}  {float(deficit):12.5e}  {ratio:>10}")
        prev = deficit


if __name__ == "__main__":
    main()
