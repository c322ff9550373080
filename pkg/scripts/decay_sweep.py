"""Product term vs. closed-form bounds for several angles, as one CSV.

    python scripts/decay_sweep.py --n-max 20 --bits 128 > decay.csv
"""

import argparse
import csv
import sys
from fractions import Fraction

from halfangle.cli import DECAY_HEADER, decay_cells
from halfangle.identities import decay_table


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--thetas", default="1/4,1/2,1,3/2")
    parser.add_argument("--n-max", type=int, default=20)
    parser.add_argument("--bits", type=int, default=128)
    parser.add_argument("--digits", type=int, default=20)
    args = parser.parse_args()

    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["theta"] + DECAY_HEADER)
    failures = 0
    for text in args.thetas.split(","):
        theta = Fraction(text)
        for row in decay_table(theta, args.n_max, args.bits):
            failures += not row.chain_holds
            writer.writerow([text] + decay_cells(row, args.digits))
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
