#!/usr/bin/env python3
"""Verdicts for complements of paths; Out exactly when 3 divides n."""

import argparse
import time

from sspgraph.classify import classify
from sspgraph.graph import complement, path
from sspgraph.refute import verify_witness
from sspgraph.forcing import replay


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=15)
    args = ap.parse_args()

    for n in range(2, args.max_n + 1):
        start = time.perf_counter()
        v = classify(complement(path(n)))
        if v.is_out:
            checked = verify_witness(v.witness)
        elif v.certificate is not None:
            checked = replay(v.certificate)
        else:
            checked = None
        print(f"n={n:<3} {v.status:<8} {v.reason:<28} checked={checked}  {time.perf_counter() - start:.2f}s")


if __name__ == "__main__":
    main()
