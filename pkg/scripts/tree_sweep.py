#!/usr/bin/env python3
"""Sweep labeled trees (Pruefer sequences) and compare the tree criterion with
barbell search and forcing closure."""

import argparse
import itertools
import time

import networkx as nx

from sspgraph.classify import classify_tree
from sspgraph.forcing import close
from sspgraph.graph import Graph
from sspgraph.refute import barbell_search


def trees(n: int):
    if n <= 2:
        yield Graph(n, [(0, 1)] if n == 2 else [])
        return
    for seq in itertools.product(range(n), repeat=n - 2):
        yield Graph(n, nx.from_prufer_sequence(list(seq)).edges())


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=7)
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        start = time.perf_counter()
        n_in = n_out = bad = 0
        for t in trees(n):
            v = classify_tree(t)
            if v.is_out:
                n_out += 1
                bad += barbell_search(t) is None
            else:
                n_in += 1
                bad += not close(t).complete
        print(f"n={n}  in={n_in:<7} out={n_out:<7} disagreements={bad}  {time.perf_counter() - start:.1f}s")


if __name__ == "__main__":
    main()
