#!/usr/bin/env python3
"""Classify every graph on at most N vertices and tabulate verdicts by order.

Needs networkx for the graph atlas (n <= 7).
"""

import argparse
import collections

import networkx as nx

from sspgraph.classify import Settings, classify
from sspgraph.graph import parse_graph6


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=6, choices=range(1, 8))
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--show-unknown", action="store_true", help="list graph6 of undecided graphs")
    args = ap.parse_args()

    settings = Settings(seed=args.seed, trials=args.trials)
    table = collections.defaultdict(collections.Counter)
    unknown = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > args.max_n:
            break
        line = nx.to_graph6_bytes(h, header=False).decode().strip()
        g = parse_graph6(line)
        v = classify(g, settings)
        table[g.n][v.status] += 1
        table[g.n][v.stage] += 1
        if v.status == "unknown":
            unknown.append(line)

    print(f"{'n':>2} {'in':>5} {'out':>5} {'unknown':>8}")
    for n in sorted(table):
        c = table[n]
        print(f"{n:>2} {c['in']:>5} {c['out']:>5} {c['unknown']:>8}")
    if args.show_unknown:
        print("\n".join(unknown))


if __name__ == "__main__":
    main()
