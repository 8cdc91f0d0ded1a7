"""Tally square classes over the connected census.

For each order, count the graphs whose every edge is a square (trees and
odd unicyclic graphs) and those where only pairs of edges are supports of
squares (even cycles and doubly-odd paddles).  Also count incidence
circuits by shape.

    python3 demos/census_sweep.py --max-order 7
"""

import argparse
from collections import Counter

from nga.graphs import census, is_tree
from nga.structure import (
    classify_minimal_coherent,
    is_edge_square,
    is_even_cycle,
    is_pair_square,
    minimal_coherent_subgraphs,
    paddle_count,
)

ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
ap.add_argument("--max-order", type=int, default=7, help="largest order (at most 8)")
args = ap.parse_args()
if not 1 <= args.max_order <= 8:
    ap.error("--max-order must lie in 1..8")

print(f"{'p':>2} {'graphs':>7} {'trees':>6} {'odd-uni':>7} {'even-cyc':>8} {'paddles':>7} {'(formula)':>9}  circuit shapes")
for p in range(1, args.max_order + 1):
    graphs = census(p, connected=True, ordered=False)
    row = Counter()
    shapes = Counter()
    for G in graphs:
        if is_edge_square(G):
            row["tree" if is_tree(G) else "odd"] += 1
        elif is_pair_square(G):
            row["even" if is_even_cycle(G) else "paddle"] += 1
        if p <= 7:
            for c in minimal_coherent_subgraphs(G):
                k = classify_minimal_coherent(G, c)
                shapes[type(k).__name__] += 1
    shape_text = ", ".join(f"{n} {k}" for k, n in sorted(shapes.items())) or "-"
    print(f"{p:>2} {len(graphs):>7} {row['tree']:>6} {row['odd']:>7} {row['even']:>8} {row['paddle']:>7} "
          f"{paddle_count(p):>9}  {shape_text}")
