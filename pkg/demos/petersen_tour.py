"""A walk through the algebra of the Petersen graph.

Vertices are the pairs ij from {1..5}; an edge joins disjoint pairs.  No
edge, and no pair of edges, is the support of a square.  Fifteen spans
square to weight 3: the ten vertices and five extra elements u_i, which
we name i6.  Those fifteen labels are the pairs from {1..6}.  The
families of mutually annihilating spans, together with the automorphism
t, then show Sym(6) acting through its outer automorphism.

    python3 demos/petersen_tour.py
"""

from nga.petersen import (
    action_on_families,
    build_petersen,
    build_t,
    duad_syntheme,
    families_F,
    h_sets,
    low_weight_absence,
    named_action,
    perm_cycles,
    span_label,
    sym6_actions,
    weight3_spans,
)

M = build_petersen()
print("vertices:", " ".join(M.vertex_labels))
print("edges (six-index symbols):", " ".join(M.enhanced_edge_labels))

print("\nno squares of weight 1 or 2:", low_weight_absence(M))
spans = weight3_spans(M)
print("weight-3 spans:", " ".join(sorted(span_label(M, s) for s in spans)))
for i in range(1, 6):
    print(f"  2u_{i} =", " ".join(f"{int(2 * x):+d}" for x in M.u_vector(i)))

fams = families_F(M, spans).families
print("\nfamilies with all products zero:")
for i, f in sorted(fams.items()):
    print(f"  F{i}:", " ".join(sorted(f)))

t = build_t(M)
print("\nt swaps families as", perm_cycles(action_on_families(M, t, fams)))

hs = h_sets(M)
print("\nH-sets (eleventh edges of size-11 circuits through pentagon pairs):")
for i, h in sorted(hs.items()):
    print(f"  H{i}:", " ".join(sorted(M.enhanced_edge_labels[k] for k in h)))

corr = sym6_actions(M, fams, hs)
print(f"\ngroup on families: order {corr.order_F}; on H-sets: order {corr.order_H}")
for cycles in ([(1, 2)], [(1, 2, 3)], [(1, 2, 3, 4, 5)]):
    f, h = named_action(M, cycles, fams, hs)
    print(f"  {f} on families acts as {h} on H-sets")

ds = duad_syntheme(M, hs)
print("\neach edge lies in two H rows, one duad per edge:")
for k, rows in sorted(ds.items(), key=lambda kv: sorted(kv[1])):
    print(f"  {''.join(map(str, sorted(rows)))} <-> {M.enhanced_edge_labels[k]}")
