"""Two non-isomorphic trees with isomorphic normal algebras.

The path a-b-c-d and the claw with center a have different shapes, yet
both algebras have a basis u0..u3 whose products are diag(0, e, f, g).
We check that table by hand, then let the classifier build the same
isomorphism to F0 + O3 from its own witnesses.

    python3 demos/tree_algebras.py
"""

from fractions import Fraction

from nga.algebra import GradedMap, graph_algebra, is_homomorphism, multiply
from nga.exactlin import RatMatrix, inverse
from nga.graphs import canonical_form, path_graph, star_graph
from nga.structure import classify_edge_square

half = Fraction(1, 2)
path, claw = path_graph(4), star_graph(3)
print("path and claw isomorphic as graphs?", canonical_form(path) == canonical_form(claw))

bases = {
    "path": (path, [(1, -1, 1, -1), (1, 0, 0, 0), (half, -half, -half, half), (0, 0, 0, 1)]),
    "claw": (claw, [(1, -1, -1, -1), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]),
}
for name, (G, basis) in bases.items():
    A = graph_algebra(G)
    us = [A.u(v) for v in basis]
    print(f"\nproduct table on {name}, rows u0..u3 (Z-coordinates over the edges {G.edges}):")
    for i, x in enumerate(us):
        row = [multiply(A, x, y).z_part for y in us]
        print(f"  u{i}:", "  ".join("(" + ",".join(str(c) for c in z) + ")" for z in row))

# the two tables agree, so matching bases gives an isomorphism
A, B = graph_algebra(path), graph_algebra(claw)
m = GradedMap(A, B, RatMatrix.from_columns(bases["claw"][1]) @ inverse(RatMatrix.from_columns(bases["path"][1])),
              RatMatrix.identity(3))
print("\nbasis-matching map is a homomorphism:", is_homomorphism(m), "| invertible:", m.is_invertible())

for name, G in (("path", path), ("claw", claw)):
    rep = classify_edge_square(G)
    print(f"classifier on the {name}: {rep.tag} {rep.params}; target {rep.iso.target.name}")
