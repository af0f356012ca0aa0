"""Potts partition functions from the bracket, checked against brute-force colorings."""

from fractions import Fraction

from jonesrep.potts import oracle_parameters, planar_graph, potts_partition

graphs = {
    "edge": (2, [(0, 1)]),
    "triangle": (3, [(0, 1), (1, 2), (0, 2)]),
    "K4": (4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
}
for spec in oracle_parameters():
    print(spec.describe())
    for name, (v, edges) in graphs.items():
        g = planar_graph(v, edges, [Fraction(k + 2, 3) for k in range(len(edges))])
        res = potts_partition(g, spec)
        print(f"  {name:8} n = {res.n}: Z = {res.z_skein}  coloring sum agrees: {res.agree}")
