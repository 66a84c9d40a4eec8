"""Two graphs on one ring.

Build the zero-divisor and comaximal graphs of the functions on a
three-point space with values in {0, 1, 2}, and look at their basic shape.
"""

# %%
import numpy as np

from zdgraphs import GraphKind, ModelConfig, build_graph, degree_multiset, metrics_report

cfg = ModelConfig.parse("X=3,a=3")
zd = build_graph(cfg, GraphKind.ZERO_DIVISOR)
cm = build_graph(cfg, GraphKind.COMAXIMAL)
print(cfg, "has", zd.vertex_count, "vertices (nonzero non-units)")

# %% The vertex set is shared; only the adjacency differs.
for kind, g in (("zero-divisor", zd), ("comaximal", cm)):
    rep = metrics_report(g)
    print(f"{kind:>12}: {g.edge_count} edges, diameter {rep.diameter}, radius {rep.radius}, girth {rep.girth}")
    print(" " * 14 + f"degrees {degree_multiset(g)}")

# %% Adjacency matrices are plain numpy arrays.
A, B = zd.adjacency_matrix, cm.adjacency_matrix
print("edges in both graphs:", int(np.triu(A & B).sum()))
print("first row of the zero-divisor matrix:", A[0].astype(int))
