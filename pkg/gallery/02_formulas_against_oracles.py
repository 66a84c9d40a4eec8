"""Reading graph distances off zero sets.

Every distance and shortest-cycle length in these graphs is predicted from
the zero sets of the two endpoints.  Here the predictions are compared with
breadth-first search and with the exact cycle search.
"""

# %%
import itertools
from collections import Counter

from zdgraphs import GraphKind, ModelConfig, build_graph, distance_matrix, smallest_cycle_through_pair
from zdgraphs import formulas as F

cfg = ModelConfig.parse("X=4,a=3")
g = build_graph(cfg, GraphKind.ZERO_DIVISOR)
dm = distance_matrix(g)

# %% Distances: which clause fired, and did it agree with BFS?
tally = Counter()
for u, v in itertools.combinations(range(g.vertex_count), 2):
    p = F.predict_distance_zd(g.label(u), g.label(v))
    tally[p.rule_fired, p.value == dm[u, v]] += 1
for (rule, agreed), k in sorted(tally.items()):
    print(f"{rule:<34} agreed={agreed} pairs={k}")

# %% Cycles through a pair.  With a binary alphabet some cycles disappear.
for a in (3, 2):
    m = ModelConfig.of(3, a)
    h = build_graph(m, GraphKind.ZERO_DIVISOR)
    f, q = m.element((0, 0, 1)), m.element((0, 1, 1))
    got = smallest_cycle_through_pair(h, h.vertex_of(f), h.vertex_of(q))
    print(f"a={a}: predicted {F.predict_cycle_zd(f, q).value}, exact search {got}")
