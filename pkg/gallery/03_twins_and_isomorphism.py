"""Are the two graphs isomorphic?

Vertices with identical neighbourhoods are twins.  Gluing twins gives
quotients that are always isomorphic via the support-complement map; the
parent graphs are isomorphic exactly when class sizes line up.
"""

# %%
from zdgraphs import GraphKind, ModelConfig, build_graph, build_quotient, canonical_phi, lift_isomorphism
from zdgraphs.quotient import class_size
from zdgraphs.ring import cozero_set

for spec in ("X=3,a=2", "X=3,a=3"):
    cfg = ModelConfig.parse(spec)
    g1, g2 = build_graph(cfg, GraphKind.ZERO_DIVISOR), build_graph(cfg, GraphKind.COMAXIMAL)
    q1, q2 = build_quotient(g1), build_quotient(g2)
    phi = canonical_phi(cfg, q1, q2)
    print(f"\n{spec}: {len(q1)} twin classes on each side")
    for i, j in phi.items():
        s1, s2 = sorted(cozero_set(q1.graph.label(i))), sorted(cozero_set(q2.graph.label(j)))
        print(f"  supp {s1} x{class_size(q1, i)}  ->  supp {s2} x{class_size(q2, j)}")
    res = lift_isomorphism(g1, g2, phi, q1, q2)
    print("  lift:", "verified isomorphism" if res.ok else f"{len(res.mismatches)} classes change size")
