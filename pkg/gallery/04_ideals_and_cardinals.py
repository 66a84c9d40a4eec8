"""Ideals of (Z/3)^2 and the uncountable picture.

In field mode the ring is a product of fields, and the hull/kernel machinery
can be checked by brute force.  The last cell switches to symbolic cardinals
to show why the isomorphism question changes once X has size c.
"""

# %%
from zdgraphs import ALEPH0, CONTINUUM, ModelConfig, verdict
from zdgraphs.ideals import check_hull_kernel_identities, field_model

cfg = ModelConfig.parse("X=2,a=3,mode=field")
R = field_model(cfg)
print("ideals:", [len(I) for I in R.ideals])
print("minimal primes:", [f"M{P.point} ({len(P.elements)} elements)" for P in R.minimal_primes])

# %%
report = check_hull_kernel_identities(cfg)
for c in report.checks:
    print(f"{'ok' if c.passed else 'FAILED':>6}  {c.name}  ({c.cases} cases)")

# %% Cardinal counting, assuming CH.
for x in (ALEPH0, CONTINUUM):
    v = verdict(x)
    print(f"|X| = {x}: {'isomorphic' if v.isomorphic else 'not isomorphic'}; {v.note}")
