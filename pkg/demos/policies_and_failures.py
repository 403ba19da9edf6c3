"""
Tie-breaking policies and failure witnesses
===========================================

Local utilities are not unique: where only bounds are known, SUFF picks
the lower or the upper one. Tables that cannot be factored are rejected
with a reason that points at the offending cells.
"""

import numpy as np

from sugeno_factor import Chain, NotSugenoUtility, ProductDomain, UtilityTable, classify, factorize, hotel_table

f = hotel_table()
service = f.domain.chains[0]

# for service level ** only bounds are known
r = classify(f, 0, service.index("**"))
print("l =", f.codomain.labels[r.l], "u =", f.codomain.labels[r.u], "w =", r.w)

for policy in ("lower", "upper"):
    fact = factorize(f, policy)
    x = f.domain.parse_point(["**", "0", "y"])
    print(policy, [b for _a, b in fact.phis[0].labels()], "f(**,0,y) =", f.codomain.labels[fact(x)])

# two windows exposing different values for x1 = 1
D = ProductDomain((Chain.numeric(3), Chain.numeric(2)))
g = UtilityTable(D, Chain.numeric(4), np.array([[0, 0], [1, 2], [3, 3]]))
try:
    factorize(g)
except NotSugenoUtility as exc:
    print(exc.reason.kind.value, exc.reason.points, exc.reason.values)

# a decreasing table is rejected before any window is looked at
h = UtilityTable(D, Chain.numeric(4), np.array([[0, 3], [1, 0], [3, 3]]))
try:
    factorize(h)
except NotSugenoUtility as exc:
    print(exc.reason.kind.value, exc.reason.points)
