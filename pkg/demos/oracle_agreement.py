"""
SUFF against brute force
========================

On small scales we can enumerate every Sugeno integral and every tuple
of order-preserving maps. The exhaustive search and the window
construction must agree on which tables factor.
"""

import itertools
import time

import numpy as np

from sugeno_factor import (
    Chain,
    NotSugenoUtility,
    ProductDomain,
    UtilityTable,
    brute_force_factorize,
    enum_sugeno_integrals,
    factorize,
    is_order_preserving,
)

# the search space: 9 integrals of arity 2 on a 3-level scale
print("integrals n=2, |L|=3:", len(list(enum_sugeno_integrals(2, Chain.numeric(3)))))

domain = ProductDomain((Chain.numeric(3), Chain.numeric(2)))
L = Chain.numeric(4)

start = time.perf_counter()
tally = {"both": 0, "neither": 0, "disagree": 0}
for vals in itertools.product(range(4), repeat=6):
    f = UtilityTable(domain, L, np.array(vals).reshape(3, 2))
    if f.is_constant() or not is_order_preserving(f):
        continue
    try:
        factorize(f)
        suff = True
    except NotSugenoUtility:
        suff = False
    oracle = brute_force_factorize(f) is not None
    tally["both" if suff and oracle else "neither" if not (suff or oracle) else "disagree"] += 1
print(tally, f"{time.perf_counter() - start:.1f} s")
