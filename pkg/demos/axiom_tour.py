"""
Checking characterising axioms
==============================

Every axiom is checked exhaustively and failures come with a witness.
On a small scale we can sweep all functions and watch the axiom systems
pick out the same class.
"""

import itertools

import numpy as np

from sugeno_factor import Axiom, Chain, ProductDomain, UnaryMap, UtilityTable, check, hotel_maps, hotel_table

L = Chain.numeric(3)
D = ProductDomain.power(L, 2)

# min(x1, x2) is a lattice polynomial
f_min = UtilityTable.from_function(D, L, min)
print("min is median decomposable:", bool(check(f_min, "median-decomposable")))

# an alternating table is not, and the checker says where
f_alt = UtilityTable(D, L, np.array([[0, 2, 0], [2, 0, 2], [0, 2, 0]]))
res = check(f_alt, Axiom.MEDIAN_DECOMPOSABLE)
print("alternating table:", bool(res), res.witness)

# sweep all 3^9 functions and count each axiom system
systems = {
    "median": [Axiom.MEDIAN_DECOMPOSABLE],
    "homogeneity": [Axiom.ORDER_PRESERVING, Axiom.MIN_HOMOGENEOUS, Axiom.MAX_HOMOGENEOUS],
    "horizontal": [
        Axiom.ORDER_PRESERVING,
        Axiom.RANGE_IDEMPOTENT,
        Axiom.HORIZONTALLY_MINITIVE,
        Axiom.HORIZONTALLY_MAXITIVE,
    ],
    "comonotonic": [Axiom.RANGE_IDEMPOTENT, Axiom.COMONOTONIC_MINITIVE, Axiom.COMONOTONIC_MAXITIVE],
}
counts = dict.fromkeys(systems, 0)
for vals in itertools.product(range(3), repeat=9):
    f = UtilityTable(D, L, np.array(vals).reshape(3, 3))
    for name, axioms in systems.items():
        counts[name] += all(check(f, a) for a in axioms)
print("functions satisfying each system:", counts)

# pseudo axioms take one local utility per coordinate
hotel, phis = hotel_table(), hotel_maps()
for axiom in ("pseudo-median-decomposable", "pseudo-min-homogeneous", "pseudo-idempotent"):
    print(axiom, bool(check(hotel, axiom, phis)))

# with the wrong maps the hotel table loses pseudo idempotence
flat = [UnaryMap.constant(c, hotel.codomain, 4) for c in hotel.domain.chains]
res = check(hotel, "pseudo-idempotent", flat)
print("constant maps:", bool(res), res.witness)
