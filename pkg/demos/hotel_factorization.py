"""
Factoring a hotel rating table
==============================

Three criteria (service, price, location) rated on their own ordinal
scales are aggregated into a global score 1..8. We recover a Sugeno
integral and one local utility per criterion that reproduce the table.
"""

from sugeno_factor import factorize, hotel_table, recompose, simplify, to_text

f = hotel_table()
print(f.domain.shape, "points, scores", f.codomain.labels)

# a few rows of the table, read by label
for labels in [("*", "-", "n"), ("***", "0", "y"), ("****", "+", "y")]:
    x = f.domain.parse_point(labels)
    print(",".join(labels), "->", f.codomain.labels[f(x)])

# factorize returns the integral q and the local utilities phi_k
fact = factorize(f)
print("q =", to_text(fact.q))
print("q, absorbed terms removed =", to_text(simplify(fact.q), fact.q.chain, fact.q.n))

for chain, phi in zip(f.domain.chains, fact.phis):
    print(f"phi[{chain.name}]", dict(phi.labels()))

# the composition gives back every one of the 24 scores
g = recompose(fact)
print("recomposed table equals the input:", g == f)

# the raw numbers live in a numpy array; e.g. the best score per service level
best = f.values.max(axis=(1, 2))
print("best score per service level:", [f.codomain.labels[v] for v in best])
