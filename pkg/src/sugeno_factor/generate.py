"""Random instances: Sugeno integrals, local utilities and their compositions."""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .chains import Chain, ProductDomain, members
from .polynomial import PolynomialDNF
from .table import UnaryMap, UtilityTable

__all__ = ["random_sugeno_integral", "random_monotone_map", "compose", "random_composition"]


def random_sugeno_integral(n: int, chain: Chain, rng: np.random.Generator) -> PolynomialDNF:
    """Coefficients drawn in bitmask order, each uniform above its immediate subsets."""
    full = (1 << n) - 1
    coeffs = [0] * (1 << n)
    for mask in range(1, full):
        floor = max(coeffs[mask & ~(1 << i)] for i in members(mask, n))
        coeffs[mask] = int(rng.integers(floor, chain.top + 1))
    coeffs[full] = chain.top
    return PolynomialDNF(n, chain, tuple(coeffs))


def random_monotone_map(source: Chain, target: Chain, rng: np.random.Generator) -> UnaryMap:
    values = np.sort(rng.integers(0, target.size, size=source.size))
    return UnaryMap(source, target, tuple(int(v) for v in values))


def compose(q: PolynomialDNF, phis: Sequence[UnaryMap]) -> UtilityTable:
    """The table of ``x -> q(phi_1(x_1), ..., phi_n(x_n))``."""
    domain = ProductDomain(tuple(phi.source for phi in phis))
    return UtilityTable.from_function(domain, q.chain, lambda x: q([phi(v) for phi, v in zip(phis, x)]))


def random_composition(
    rng: np.random.Generator,
    max_arity: int = 3,
    min_size: int = 2,
    max_size: int = 5,
) -> tuple[UtilityTable, PolynomialDNF, tuple[UnaryMap, ...]]:
    """A random ``q`` over a chain of size ``min_size..max_size``, arity
    ``1..max_arity``, with random order-preserving maps, and its table."""
    n = int(rng.integers(1, max_arity + 1))
    chain = Chain.numeric(int(rng.integers(min_size, max_size + 1)))
    q = random_sugeno_integral(n, chain, rng)
    phis = tuple(
        random_monotone_map(Chain.numeric(int(rng.integers(min_size, max_size + 1)), name=f"x{i + 1}"), chain, rng)
        for i in range(n)
    )
    return compose(q, phis), q, phis
