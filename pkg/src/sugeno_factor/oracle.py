"""Brute-force ground truth for small instances.

Everything here is deliberately naive: enumerate every candidate, test it
pointwise. Nothing is shared with the window construction in :mod:`suff`
beyond the data types.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .chains import Chain, members
from .polynomial import PolynomialDNF
from .suff import Factorization, NormalizationRecord
from .table import UnaryMap, UtilityTable, tables_equal

__all__ = [
    "BudgetExceeded",
    "EnumerationBudget",
    "enum_monotone_maps",
    "count_monotone_maps",
    "enum_sugeno_integrals",
    "sugeno_count_bound",
    "brute_force_factorize",
    "tables_equal",
]


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class EnumerationBudget:
    max_candidates: int = 2_000_000
    max_chain_size: int = 8
    max_arity: int = 4
    max_seconds: float = 60.0

    def __post_init__(self):
        for name in ("max_candidates", "max_chain_size", "max_arity", "max_seconds"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


def count_monotone_maps(source_size: int, target_size: int) -> int:
    return math.comb(source_size + target_size - 1, source_size)


def enum_monotone_maps(source: Chain, target: Chain) -> Iterator[UnaryMap]:
    """Every order-preserving map, in lexicographic order of value sequences."""
    for values in itertools.combinations_with_replacement(target.values(), source.size):
        yield UnaryMap(source, target, values)


def sugeno_count_bound(n: int, chain: Chain) -> int:
    """Upper bound on the number of Sugeno integrals: free choice of every
    proper nonempty coefficient."""
    return chain.size ** max((1 << n) - 2, 0)


def enum_sugeno_integrals(n: int, chain: Chain, budget: EnumerationBudget | None = None) -> Iterator[PolynomialDNF]:
    """Every Sugeno integral of arity ``n`` on ``chain``.

    Coefficients are chosen for subsets in increasing bitmask order; each must
    dominate those of its one-element-smaller subsets. Output order is
    lexicographic in the coefficient vector.
    """
    budget = budget or EnumerationBudget()
    if n < 1 or n > budget.max_arity:
        raise BudgetExceeded(f"arity {n} outside [1, {budget.max_arity}]")
    bound = sugeno_count_bound(n, chain)
    if bound > budget.max_candidates:
        raise BudgetExceeded(f"up to {bound} Sugeno integrals exceeds the budget of {budget.max_candidates}")
    full = (1 << n) - 1
    coeffs = [0] * (1 << n)
    coeffs[full] = chain.top

    def fill(mask: int) -> Iterator[tuple[int, ...]]:
        if mask == full:
            yield tuple(coeffs)
            return
        floor = max((coeffs[mask & ~(1 << i)] for i in members(mask, n)), default=0)
        for c in range(floor, chain.top + 1):
            coeffs[mask] = c
            yield from fill(mask + 1)

    for cs in fill(1):
        yield PolynomialDNF(n, chain, cs)


def _matches(f_items: Sequence[tuple[tuple[int, ...], int]], q: PolynomialDNF, phis: Sequence[UnaryMap]) -> bool:
    for x, fx in f_items:
        if q([phi.values[v] for phi, v in zip(phis, x)]) != fx:
            return False
    return True


def brute_force_factorize(f: UtilityTable, budget: EnumerationBudget | None = None) -> Factorization | None:
    """Search all Sugeno integrals times all tuples of monotone maps.

    Candidates are tried integral-major, then map tuples in lexicographic
    order; the first one reproducing ``f`` is returned, ``None`` if there is
    none.
    """
    budget = budget or EnumerationBudget()
    sizes = [c.size for c in f.domain.chains] + [f.codomain.size]
    if max(sizes) > budget.max_chain_size:
        raise BudgetExceeded(f"chain of size {max(sizes)} exceeds the budget of {budget.max_chain_size}")
    if f.n > budget.max_arity:
        raise BudgetExceeded(f"arity {f.n} exceeds the budget of {budget.max_arity}")
    total = sugeno_count_bound(f.n, f.codomain)
    for c in f.domain.chains:
        total *= count_monotone_maps(c.size, f.codomain.size)
    if total > budget.max_candidates:
        raise BudgetExceeded(f"up to {total} candidates exceeds the budget of {budget.max_candidates}")

    deadline = time.monotonic() + budget.max_seconds
    items = list(f.items())
    record = NormalizationRecord(f.domain, f.codomain, tuple(range(f.n)), (), (0, f.codomain.top))
    map_lists = [list(enum_monotone_maps(c, f.codomain)) for c in f.domain.chains]
    for i, q in enumerate(enum_sugeno_integrals(f.n, f.codomain, budget)):
        if time.monotonic() > deadline:
            raise BudgetExceeded(f"gave up after {budget.max_seconds} s ({i} integrals tried)")
        for phis in itertools.product(*map_lists):
            if _matches(items, q, phis):
                return Factorization(q, tuple(phis), record, policy=None)
    return None
