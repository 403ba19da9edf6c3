"""Lattice polynomial functions in disjunctive normal form.

A polynomial ``p: L^n -> L`` is stored by its values on the vertices of the
cube: ``coeffs[I] = p(e_I)`` for every subset bitmask ``I`` (bit ``i`` stands
for variable ``y_{i+1}``), and

    p(y) = max over I of min(coeffs[I], min(y_i for i in I)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .chains import Chain, med3, members

__all__ = [
    "MAX_ARITY",
    "NotOrderPreservingError",
    "PolynomialDNF",
    "Term",
    "interpolate",
    "is_sugeno",
    "clamp",
    "sugeno_core",
    "simplify",
    "evaluate_terms",
    "to_text",
]

MAX_ARITY = 20

Term = tuple[int, int]  # (subset mask, coefficient)


class NotOrderPreservingError(ValueError):
    """Vertex data that decreases along some inclusion ``I ⊂ J``."""

    def __init__(self, smaller: int, larger: int, c_smaller: int, c_larger: int):
        self.pair = (smaller, larger)
        self.values = (c_smaller, c_larger)
        super().__init__(
            f"not order-preserving on {{0,1}}^n: subset {smaller:#b} has coefficient "
            f"{c_smaller} > {c_larger} at its superset {larger:#b}"
        )


def _first_violation(coeffs: Sequence[int], n: int) -> tuple[int, int] | None:
    # checking single-element extensions is enough for monotonicity on the cube
    for mask in range(1 << n):
        for i in range(n):
            if not mask >> i & 1:
                sup = mask | 1 << i
                if coeffs[mask] > coeffs[sup]:
                    return mask, sup
    return None


@dataclass(frozen=True)
class PolynomialDNF:
    n: int
    chain: Chain
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_ARITY:
            raise ValueError(f"arity {self.n} outside [0, {MAX_ARITY}]")
        coeffs = tuple(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) != 1 << self.n:
            raise ValueError(f"need {1 << self.n} coefficients, got {len(coeffs)}")
        for c in coeffs:
            self.chain.check(c)
        bad = _first_violation(coeffs, self.n)
        if bad is not None:
            raise NotOrderPreservingError(bad[0], bad[1], coeffs[bad[0]], coeffs[bad[1]])

    def coefficient(self, subset: Iterable[int]) -> int:
        """Coefficient of a subset given by 1-based variable numbers."""
        mask = 0
        for i in subset:
            mask |= 1 << (i - 1)
        return self.coeffs[mask]

    def as_dict(self) -> dict[frozenset[int], int]:
        """Coefficients keyed by 1-based variable sets."""
        return {frozenset(i + 1 for i in members(m, self.n)): c for m, c in enumerate(self.coeffs)}

    def __call__(self, y: Sequence[int]) -> int:
        return evaluate(self, y)

    def evaluate_many(self, ys: np.ndarray) -> np.ndarray:
        """Vectorised evaluation over an ``(m, n)`` integer array."""
        ys = np.asarray(ys)
        if ys.ndim != 2 or ys.shape[1] != self.n:
            raise ValueError(f"expected an array of shape (m, {self.n})")
        out = np.full(ys.shape[0], self.coeffs[0], dtype=np.int64)
        for mask in range(1, 1 << self.n):
            cols = list(members(mask, self.n))
            term = np.minimum(ys[:, cols].min(axis=1), self.coeffs[mask])
            np.maximum(out, term, out=out)
        return out


def evaluate(p: PolynomialDNF, y: Sequence[int]) -> int:
    if len(y) != p.n:
        raise ValueError(f"polynomial has arity {p.n}, got a {len(y)}-tuple")
    for v in y:
        p.chain.check(v)
    top = p.chain.top
    best = p.coeffs[0]
    # meet over the empty set is the top element, so mask 0 contributes coeffs[0]
    for mask in range(1, 1 << p.n):
        c = p.coeffs[mask]
        if c <= best:
            continue
        m = top
        for i in range(p.n):
            if mask >> i & 1 and y[i] < m:
                m = y[i]
        t = c if c < m else m
        if t > best:
            best = t
    return best


def interpolate(vertex_values: Mapping[int, int] | Sequence[int], n: int, chain: Chain) -> PolynomialDNF:
    """The unique polynomial taking the given values on ``{0,1}^n``.

    ``vertex_values`` maps subset bitmasks to chain values (a sequence indexed
    by bitmask works too). Raises :class:`NotOrderPreservingError` when the data
    is not monotone, since no polynomial then exists.
    """
    if isinstance(vertex_values, Mapping):
        missing = [m for m in range(1 << n) if m not in vertex_values]
        if missing:
            raise ValueError(f"vertex data missing for subsets {missing}")
        coeffs = [vertex_values[m] for m in range(1 << n)]
    else:
        coeffs = list(vertex_values)
    return PolynomialDNF(n, chain, tuple(coeffs))


def is_sugeno(p: PolynomialDNF) -> bool:
    """Sugeno integrals are exactly the idempotent polynomials."""
    return p.coeffs[0] == p.chain.bottom and p.coeffs[-1] == p.chain.top


def clamp(v: int, f0: int, f1: int) -> int:
    return med3(f0, v, f1)


def sugeno_core(p: PolynomialDNF) -> tuple[PolynomialDNF, int, int]:
    """Split ``p`` into a Sugeno integral ``q`` and a window ``[s, t]`` with
    ``p(y) == clamp(q(y), s, t)`` everywhere."""
    if p.n < 1:
        raise ValueError("sugeno_core needs arity >= 1")
    coeffs = list(p.coeffs)
    s, t = coeffs[0], coeffs[-1]
    coeffs[0] = p.chain.bottom
    coeffs[-1] = p.chain.top
    return PolynomialDNF(p.n, p.chain, tuple(coeffs)), s, t


def _proper_subsets(mask: int):
    if mask == 0:
        return
    sub = (mask - 1) & mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def simplify(p: PolynomialDNF) -> frozenset[Term]:
    """Drop every term absorbed by a term over a proper subset.

    The result is a set of ``(mask, coefficient)`` pairs; the empty set stands
    for the constant bottom.
    """
    keep = []
    for mask, c in enumerate(p.coeffs):
        if c == p.chain.bottom:
            continue
        if not any(p.coeffs[sub] >= c for sub in _proper_subsets(mask)):
            keep.append((mask, c))
    return frozenset(keep)


def evaluate_terms(terms: Iterable[Term], chain: Chain, y: Sequence[int]) -> int:
    best = chain.bottom
    for mask, c in terms:
        m = c
        for i, v in enumerate(y):
            if mask >> i & 1 and v < m:
                m = v
        best = max(best, m)
    return best


def _term_text(mask: int, c: int, chain: Chain, n: int) -> tuple[str, int]:
    factors = [] if (c == chain.top and mask) else [chain.labels[c]]
    factors += [f"y{i + 1}" for i in members(mask, n)]
    return "∧".join(factors), len(factors)


def to_text(p: PolynomialDNF | Iterable[Term], chain: Chain | None = None, n: int | None = None) -> str:
    """Infix rendering, terms ordered by (size, bitmask).

    Pass a :class:`PolynomialDNF` to print every coefficient, or a term set
    (from :func:`simplify`) together with its ``chain``.
    """
    if isinstance(p, PolynomialDNF):
        chain, n = p.chain, p.n
        terms = list(enumerate(p.coeffs))
    else:
        if chain is None:
            raise ValueError("a chain is needed to render a term set")
        terms = list(p)
        if n is None:
            n = max((mask.bit_length() for mask, _ in terms), default=0)
    if not terms:
        return chain.labels[chain.bottom]
    terms.sort(key=lambda t: (bin(t[0]).count("1"), t[0]))
    parts = []
    for mask, c in terms:
        text, size = _term_text(mask, c, chain, n)
        parts.append(f"({text})" if size > 1 and len(terms) > 1 else text)
    return "∨".join(parts)
