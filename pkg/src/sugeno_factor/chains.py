"""Finite bounded chains, product domains and tuple-level lattice operations.

Chain values are plain integer indices (``0`` is the bottom, ``size - 1`` the
top). Labels only matter when reading or printing tables.
"""

from __future__ import annotations

import itertools
import numbers
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Chain",
    "ProductDomain",
    "med3",
    "convex_hull",
    "substitute",
    "lattice_shift",
    "cut",
    "characteristic_vector",
    "comonotonic",
    "subsets",
    "members",
]

Point = tuple[int, ...]


@dataclass(frozen=True)
class Chain:
    """A finite totally ordered scale with named levels, listed ascending."""

    labels: tuple[str, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        labels = tuple(str(lab) for lab in self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ValueError("a chain needs at least one level")
        if any(not lab for lab in labels):
            raise ValueError("chain labels must be nonempty")
        if len(set(labels)) != len(labels):
            raise ValueError(f"duplicate labels in chain {labels}")

    @classmethod
    def numeric(cls, size: int, start: int = 0, name: str = "") -> Chain:
        """Chain labelled ``start, start+1, ...``."""
        return cls(tuple(str(i) for i in range(start, start + size)), name=name)

    @property
    def size(self) -> int:
        return len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def bottom(self) -> int:
        return 0

    @property
    def top(self) -> int:
        return len(self.labels) - 1

    def values(self) -> range:
        return range(len(self.labels))

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown label {label!r} in chain {self.name or self.labels}") from None

    def label(self, value: int) -> str:
        self.check(value)
        return self.labels[value]

    def check(self, value: int) -> int:
        if not 0 <= value < len(self.labels):
            raise ValueError(f"value {value} outside chain of size {len(self.labels)}")
        return value

    def dual(self) -> Chain:
        """The same levels in reverse order; value ``v`` becomes ``top - v``."""
        return Chain(self.labels[::-1], name=self.name)

    def interval(self, lo: int, hi: int) -> Chain:
        """The sub-chain ``[lo, hi]`` (values re-indexed from 0)."""
        self.check(lo)
        self.check(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        return Chain(self.labels[lo : hi + 1], name=self.name)


@dataclass(frozen=True)
class ProductDomain:
    chains: tuple[Chain, ...]

    def __post_init__(self):
        chains = tuple(self.chains)
        object.__setattr__(self, "chains", chains)
        if not chains:
            raise ValueError("a product domain needs at least one coordinate")
        if not all(isinstance(c, Chain) for c in chains):
            raise TypeError("every coordinate must be a Chain")

    @classmethod
    def power(cls, chain: Chain, n: int) -> ProductDomain:
        return cls((chain,) * n)

    @property
    def n(self) -> int:
        return len(self.chains)

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(c.size for c in self.chains)

    @property
    def size(self) -> int:
        out = 1
        for c in self.chains:
            out *= c.size
        return out

    @property
    def bottom(self) -> Point:
        return (0,) * self.n

    @property
    def top(self) -> Point:
        return tuple(c.top for c in self.chains)

    def is_homogeneous(self) -> bool:
        return all(c == self.chains[0] for c in self.chains)

    def points(self) -> Iterator[Point]:
        """All points, lexicographically (last coordinate varies fastest)."""
        return itertools.product(*(c.values() for c in self.chains))

    def check(self, x: Sequence[int]) -> Point:
        x = tuple(int(v) for v in x)
        if len(x) != self.n:
            raise ValueError(f"expected a {self.n}-tuple, got {len(x)} values")
        for v, c in zip(x, self.chains):
            c.check(v)
        return x

    def parse_point(self, labels: Sequence[str]) -> Point:
        if len(labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(labels)}")
        return tuple(c.index(lab) for c, lab in zip(self.chains, labels))

    def format_point(self, x: Sequence[int]) -> str:
        return ",".join(c.label(v) for c, v in zip(self.chains, x))

    def drop(self, k: int) -> ProductDomain:
        return ProductDomain(self.chains[:k] + self.chains[k + 1 :])


def med3(a: int, b: int, c: int) -> int:
    """Middle element of ``{a, b, c}``."""
    if a > b:
        a, b = b, a
    # now a <= b
    if c <= a:
        return a
    if c >= b:
        return b
    return c


def convex_hull(values: Iterable[int]) -> tuple[int, int]:
    """Endpoints ``(lo, hi)`` of the smallest interval containing ``values``."""
    values = list(values)
    if not values:
        raise ValueError("empty hull")
    return min(values), max(values)


def substitute(x: Sequence[int], k: int, c: int) -> Point:
    """``x`` with its ``k``-th coordinate (0-based) replaced by ``c``."""
    if not 0 <= k < len(x):
        raise IndexError(f"coordinate {k} out of range for a {len(x)}-tuple")
    x = tuple(x)
    return x[:k] + (c,) + x[k + 1 :]


def lattice_shift(x: Sequence[int], c: int, direction: str, domain: ProductDomain | None = None) -> Point:
    """Coordinatewise ``x ∧ c`` (direction ``"meet"``) or ``x ∨ c`` (``"join"``).

    Only defined on a power ``L**n``; pass ``domain`` to have that enforced.
    """
    if domain is not None:
        if not domain.is_homogeneous():
            raise ValueError("lattice_shift needs a homogeneous domain L^n")
        domain.check(x)
        domain.chains[0].check(c)
    if direction == "meet":
        return tuple(v if v < c else c for v in x)
    if direction == "join":
        return tuple(v if v > c else c for v in x)
    raise ValueError(f"direction must be 'meet' or 'join', not {direction!r}")


def cut(x: Sequence[int], threshold, direction: str, domain: ProductDomain) -> Point:
    """The lower cut ``[x]_c`` / upper cut ``[x]^c``.

    ``threshold`` is either a scalar (homogeneous domains only) or a tuple
    ``d`` in the same domain. Lower: coordinates ``x_i <= d_i`` drop to the
    bottom. Upper: coordinates ``x_i >= d_i`` rise to the top.
    """
    x = domain.check(x)
    if isinstance(threshold, numbers.Integral):
        if not domain.is_homogeneous():
            raise ValueError("a scalar threshold needs a homogeneous domain L^n")
        domain.chains[0].check(int(threshold))
        d = (int(threshold),) * domain.n
    else:
        d = domain.check(threshold)
    if direction == "lower":
        return tuple(0 if v <= t else v for v, t in zip(x, d))
    if direction == "upper":
        return tuple(c.top if v >= t else v for v, t, c in zip(x, d, domain.chains))
    raise ValueError(f"direction must be 'lower' or 'upper', not {direction!r}")


def members(mask: int, n: int) -> tuple[int, ...]:
    """0-based coordinates whose bit is set in ``mask``."""
    return tuple(i for i in range(n) if mask >> i & 1)


def subsets(n: int) -> range:
    """All subset bitmasks of ``{0, ..., n-1}`` in increasing order."""
    return range(1 << n)


def characteristic_vector(mask: int, domain: ProductDomain) -> Point:
    """``e_I``: top where the bit is set, bottom elsewhere."""
    if mask < 0 or mask >> domain.n:
        raise ValueError(f"subset mask {mask:#b} has bits beyond coordinate {domain.n}")
    return tuple(c.top if mask >> i & 1 else 0 for i, c in enumerate(domain.chains))


def comonotonic(x: Sequence[int], y: Sequence[int], domain: ProductDomain | None = None) -> bool:
    """True when one permutation sorts both ``x`` and ``y`` ascending."""
    if domain is not None:
        if not domain.is_homogeneous():
            raise ValueError("comonotonicity is only defined on L^n")
        domain.check(x)
        domain.check(y)
    if len(x) != len(y):
        raise ValueError("tuples of different lengths")
    n = len(x)
    for i in range(n):
        for j in range(i + 1, n):
            if (x[i] - x[j]) * (y[i] - y[j]) < 0:
                return False
    return True
