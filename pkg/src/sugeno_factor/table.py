"""Dense utility tables ``f: L_1 x ... x L_n -> L`` and unary maps ``L_i -> L``."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterator, Sequence

import numpy as np

from .chains import Chain, Point, ProductDomain, substitute

__all__ = ["UtilityTable", "UnaryMap", "tables_equal", "find_order_violation"]


@dataclass(frozen=True, eq=False)
class UtilityTable:
    """A total map from a product of chains into a codomain chain.

    ``values`` is an integer array of shape ``domain.shape`` (row-major, so
    the last coordinate varies fastest) holding codomain indices.
    """

    domain: ProductDomain
    codomain: Chain
    values: np.ndarray

    def __post_init__(self):
        values = np.array(self.values, dtype=np.int64)
        if values.shape != self.domain.shape:
            raise ValueError(f"values have shape {values.shape}, domain needs {self.domain.shape}")
        if values.size and (values.min() < 0 or values.max() > self.codomain.top):
            raise ValueError("table values fall outside the codomain chain")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_function(cls, domain: ProductDomain, codomain: Chain, fn: Callable[[Point], int]) -> UtilityTable:
        values = np.empty(domain.shape, dtype=np.int64)
        for x in domain.points():
            values[x] = fn(x)
        return cls(domain, codomain, values)

    @property
    def n(self) -> int:
        return self.domain.n

    @cached_property
    def _lookup(self) -> dict[Point, int]:
        return {x: int(v) for x, v in zip(self.domain.points(), self.values.ravel().tolist())}

    def __call__(self, x: Sequence[int]) -> int:
        return self._lookup[tuple(x)]

    def __getitem__(self, x: Sequence[int]) -> int:
        return self._lookup[tuple(x)]

    def points(self) -> Iterator[Point]:
        return self.domain.points()

    def items(self) -> Iterator[tuple[Point, int]]:
        return iter(self._lookup.items())

    def range(self) -> set[int]:
        return set(self._lookup.values())

    def is_constant(self) -> bool:
        return self.values.min() == self.values.max()

    def is_homogeneous(self) -> bool:
        """True when the table lives on ``L^n`` with ``L`` its own codomain."""
        return all(c == self.codomain for c in self.domain.chains)

    def depends_on(self, k: int) -> bool:
        """True when changing coordinate ``k`` alone can change the value."""
        arr = self.values
        first = np.take(arr, [0], axis=k)
        return not np.array_equal(np.broadcast_to(first, arr.shape), arr)

    def __eq__(self, other):
        if not isinstance(other, UtilityTable):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self.values, other.values)
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, self.values.tobytes()))

    def __repr__(self):
        return f"UtilityTable(shape={self.domain.shape}, codomain_size={self.codomain.size})"


@dataclass(frozen=True)
class UnaryMap:
    """A total map from a chain ``L_i`` into a chain ``L``."""

    source: Chain
    target: Chain
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.source.size:
            raise ValueError(f"map has {len(values)} values for a source chain of size {self.source.size}")
        for v in values:
            self.target.check(v)

    @classmethod
    def identity(cls, chain: Chain) -> UnaryMap:
        return cls(chain, chain, tuple(chain.values()))

    @classmethod
    def constant(cls, source: Chain, target: Chain, value: int) -> UnaryMap:
        return cls(source, target, (value,) * source.size)

    def __call__(self, x: int) -> int:
        return self.values[x]

    def is_order_preserving(self) -> bool:
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def range(self) -> set[int]:
        return set(self.values)

    def on_dual_source(self) -> UnaryMap:
        """The same map read on the dual of the source chain."""
        return UnaryMap(self.source.dual(), self.target, self.values[::-1])

    def labels(self) -> list[tuple[str, str]]:
        return [(self.source.labels[x], self.target.labels[v]) for x, v in enumerate(self.values)]


def find_order_violation(f: UtilityTable) -> tuple[Point, Point] | None:
    """First covering pair ``(x, y)`` (``y`` raises one coordinate of ``x`` by a
    step) with ``f(x) > f(y)``, in lexicographic order, or ``None``."""
    for x in f.points():
        fx = f(x)
        for k, c in enumerate(f.domain.chains):
            if x[k] < c.top:
                y = substitute(x, k, x[k] + 1)
                if fx > f(y):
                    return x, y
    return None


def tables_equal(f: UtilityTable, g: UtilityTable) -> tuple[bool, Point | None]:
    """Pointwise equality; on failure also returns the first differing point."""
    if f.domain.shape != g.domain.shape or f.codomain.size != g.codomain.size:
        raise ValueError("tables have different shapes")
    diff = np.argwhere(f.values != g.values)
    if len(diff) == 0:
        return True, None
    return False, tuple(int(v) for v in diff[0])
