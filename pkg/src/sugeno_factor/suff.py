"""Factorising a utility table as a Sugeno integral of local utility functions.

Given ``f: L_1 x ... x L_n -> L``, :func:`factorize` either finds a Sugeno
integral ``q`` and order-preserving maps ``phi_k: L_k -> L`` with

    f(x) = q(phi_1(x_1), ..., phi_n(x_n))

or raises :class:`NotSugenoUtility` with a replayable witness.

Each ``phi_k`` is read off ``f`` through "windows": fixing every coordinate
but ``k`` to a co-tuple ``z``, the value ``f(x_k, z)`` either shows
``phi_k(x_k)`` exactly (it lies strictly between ``f(bottom_k, z)`` and
``f(top_k, z)``), or only bounds it from below or above.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from .axioms import is_order_preserving
from .chains import Chain, Point, ProductDomain, characteristic_vector
from .polynomial import PolynomialDNF, is_sugeno
from .table import UnaryMap, UtilityTable, tables_equal

__all__ = [
    "Policy",
    "FailureKind",
    "FailureReason",
    "NotSugenoUtility",
    "ConstantTableError",
    "InternalInconsistency",
    "NormalizationRecord",
    "WindowReport",
    "Factorization",
    "normalize",
    "classify",
    "local_utility",
    "integral_of",
    "factorize",
    "recompose",
    "is_sugeno_utility",
]


class Policy(str, enum.Enum):
    """Which end of ``[l, u]`` to take when a value is only bounded on both sides."""

    LOWER = "lower"
    UPPER = "upper"


class FailureKind(str, enum.Enum):
    NOT_ORDER_PRESERVING = "NotOrderPreserving"
    MULTIPLE_WINDOW_VALUES = "MultipleWindowValues"
    INCONSISTENT_BOUNDS = "InconsistentBounds"
    INESSENTIAL_VARIABLE = "InessentialVariable"


@dataclass(frozen=True)
class FailureReason:
    """Why a table is not a Sugeno utility function.

    ``points`` holds full domain points and ``values`` codomain values that
    together reproduce the violation; ``coordinate``/``value`` locate the
    offending ``(k, x_k)`` when there is one (0-based coordinate).
    """

    kind: FailureKind
    message: str
    coordinate: int | None = None
    value: int | None = None
    points: dict[str, Point] = field(default_factory=dict)
    values: dict[str, int] = field(default_factory=dict)

    def lifted(self, record: NormalizationRecord) -> FailureReason:
        """Re-express a witness found on the normalised table in terms of the original one."""
        if record.is_identity:
            return self
        lo = record.codomain_interval[0]
        points = {key: record.lift_point(p) for key, p in self.points.items()}
        values = {key: v + lo for key, v in self.values.items()}
        coord = None if self.coordinate is None else record.kept[self.coordinate]
        return FailureReason(self.kind, self.message, coord, self.value, points, values)


class NotSugenoUtility(Exception):
    """The table admits no factorisation; ``reason`` carries the witness."""

    def __init__(self, reason: FailureReason):
        self.reason = reason
        super().__init__(f"{reason.kind.value}: {reason.message}")


class ConstantTableError(ValueError):
    """Constant tables have no essential variable to factor over."""


class InternalInconsistency(RuntimeError):
    """The construction passed every check yet does not reproduce the table."""


# -- normalisation -------------------------------------------------------------


@dataclass(frozen=True)
class NormalizationRecord:
    original_domain: ProductDomain
    original_codomain: Chain
    kept: tuple[int, ...]
    dropped: tuple[int, ...]
    codomain_interval: tuple[int, int]

    @property
    def is_identity(self) -> bool:
        lo, hi = self.codomain_interval
        return not self.dropped and lo == 0 and hi == self.original_codomain.top

    def lift_point(self, x: Point) -> Point:
        """Embed a point of the reduced domain, dropped coordinates at bottom."""
        out = [0] * self.original_domain.n
        for j, k in enumerate(self.kept):
            out[k] = x[j]
        return tuple(out)

    def project_point(self, x: Point) -> Point:
        return tuple(x[k] for k in self.kept)


def normalize(f: UtilityTable) -> tuple[UtilityTable, NormalizationRecord]:
    """Drop inessential coordinates and shrink the codomain to the values used.

    For an order-preserving ``f`` the new codomain is ``[f(0), f(1)]``, so the
    result maps bottom to bottom and top to top.
    """
    if f.is_constant():
        raise ConstantTableError("constant table: no variable is essential")
    kept = tuple(k for k in range(f.n) if f.depends_on(k))
    dropped = tuple(k for k in range(f.n) if k not in kept)
    values = f.values
    # every dropped axis is constant, so slicing at index 0 loses nothing
    index = tuple(slice(None) if k in kept else 0 for k in range(f.n))
    values = values[index]
    lo, hi = int(f.values.min()), int(f.values.max())
    domain = ProductDomain(tuple(f.domain.chains[k] for k in kept))
    g = UtilityTable(domain, f.codomain.interval(lo, hi), values - lo)
    record = NormalizationRecord(f.domain, f.codomain, kept, dropped, (lo, hi))
    return g, record


# -- windows -------------------------------------------------------------------


@dataclass(frozen=True)
class WindowReport:
    """Classification of the co-tuples of ``(k, x_k)``.

    Co-tuples list the other coordinates in their original order.
    ``f_values`` maps each co-tuple of W, L and U to ``f(x)``. ``w``, ``l`` and
    ``u`` are ``None`` when their class is empty.
    """

    coordinate: int
    value: int
    window: tuple[Point, ...]
    lower: tuple[Point, ...]
    upper: tuple[Point, ...]
    equal: tuple[Point, ...]
    f_values: dict[Point, int]
    w: int | None
    l: int | None  # noqa: E741
    u: int | None

    def phi(self, policy: Policy | str = Policy.LOWER) -> int | None:
        """Value chosen for ``phi_k(x_k)``; ``None`` when nothing is known."""
        if self.w is not None:
            return self.w
        if self.l is not None and (self.u is None or Policy(policy) is Policy.LOWER):
            return self.l
        return self.u


def _cotuples(domain: ProductDomain, k: int) -> Iterator[Point]:
    return itertools.product(*(c.values() for i, c in enumerate(domain.chains) if i != k))


def _insert(z: Point, k: int, v: int) -> Point:
    return z[:k] + (v,) + z[k:]


def classify(f: UtilityTable, k: int, xk: int) -> WindowReport:
    """Sort the co-tuples of ``(k, xk)`` into window/lower/upper/equal classes.

    Raises :class:`NotSugenoUtility` when two windows expose different values
    (reported as soon as the second value is met) or when the bounds
    contradict each other.
    """
    if not 0 <= k < f.n:
        raise IndexError(f"coordinate {k} out of range")
    chain = f.domain.chains[k]
    chain.check(xk)
    top = chain.top
    window, lower, upper, equal = [], [], [], []
    f_values: dict[Point, int] = {}
    w = w_at = None
    l = l_at = u = u_at = None  # noqa: E741
    for z in _cotuples(f.domain, k):
        x = _insert(z, k, xk)
        lo, mid, hi = f(_insert(z, k, 0)), f(x), f(_insert(z, k, top))
        if not lo <= mid <= hi:
            raise ValueError(f"classify needs an order-preserving table (violated at {x})")
        if lo < mid < hi:
            window.append(z)
            if w is None:
                w, w_at = mid, x
            elif mid != w:
                raise NotSugenoUtility(
                    FailureReason(
                        FailureKind.MULTIPLE_WINDOW_VALUES,
                        f"windows expose two values {w} and {mid}",
                        k,
                        xk,
                        points={"first": w_at, "second": x},
                        values={"first": w, "second": mid},
                    )
                )
        elif lo < mid:
            lower.append(z)
            if l is None or mid > l:
                l, l_at = mid, x  # noqa: E741
        elif mid < hi:
            upper.append(z)
            if u is None or mid < u:
                u, u_at = mid, x
        else:
            equal.append(z)
            continue
        f_values[z] = mid

    conflict = None
    if l is not None and u is not None and l > u:
        conflict = "l > u"
    elif l is not None and w is not None and l > w:
        conflict = "l > w"
    elif w is not None and u is not None and w > u:
        conflict = "w > u"
    if conflict:
        points, values = {}, {}
        for name, v, at in (("l", l, l_at), ("w", w, w_at), ("u", u, u_at)):
            if v is not None:
                points[name], values[name] = at, v
        raise NotSugenoUtility(
            FailureReason(
                FailureKind.INCONSISTENT_BOUNDS,
                f"bounds contradict ({conflict})",
                k,
                xk,
                points=points,
                values=values,
            )
        )
    return WindowReport(k, xk, tuple(window), tuple(lower), tuple(upper), tuple(equal), f_values, w, l, u)


def local_utility(f: UtilityTable, k: int, policy: Policy | str = Policy.LOWER) -> UnaryMap:
    """Build ``phi_k`` by classifying every value of coordinate ``k``."""
    policy = Policy(policy)
    out = []
    for xk in f.domain.chains[k].values():
        v = classify(f, k, xk).phi(policy)
        if v is None:
            raise NotSugenoUtility(
                FailureReason(
                    FailureKind.INESSENTIAL_VARIABLE,
                    "no co-tuple carries information about this variable",
                    k,
                    xk,
                )
            )
        out.append(v)
    return UnaryMap(f.domain.chains[k], f.codomain, tuple(out))


def integral_of(f: UtilityTable) -> PolynomialDNF:
    """The polynomial with coefficients ``f(e_I)``; Sugeno once ``f`` is normalised."""
    coeffs = tuple(f(characteristic_vector(mask, f.domain)) for mask in range(1 << f.n))
    return PolynomialDNF(f.n, f.codomain, coeffs)


# -- end to end ------------------------------------------------------------------


@dataclass(frozen=True)
class Factorization:
    """``q`` and ``phis`` act on the normalised table described by ``record``."""

    q: PolynomialDNF
    phis: tuple[UnaryMap, ...]
    record: NormalizationRecord
    policy: Policy | None = Policy.LOWER

    def __call__(self, x: Point) -> int:
        """Value at a point of the original domain, as an original codomain index."""
        y = tuple(phi(x[k]) for phi, k in zip(self.phis, self.record.kept))
        return self.q(y) + self.record.codomain_interval[0]


def recompose(fact: Factorization, domain: ProductDomain | None = None) -> UtilityTable:
    """Tabulate ``q(phi_1(x_1), ..., phi_n(x_n))`` on the original domain."""
    rec = fact.record
    if domain is not None and domain.shape != rec.original_domain.shape:
        raise ValueError(f"factorisation is for shape {rec.original_domain.shape}, not {domain.shape}")
    if len(fact.phis) != fact.q.n or fact.q.n != len(rec.kept):
        raise ValueError("arity mismatch between the integral, the maps and the record")
    dom = rec.original_domain
    ys = np.array([[phi(x[k]) for phi, k in zip(fact.phis, rec.kept)] for x in dom.points()], dtype=np.int64)
    vals = fact.q.evaluate_many(ys) + rec.codomain_interval[0]
    return UtilityTable(dom, rec.original_codomain, vals.reshape(dom.shape))


def factorize(f: UtilityTable, policy: Policy | str = Policy.LOWER) -> Factorization:
    """Factor ``f`` as a Sugeno integral of local utility functions.

    Raises :class:`NotSugenoUtility` exactly when ``f`` is not an
    order-preserving pseudo-Sugeno integral, :class:`ConstantTableError` for
    constant tables.
    """
    policy = Policy(policy)
    if f.is_constant():
        raise ConstantTableError("constant table: no variable is essential")
    op = is_order_preserving(f)
    if not op:
        wit = op.witness
        raise NotSugenoUtility(
            FailureReason(
                FailureKind.NOT_ORDER_PRESERVING,
                "f decreases between two comparable points",
                points={"x": wit["x"], "y": wit["y"]},
                values={"x": wit["f(x)"], "y": wit["f(y)"]},
            )
        )
    g, record = normalize(f)
    try:
        phis = tuple(local_utility(g, k, policy) for k in range(g.n))
    except NotSugenoUtility as exc:
        raise NotSugenoUtility(exc.reason.lifted(record)) from None
    q = integral_of(g)
    if not is_sugeno(q):
        raise InternalInconsistency("normalised table does not fix bottom and top")
    fact = Factorization(q, phis, record, policy)
    same, where = tables_equal(recompose(fact), f)
    if not same:
        raise InternalInconsistency(f"factorisation disagrees with the table at {where}")
    return fact


def is_sugeno_utility(f: UtilityTable) -> bool:
    """Decide factorisability; constant tables count (constant maps do it)."""
    if f.is_constant():
        return True
    try:
        factorize(f)
    except NotSugenoUtility:
        return False
    return True
