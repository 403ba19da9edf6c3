"""Exhaustive checks of the axioms characterising polynomial functions and
Sugeno utility functions.

Classical axioms apply to tables on ``L^n`` (every input chain equals the
codomain). Pseudo axioms apply to any table together with one unary map
``phi_i: L_i -> L`` per coordinate. Every check walks its full quantifier
range in lexicographic order and reports the first counterexample.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterator, Sequence

from .chains import Point, comonotonic, cut, lattice_shift, med3, substitute
from .table import UnaryMap, UtilityTable, find_order_violation

__all__ = [
    "Axiom",
    "CLASSICAL_AXIOMS",
    "PSEUDO_AXIOMS",
    "AxiomResult",
    "is_order_preserving",
    "check_classical",
    "boundary_conditions",
    "harmonize_ranges",
    "preimage",
    "check_pseudo",
    "check",
]


class Axiom(str, enum.Enum):
    ORDER_PRESERVING = "order-preserving"
    MEDIAN_DECOMPOSABLE = "median-decomposable"
    MIN_HOMOGENEOUS = "min-homogeneous"
    MAX_HOMOGENEOUS = "max-homogeneous"
    RANGE_IDEMPOTENT = "range-idempotent"
    HORIZONTALLY_MINITIVE = "horizontally-minitive"
    HORIZONTALLY_MAXITIVE = "horizontally-maxitive"
    COMONOTONIC_MINITIVE = "comonotonic-minitive"
    COMONOTONIC_MAXITIVE = "comonotonic-maxitive"
    PSEUDO_MEDIAN_DECOMPOSABLE = "pseudo-median-decomposable"
    PSEUDO_MIN_HOMOGENEOUS = "pseudo-min-homogeneous"
    PSEUDO_MAX_HOMOGENEOUS = "pseudo-max-homogeneous"
    PSEUDO_HORIZONTALLY_MINITIVE = "pseudo-horizontally-minitive"
    PSEUDO_HORIZONTALLY_MAXITIVE = "pseudo-horizontally-maxitive"
    PSEUDO_COMONOTONIC_MINITIVE = "pseudo-comonotonic-minitive"
    PSEUDO_COMONOTONIC_MAXITIVE = "pseudo-comonotonic-maxitive"
    PSEUDO_IDEMPOTENT = "pseudo-idempotent"
    BOUNDARY_CONDITIONS = "boundary-conditions"

    @classmethod
    def parse(cls, name: str) -> Axiom:
        try:
            return cls(name.replace("_", "-").lower())
        except ValueError:
            raise ValueError(f"unknown axiom {name!r}") from None

    @property
    def is_pseudo(self) -> bool:
        return self in PSEUDO_AXIOMS


CLASSICAL_AXIOMS = frozenset(
    {
        Axiom.ORDER_PRESERVING,
        Axiom.MEDIAN_DECOMPOSABLE,
        Axiom.MIN_HOMOGENEOUS,
        Axiom.MAX_HOMOGENEOUS,
        Axiom.RANGE_IDEMPOTENT,
        Axiom.HORIZONTALLY_MINITIVE,
        Axiom.HORIZONTALLY_MAXITIVE,
        Axiom.COMONOTONIC_MINITIVE,
        Axiom.COMONOTONIC_MAXITIVE,
    }
)
PSEUDO_AXIOMS = frozenset(set(Axiom) - CLASSICAL_AXIOMS)


@dataclass(frozen=True)
class AxiomResult:
    """Outcome of a check; truthy iff the axiom holds."""

    axiom: Axiom
    holds: bool
    witness: dict[str, Any] | None = field(default=None)

    def __bool__(self) -> bool:
        return self.holds


def _first_failure(axiom: Axiom, cases: Iterator[dict[str, Any] | None]) -> AxiomResult:
    for witness in cases:
        if witness is not None:
            return AxiomResult(axiom, False, witness)
    return AxiomResult(axiom, True)


def is_order_preserving(f: UtilityTable) -> AxiomResult:
    bad = find_order_violation(f)
    if bad is None:
        return AxiomResult(Axiom.ORDER_PRESERVING, True)
    x, y = bad
    return AxiomResult(Axiom.ORDER_PRESERVING, False, {"x": x, "y": y, "f(x)": f(x), "f(y)": f(y)})


# -- classical ---------------------------------------------------------------


def _median_decomposable(p: UtilityTable):
    top = p.codomain.top
    for x in p.points():
        px = p(x)
        for k in range(p.n):
            rhs = med3(p(substitute(x, k, 0)), x[k], p(substitute(x, k, top)))
            if px != rhs:
                yield {"x": x, "k": k, "lhs": px, "rhs": rhs}


def _homogeneous(p: UtilityTable, direction: str):
    lo, hi = min(p.range()), max(p.range())
    op = min if direction == "meet" else max
    for x in p.points():
        px = p(x)
        for c in range(lo, hi + 1):
            lhs = p(lattice_shift(x, c, direction))
            rhs = op(px, c)
            if lhs != rhs:
                yield {"x": x, "c": c, "lhs": lhs, "rhs": rhs}


def _range_idempotent(p: UtilityTable):
    lo, hi = min(p.range()), max(p.range())
    for c in range(lo, hi + 1):
        v = p((c,) * p.n)
        if v != c:
            yield {"c": c, "lhs": v, "rhs": c}


def _horizontal(p: UtilityTable, minitive: bool):
    dom = p.domain
    for x in p.points():
        px = p(x)
        for c in p.codomain.values():
            if minitive:
                rhs = min(p(lattice_shift(x, c, "join")), p(cut(x, c, "upper", dom)))
            else:
                rhs = max(p(lattice_shift(x, c, "meet")), p(cut(x, c, "lower", dom)))
            if px != rhs:
                yield {"x": x, "c": c, "lhs": px, "rhs": rhs}


def _pairwise(p: UtilityTable, related: Callable[[Point, Point], bool], minitive: bool):
    points = list(p.points())
    op = min if minitive else max
    for x in points:
        px = p(x)
        for y in points:
            if not related(x, y):
                continue
            lhs, rhs = p(tuple(map(op, x, y))), op(px, p(y))
            if lhs != rhs:
                yield {"x": x, "y": y, "lhs": lhs, "rhs": rhs}


def check_classical(p: UtilityTable, axiom: Axiom | str) -> AxiomResult:
    """Check a classical axiom on a table over ``L^n``."""
    axiom = Axiom.parse(axiom) if isinstance(axiom, str) and not isinstance(axiom, Axiom) else axiom
    if axiom not in CLASSICAL_AXIOMS:
        raise ValueError(f"{axiom.value} is not a classical axiom")
    if not p.is_homogeneous():
        raise ValueError("classical axioms need a table on L^n with codomain L")
    if axiom is Axiom.ORDER_PRESERVING:
        return is_order_preserving(p)
    if axiom is Axiom.MEDIAN_DECOMPOSABLE:
        cases = _median_decomposable(p)
    elif axiom is Axiom.MIN_HOMOGENEOUS:
        cases = _homogeneous(p, "meet")
    elif axiom is Axiom.MAX_HOMOGENEOUS:
        cases = _homogeneous(p, "join")
    elif axiom is Axiom.RANGE_IDEMPOTENT:
        cases = _range_idempotent(p)
    elif axiom is Axiom.HORIZONTALLY_MINITIVE:
        cases = _horizontal(p, minitive=True)
    elif axiom is Axiom.HORIZONTALLY_MAXITIVE:
        cases = _horizontal(p, minitive=False)
    elif axiom is Axiom.COMONOTONIC_MINITIVE:
        cases = _pairwise(p, comonotonic, minitive=True)
    else:
        cases = _pairwise(p, comonotonic, minitive=False)
    return _first_failure(axiom, cases)


# -- pseudo ------------------------------------------------------------------


def boundary_conditions(phi: UnaryMap) -> bool:
    """Every value lies between ``phi(bottom)`` and ``phi(top)``."""
    a, b = phi.values[0], phi.values[-1]
    lo, hi = min(a, b), max(a, b)
    return all(lo <= v <= hi for v in phi.values)


def harmonize_ranges(phis: Sequence[UnaryMap]) -> tuple[int, int]:
    """Common range interval ``[min phi_i(bottom), max phi_i(top)]``."""
    if not phis:
        raise ValueError("need at least one map")
    targets = {phi.target for phi in phis}
    if len(targets) != 1:
        raise ValueError("maps do not share a target chain")
    for i, phi in enumerate(phis):
        if not phi.is_order_preserving():
            raise ValueError(f"map {i + 1} is not order-preserving")
    return min(phi.values[0] for phi in phis), max(phi.values[-1] for phi in phis)


def preimage(phis: Sequence[UnaryMap], c: int) -> Iterator[Point]:
    """All ``d`` with ``phi_i(d_i) == c`` for every ``i``, lexicographically."""
    per_coord = [[x for x, v in enumerate(phi.values) if v == c] for phi in phis]
    return itertools.product(*per_coord)


def _check_phis(f: UtilityTable, phis: Sequence[UnaryMap]) -> None:
    if len(phis) != f.n:
        raise ValueError(f"table has {f.n} coordinates but {len(phis)} maps were given")
    for i, (phi, chain) in enumerate(zip(phis, f.domain.chains)):
        if phi.source.size != chain.size or phi.target.size != f.codomain.size:
            raise ValueError(f"map {i + 1} does not match coordinate {i + 1} of the table")


def _pseudo_median(f: UtilityTable, phis):
    tops = f.domain.top
    for x in f.points():
        fx = f(x)
        for k, phi in enumerate(phis):
            rhs = med3(f(substitute(x, k, 0)), phi(x[k]), f(substitute(x, k, tops[k])))
            if fx != rhs:
                yield {"x": x, "k": k, "lhs": fx, "rhs": rhs}


def _preimages(phis) -> list[tuple[int, list[Point]]]:
    lo, hi = harmonize_ranges(phis)
    return [(c, list(preimage(phis, c))) for c in range(lo, hi + 1)]


def _pseudo_homogeneous(f: UtilityTable, phis, direction: str):
    fibres = _preimages(phis)
    op = min if direction == "meet" else max
    for x in f.points():
        fx = f(x)
        for c, ds in fibres:
            for d in ds:
                lhs = f(tuple(map(op, x, d)))
                rhs = op(fx, c)
                if lhs != rhs:
                    yield {"x": x, "c": c, "d": d, "lhs": lhs, "rhs": rhs}


def _pseudo_horizontal(f: UtilityTable, phis, minitive: bool):
    fibres = _preimages(phis)
    dom = f.domain
    for x in f.points():
        fx = f(x)
        for c, ds in fibres:
            for d in ds:
                if minitive:
                    rhs = min(f(tuple(map(max, x, d))), f(cut(x, d, "upper", dom)))
                else:
                    rhs = max(f(tuple(map(min, x, d))), f(cut(x, d, "lower", dom)))
                if fx != rhs:
                    yield {"x": x, "c": c, "d": d, "lhs": fx, "rhs": rhs}


def _pseudo_idempotent(f: UtilityTable, phis):
    for c, ds in _preimages(phis):
        for d in ds:
            if f(d) != c:
                yield {"c": c, "d": d, "lhs": f(d), "rhs": c}


def _boundary(phis):
    for i, phi in enumerate(phis):
        if not boundary_conditions(phi):
            yield {"k": i, "map": phi.values}


def check_pseudo(f: UtilityTable, phis: Sequence[UnaryMap], axiom: Axiom | str) -> AxiomResult:
    """Check a pseudo axiom of ``f`` with respect to ``phis``.

    Homogeneity, horizontal and idempotence axioms quantify over
    ``c`` in :func:`harmonize_ranges` and ``d`` in :func:`preimage`; values of
    ``c`` with no preimage impose nothing.
    """
    axiom = Axiom.parse(axiom) if isinstance(axiom, str) and not isinstance(axiom, Axiom) else axiom
    if axiom not in PSEUDO_AXIOMS:
        raise ValueError(f"{axiom.value} is not a pseudo axiom")
    phis = list(phis)
    _check_phis(f, phis)
    if axiom is Axiom.PSEUDO_MEDIAN_DECOMPOSABLE:
        cases = _pseudo_median(f, phis)
    elif axiom is Axiom.PSEUDO_MIN_HOMOGENEOUS:
        cases = _pseudo_homogeneous(f, phis, "meet")
    elif axiom is Axiom.PSEUDO_MAX_HOMOGENEOUS:
        cases = _pseudo_homogeneous(f, phis, "join")
    elif axiom is Axiom.PSEUDO_HORIZONTALLY_MINITIVE:
        cases = _pseudo_horizontal(f, phis, minitive=True)
    elif axiom is Axiom.PSEUDO_HORIZONTALLY_MAXITIVE:
        cases = _pseudo_horizontal(f, phis, minitive=False)
    elif axiom in (Axiom.PSEUDO_COMONOTONIC_MINITIVE, Axiom.PSEUDO_COMONOTONIC_MAXITIVE):

        def related(x, y):
            return comonotonic([phi(v) for phi, v in zip(phis, x)], [phi(v) for phi, v in zip(phis, y)])

        cases = _pairwise(f, related, minitive=axiom is Axiom.PSEUDO_COMONOTONIC_MINITIVE)
    elif axiom is Axiom.PSEUDO_IDEMPOTENT:
        cases = _pseudo_idempotent(f, phis)
    else:
        cases = _boundary(phis)
    return _first_failure(axiom, cases)


def check(f: UtilityTable, axiom: Axiom | str, phis: Sequence[UnaryMap] | None = None) -> AxiomResult:
    """Dispatch to :func:`check_classical` or :func:`check_pseudo`.

    ``order-preserving`` is accepted for any table, homogeneous or not.
    """
    axiom = Axiom.parse(axiom) if not isinstance(axiom, Axiom) else axiom
    if axiom is Axiom.ORDER_PRESERVING:
        return is_order_preserving(f)
    if axiom in CLASSICAL_AXIOMS:
        return check_classical(f, axiom)
    if phis is None:
        raise ValueError(f"{axiom.value} needs one unary map per coordinate")
    return check_pseudo(f, phis, axiom)
