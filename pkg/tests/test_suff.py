import numpy as np
import pytest
from conftest import TWO_WINDOW_ROWS, table
from hypothesis import given, settings
from hypothesis import strategies as st

from sugeno_factor import (
    Chain,
    ConstantTableError,
    FailureKind,
    NotSugenoUtility,
    Policy,
    PolynomialDNF,
    ProductDomain,
    UnaryMap,
    UtilityTable,
    check_pseudo,
    classify,
    factorize,
    integral_of,
    is_sugeno,
    is_sugeno_utility,
    local_utility,
    normalize,
    random_composition,
    recompose,
    tables_equal,
)
from sugeno_factor.suff import Factorization, NormalizationRecord

HOTEL_COEFFS = {
    frozenset(): 1,
    frozenset({1}): 2,
    frozenset({2}): 2,
    frozenset({3}): 3,
    frozenset({1, 2}): 2,
    frozenset({1, 3}): 8,
    frozenset({2, 3}): 6,
    frozenset({1, 2, 3}): 8,
}


def labels_of(phi):
    return [b for _a, b in phi.labels()]


def cotuple_labels(f, k, cotuples):
    chains = [c for i, c in enumerate(f.domain.chains) if i != k]
    return {",".join(c.labels[v] for c, v in zip(chains, z)) for z in cotuples}


def test_normalize_hotel_is_identity(hotel):
    g, rec = normalize(hotel)
    assert rec.is_identity and rec.dropped == ()
    assert g == hotel


def test_normalize_drops_inessential():
    f = table([3, 2], 2, [[0, 1], [0, 1], [0, 1]])
    g, rec = normalize(f)
    assert rec.kept == (1,) and rec.dropped == (0,)
    assert g.domain.shape == (2,)
    assert rec.lift_point((1,)) == (0, 1) and rec.project_point((2, 1)) == (1,)


def test_normalize_restricts_codomain():
    f = UtilityTable(ProductDomain((Chain.numeric(3),)), Chain.numeric(8, start=1), np.array([1, 3, 6]))
    g, rec = normalize(f)
    assert rec.codomain_interval == (1, 6)
    assert g.codomain.labels == ("2", "3", "4", "5", "6", "7")
    assert g.values.tolist() == [0, 2, 5]


def test_normalize_is_idempotent():
    rng = np.random.default_rng(5)
    for _ in range(50):
        f, _q, _phis = random_composition(rng)
        if f.is_constant():
            continue
        g, _ = normalize(f)
        h, rec = normalize(g)
        assert rec.is_identity and h == g


def test_normalize_constant():
    with pytest.raises(ConstantTableError, match="constant table"):
        normalize(table([2, 2], 3, [[1, 1], [1, 1]]))


def test_classify_hotel_service(hotel):
    dom = hotel.domain
    expected = {
        "*": (set(), set(), {"-,n", "-,y", "0,y", "+,y"}, None, None, "1"),
        "**": (set(), {"-,n"}, {"-,y", "0,y", "+,y"}, None, "2", "3"),
        "***": ({"-,y", "0,y", "+,y"}, {"-,n"}, set(), "7", "2", None),
        "****": (set(), {"-,n", "-,y", "0,y", "+,y"}, set(), None, "8", None),
    }
    lab = hotel.codomain.labels
    for label, (w_set, l_set, u_set, w, l, u) in expected.items():
        r = classify(hotel, 0, dom.chains[0].index(label))
        assert cotuple_labels(hotel, 0, r.window) == w_set
        assert cotuple_labels(hotel, 0, r.lower) == l_set
        assert cotuple_labels(hotel, 0, r.upper) == u_set
        assert cotuple_labels(hotel, 0, r.equal) == {"0,n", "+,n"}
        got = tuple(None if v is None else lab[v] for v in (r.w, r.l, r.u))
        assert got == (w, l, u), label


def test_classify_hotel_examples(hotel):
    lab = hotel.codomain.labels
    r = classify(hotel, 1, 1)
    assert (lab[r.w], lab[r.l], r.u) == ("5", "2", None)
    r = classify(hotel, 2, 0)
    assert len(r.upper) == 12 and not (r.window or r.lower or r.equal)
    assert lab[r.u] == "1"


def test_classify_two_windows():
    f = table([3, 2], 4, TWO_WINDOW_ROWS)
    with pytest.raises(NotSugenoUtility) as info:
        classify(f, 0, 1)
    reason = info.value.reason
    assert reason.kind is FailureKind.MULTIPLE_WINDOW_VALUES
    assert reason.points == {"first": (1, 0), "second": (1, 1)}
    assert set(reason.values.values()) == {1, 2}


def test_classify_inconsistent_bounds():
    # x1 = 1 is pinned high (f = 2 = top on the first row) but low on the second
    f = table([3, 2], 4, [[0, 0], [2, 0], [2, 3]])
    with pytest.raises(NotSugenoUtility) as info:
        classify(f, 0, 1)
    reason = info.value.reason
    assert reason.kind is FailureKind.INCONSISTENT_BOUNDS
    assert reason.values == {"l": 2, "u": 0}


def test_classify_requires_monotone_table():
    with pytest.raises(ValueError):
        classify(table([2, 2], 2, [[1, 0], [0, 0]]), 0, 0)
    with pytest.raises(IndexError):
        classify(table([2, 2], 2, [[0, 0], [0, 1]]), 2, 0)


def test_local_utility_hotel(hotel):
    assert labels_of(local_utility(hotel, 0, "lower")) == ["1", "2", "7", "8"]
    assert labels_of(local_utility(hotel, 0, "upper")) == ["1", "3", "7", "8"]
    assert labels_of(local_utility(hotel, 1)) == ["1", "5", "6"]
    assert labels_of(local_utility(hotel, 2)) == ["1", "8"]


def test_local_utility_inessential_variable():
    f = table([2, 2], 2, [[0, 1], [0, 1]])
    with pytest.raises(NotSugenoUtility) as info:
        local_utility(f, 0)
    assert info.value.reason.kind is FailureKind.INESSENTIAL_VARIABLE


def test_integral_of_hotel(hotel):
    q = integral_of(hotel)
    assert {s: hotel.codomain.labels[c] for s, c in q.as_dict().items()} == {s: str(v) for s, v in HOTEL_COEFFS.items()}


def test_integral_of_own_table_and_projection():
    chain = Chain.numeric(4)
    q = PolynomialDNF(2, chain, (0, 1, 2, 3))
    f = UtilityTable.from_function(ProductDomain.power(chain, 2), chain, q)
    assert integral_of(f) == q
    proj = UtilityTable.from_function(ProductDomain.power(chain, 2), chain, lambda x: x[1])
    assert integral_of(proj).coeffs == (0, 0, 3, 3)


def test_factorize_hotel(hotel, hotel_phis):
    fact = factorize(hotel)
    assert fact.policy is Policy.LOWER
    assert [p.values for p in fact.phis] == [p.values for p in hotel_phis]
    assert tables_equal(recompose(fact), hotel) == (True, None)
    assert all(fact(x) == hotel(x) for x in hotel.points())


def test_factorize_hotel_upper(hotel):
    fact = factorize(hotel, Policy.UPPER)
    assert labels_of(fact.phis[0]) == ["1", "3", "7", "8"]
    assert recompose(fact, hotel.domain) == hotel


def test_factorize_two_windows():
    f = table([3, 2], 4, TWO_WINDOW_ROWS)
    with pytest.raises(NotSugenoUtility) as info:
        factorize(f)
    assert info.value.reason.kind is FailureKind.MULTIPLE_WINDOW_VALUES
    assert (info.value.reason.coordinate, info.value.reason.value) == (0, 1)
    assert not is_sugeno_utility(f)


def test_factorize_not_order_preserving():
    f = table([2, 2], 3, [[0, 2], [1, 0]])
    with pytest.raises(NotSugenoUtility) as info:
        factorize(f)
    reason = info.value.reason
    assert reason.kind is FailureKind.NOT_ORDER_PRESERVING
    x, y = reason.points["x"], reason.points["y"]
    assert f(x) > f(y)


def test_factorize_constant():
    f = table([2, 2], 3, [[2, 2], [2, 2]])
    with pytest.raises(ConstantTableError):
        factorize(f)
    assert is_sugeno_utility(f)


def test_failure_witness_is_lifted_to_original_table():
    # coordinate 1 is inessential and the codomain is 0..5 with values in 1..4
    rows = [[[v + 1, v + 1] for v in row] for row in TWO_WINDOW_ROWS]
    f = table([3, 2, 2], 6, rows)
    with pytest.raises(NotSugenoUtility) as info:
        factorize(f)
    reason = info.value.reason
    assert reason.points == {"first": (1, 0, 0), "second": (1, 1, 0)}
    assert {f(p) for p in reason.points.values()} == set(reason.values.values()) == {2, 3}


def test_factorize_after_normalization():
    # depends only on the last coordinate, codomain has slack above and below
    f = table([3, 2], 5, [[1, 3], [1, 3], [1, 3]])
    fact = factorize(f)
    assert fact.record.dropped == (0,)
    assert fact.record.codomain_interval == (1, 3)
    assert recompose(fact) == f


def test_recompose_projection():
    chain = Chain.numeric(3)
    dom = ProductDomain.power(chain, 2)
    q = PolynomialDNF(2, chain, (0, 2, 0, 2))
    rec = NormalizationRecord(dom, chain, (0, 1), (), (0, 2))
    fact = Factorization(q, (UnaryMap.identity(chain),) * 2, rec)
    g = recompose(fact)
    assert all(g(x) == x[0] for x in dom.points())
    with pytest.raises(ValueError):
        recompose(fact, ProductDomain.power(chain, 3))


def _check_soundness(f, fact):
    assert recompose(fact) == f
    assert is_sugeno(fact.q)
    assert all(phi.is_order_preserving() for phi in fact.phis)
    g, rec = normalize(f)
    assert check_pseudo(g, fact.phis, "pseudo-median-decomposable")
    for k, phi in enumerate(fact.phis):
        for xk in g.domain.chains[k].values():
            r = classify(g, k, xk)
            v = phi(xk)
            assert r.w is None or v == r.w
            assert r.l is None or v >= r.l
            assert r.u is None or v <= r.u


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 2**32 - 1), st.sampled_from(list(Policy)))
def test_compositions_factorize(seed, policy):
    f, _q, _phis = random_composition(np.random.default_rng(seed))
    if f.is_constant():
        return
    _check_soundness(f, factorize(f, policy))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_tables_soundness(seed):
    rng = np.random.default_rng(seed)
    shape = tuple(int(s) for s in rng.integers(2, 4, size=int(rng.integers(1, 4))))
    # cumulative maxima make the table order-preserving
    vals = rng.integers(0, 4, size=shape)
    for axis in range(len(shape)):
        vals = np.maximum.accumulate(vals, axis=axis)
    f = table(shape, 4, vals)
    if f.is_constant():
        return
    try:
        lower = factorize(f, "lower")
    except NotSugenoUtility as exc:
        assert exc.reason.kind in (FailureKind.MULTIPLE_WINDOW_VALUES, FailureKind.INCONSISTENT_BOUNDS)
        with pytest.raises(NotSugenoUtility):
            factorize(f, "upper")
        return
    _check_soundness(f, lower)
    _check_soundness(f, factorize(f, "upper"))
