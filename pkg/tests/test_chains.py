import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sugeno_factor import Chain, ProductDomain, characteristic_vector, comonotonic, convex_hull, cut, med3, substitute
from sugeno_factor.chains import lattice_shift, members

L8 = Chain.numeric(8, start=1)


def test_chain_basics():
    c = Chain(("lo", "mid", "hi"))
    assert (c.bottom, c.top, c.size) == (0, 2, 3)
    assert c.index("mid") == 1 and c.label(2) == "hi"
    assert c.dual().labels == ("hi", "mid", "lo")
    assert c.interval(1, 2).labels == ("mid", "hi")
    with pytest.raises(KeyError):
        c.index("nope")
    with pytest.raises(ValueError):
        c.check(3)


@pytest.mark.parametrize("labels", [(), ("a", "a"), ("a", "")])
def test_chain_rejects_bad_labels(labels):
    with pytest.raises(ValueError):
        Chain(labels)


def test_product_domain_order(hotel):
    dom = hotel.domain
    pts = list(dom.points())
    assert len(pts) == dom.size == 24
    assert pts == sorted(pts)
    assert dom.format_point(dom.parse_point(["***", "0", "y"])) == "***,0,y"
    assert dom.drop(1).shape == (4, 2)


def test_med3_examples():
    assert med3(L8.index("1"), L8.index("5"), L8.index("8")) == L8.index("5")
    for a, b in itertools.product(range(4), repeat=2):
        assert med3(a, a, b) == a
    # below the window: the truncated identity
    assert med3(2, 0, 5) == 2


def test_med3_symmetric_and_idempotent():
    for size in range(1, 6):
        for a, b, c in itertools.product(range(size), repeat=3):
            m = sorted((a, b, c))[1]
            assert {med3(*p) for p in itertools.permutations((a, b, c))} == {m}
        for a in range(size):
            assert med3(a, a, a) == a


def test_convex_hull():
    assert convex_hull([3, 1]) == (1, 3)
    assert convex_hull([4]) == (4, 4)
    assert convex_hull([L8.index(v) for v in "273"]) == (L8.index("2"), L8.index("7"))
    with pytest.raises(ValueError, match="empty hull"):
        convex_hull([])


def test_substitute(hotel):
    dom = hotel.domain
    x = dom.parse_point(["***", "0", "y"])
    assert dom.format_point(substitute(x, 0, 0)) == "*,0,y"
    assert substitute(x, 1, x[1]) == x
    assert dom.format_point(substitute(dom.parse_point(["*", "-", "n"]), 2, 1)) == "*,-,y"
    with pytest.raises(IndexError):
        substitute(x, 3, 0)


def test_substitute_round_trip():
    dom = ProductDomain((Chain.numeric(3), Chain.numeric(2), Chain.numeric(3)))
    for x in dom.points():
        for k, chain in enumerate(dom.chains):
            for c in chain.values():
                assert substitute(substitute(x, k, c), k, x[k]) == x


def test_lattice_shift():
    dom = ProductDomain.power(L8, 2)
    assert lattice_shift((0, 7), 4, "meet", dom) == (0, 4)
    x = (2, 5)
    assert lattice_shift(x, 0, "join", dom) == x
    assert lattice_shift(x, 7, "meet", dom) == x
    with pytest.raises(ValueError):
        lattice_shift((0, 0), 1, "meet", ProductDomain((L8, Chain.numeric(2))))


def test_cut_scalar():
    dom = ProductDomain.power(L8, 3)
    x = (0, 4, 7)
    assert cut(x, 4, "lower", dom) == (0, 0, 7)
    assert cut(x, 4, "upper", dom) == (0, 7, 7)


def test_cut_vector(hotel):
    dom = hotel.domain
    for x in dom.points():
        # only coordinates already at bottom satisfy x_i <= 0
        assert cut(x, dom.bottom, "lower", dom) == x
    assert cut((1, 2, 0), (1, 1, 1), "upper", dom) == (3, 2, 0)
    with pytest.raises(ValueError):
        cut((0, 0, 0), 1, "lower", dom)
    with pytest.raises(ValueError):
        cut((0, 0, 0), (0, 0), "lower", dom)


def test_characteristic_vector(hotel):
    dom = hotel.domain
    assert dom.format_point(characteristic_vector(0, dom)) == "*,-,n"
    assert dom.format_point(characteristic_vector(0b101, dom)) == "****,-,y"
    assert characteristic_vector(0b111, dom) == dom.top
    assert members(0b101, 3) == (0, 2)
    with pytest.raises(ValueError):
        characteristic_vector(0b1000, dom)


def test_comonotonic_examples():
    assert not comonotonic((0, 1), (1, 0))
    assert comonotonic((2, 0, 1), (1, 1, 1))
    assert comonotonic((1, 2, 2), (0, 0, 1))


def _comonotonic_by_permutation(x, y):
    for perm in itertools.permutations(range(len(x))):
        xs = [x[i] for i in perm]
        ys = [y[i] for i in perm]
        if xs == sorted(xs) and ys == sorted(ys):
            return True
    return False


def test_comonotonic_matches_permutation_definition():
    for n in (1, 2, 3):
        pts = list(itertools.product(range(3), repeat=n))
        for x in pts:
            assert comonotonic(x, x)
            for y in pts:
                assert comonotonic(x, y) == comonotonic(y, x) == _comonotonic_by_permutation(x, y)


points3 = st.lists(st.integers(0, 4), min_size=3, max_size=3).map(tuple)


@given(points3, st.integers(0, 4), points3)
def test_operations_stay_in_range(x, c, d):
    dom = ProductDomain.power(Chain.numeric(5), 3)
    for y in (
        lattice_shift(x, c, "meet"),
        lattice_shift(x, c, "join"),
        cut(x, c, "lower", dom),
        cut(x, d, "upper", dom),
        substitute(x, 1, c),
    ):
        dom.check(y)
