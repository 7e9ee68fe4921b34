from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from rslist.errors import DivisionByZero, FieldMismatch, ZeroPolynomial
from rslist.field import GF
from rslist.poly import BiPoly, UniPoly, binom_mod, univariate_roots, y_roots

F2, F3, F5 = GF(2), GF(3), GF(5)


def P(F, *cs):
    return UniPoly(F, cs)


def test_eval_examples():
    assert P(F5, 1, 2).eval(3) == 2
    assert UniPoly(F5).eval(4) == 0
    assert P(F5, 0, 0, 0, 0, 1).eval(2) == 1


def test_eval_rejects_foreign_element():
    with pytest.raises(FieldMismatch):
        P(F5, 1, 2).eval(7)


def test_quotrem_char2():
    q, r = divmod(P(F2, 1, 0, 1), P(F2, 1, 1))
    assert q == P(F2, 1, 1) and r.is_zero()


def test_division_by_zero_poly():
    with pytest.raises(DivisionByZero):
        divmod(P(F5, 1), UniPoly(F5))


def test_compose_identity_substitution():
    Q = BiPoly(F5, {(0, 1): 1, (1, 0): 4})  # Y - X
    assert Q.compose_y(P(F5, 0, 1)).is_zero()


def test_shift_example():
    Q = BiPoly(F3, {(0, 2): 1})
    assert Q.shift(0, 1) == BiPoly(F3, {(0, 2): 1, (0, 1): 2, (0, 0): 1})


def test_weighted_degree_examples():
    assert BiPoly(F5, {(2, 3): 1}).weighted_degree(1, 2) == 8
    assert BiPoly(F5, {(0, 0): 1}).weighted_degree(3, 7) == 0
    assert BiPoly(F5, {(3, 0): 1, (1, 2): 1}).weighted_degree(1, 2) == 5
    with pytest.raises(ZeroPolynomial):
        BiPoly(F5).weighted_degree(1, 1)


def test_hasse_examples():
    Q = BiPoly.y_minus(P(F3, 1)) ** 2
    assert Q.hasse(0, 1, 0, 1) == 0
    assert Q.has_multiplicity(0, 1, 2)
    R = BiPoly(F5, {(3, 1): 2, (0, 2): 1, (1, 0): 4})
    for a, b in product(range(5), repeat=2):
        assert R.hasse(a, b, 0, 0) == R.eval(a, b)
    X5 = BiPoly(F5, {(5, 0): 1})
    for a in range(5):
        assert X5.hasse(a, 0, 1, 0) == 0


def test_multiplicity_examples():
    p = P(F5, 1, 2)
    L = BiPoly.y_minus(p)
    for a in range(5):
        assert L.has_multiplicity(a, p(a), 1)
        assert (L * L).has_multiplicity(a, p(a), 2)
        assert not L.has_multiplicity(a, p(a), 2)
    assert not BiPoly(F5, {(0, 1): 1}).has_multiplicity(0, 1, 1)


def test_y_roots_examples():
    Q = BiPoly.y_minus(P(F5, 1, 2)) * BiPoly.y_minus(P(F5, 0, 3))
    assert y_roots(Q, 2) == [P(F5, 0, 3), P(F5, 1, 2)]
    assert y_roots(BiPoly(F2, {(0, 2): 1, (0, 0): 1}), 1) == [P(F2, 1)]
    assert y_roots(BiPoly(F5, {(1, 0): 1}), 3) == []


def test_y_roots_zero_polynomial():
    with pytest.raises(ZeroPolynomial):
        y_roots(BiPoly(F5), 2)
    with pytest.raises(ZeroPolynomial):
        univariate_roots(UniPoly(F5))


def test_binom_mod_lucas():
    assert binom_mod(5, 1, F5) == 0
    assert binom_mod(6, 2, F5) == 0  # C(6,2)=15
    assert binom_mod(7, 2, F5) == 1  # 21
    assert binom_mod(2, 3, F5) == 0


def test_scale_var():
    p = P(F5, 1, 2, 3)
    for w, a in product(range(5), repeat=2):
        assert p.scale_var(w)(a) == p(F5.mul(w, a))


def test_compose_x_matches_eval():
    Q = BiPoly(F5, {(2, 1): 3, (0, 2): 1, (1, 0): 2})
    g = P(F5, 4, 1)
    R = Q.compose_x(g)
    for a, b in product(range(5), repeat=2):
        assert R.eval(a, b) == Q.eval(g(a), b)


# --- random generators -----------------------------------------------------

FIELDS = [GF(2), GF(3), GF(5), GF(7), GF(2, 2), GF(2, 3), GF(3, 2)]


@st.composite
def field_and_uni(draw, max_deg=6, count=1):
    F = draw(st.sampled_from(FIELDS))
    polys = [UniPoly(F, draw(st.lists(st.integers(0, F.q - 1), max_size=max_deg + 1)))
             for _ in range(count)]
    return (F, *polys)


def _bipoly(draw, F, dx=3, dy=3):
    cs = draw(st.lists(st.integers(0, F.q - 1), min_size=(dx + 1) * (dy + 1),
                       max_size=(dx + 1) * (dy + 1)))
    return BiPoly(F, {(i, j): cs[i * (dy + 1) + j] for i in range(dx + 1) for j in range(dy + 1)})


@settings(max_examples=300, deadline=None)
@given(field_and_uni(count=2))
def test_quotrem_identity(args):
    F, a, b = args
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


@settings(max_examples=200, deadline=None)
@given(field_and_uni(count=3))
def test_ring_axioms(args):
    F, a, b, c = args
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a - b) + b == a
    for x in range(min(F.q, 4)):
        assert (a * b)(x) == F.mul(a(x), b(x))
        assert a.compose(b)(x) == a(b(x))


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_multiplicity_adds_under_vanishing_factor(data):
    F = data.draw(st.sampled_from(FIELDS))
    Q = _bipoly(data.draw, F, 2, 2)
    p = UniPoly(F, data.draw(st.lists(st.integers(0, F.q - 1), max_size=3)))
    a = data.draw(st.integers(0, F.q - 1))
    b = p(a)
    # force some multiplicity by multiplying through by powers of Y - p(X)
    Q = Q * BiPoly.y_minus(p) ** data.draw(st.integers(0, 2))
    m = data.draw(st.integers(1, 3))
    if Q.has_multiplicity(a, b, m):
        assert (Q * BiPoly.y_minus(p)).has_multiplicity(a, b, m + 1)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_hasse_is_linear_and_matches_shift(data):
    F = data.draw(st.sampled_from(FIELDS))
    Q1, Q2 = _bipoly(data.draw, F), _bipoly(data.draw, F)
    a, b = data.draw(st.integers(0, F.q - 1)), data.draw(st.integers(0, F.q - 1))
    i, j = data.draw(st.integers(0, 4)), data.draw(st.integers(0, 4))
    assert (Q1 + Q2).hasse(a, b, i, j) == F.add(Q1.hasse(a, b, i, j), Q2.hasse(a, b, i, j))
    assert Q1.hasse(a, b, i, j) == Q1.shift(a, b).terms.get((i, j), 0)


@settings(max_examples=150, deadline=None)
@given(st.data())
def test_divmod_y_minus(data):
    F = data.draw(st.sampled_from(FIELDS))
    Q = _bipoly(data.draw, F)
    p = UniPoly(F, data.draw(st.lists(st.integers(0, F.q - 1), max_size=3)))
    quot, rem = Q.divmod_y_minus(p)
    assert quot * BiPoly.y_minus(p) + BiPoly.from_uni(rem) == Q
    assert rem == Q.compose_y(p)


def _brute_roots(Q, k):
    F = Q.field
    out = []
    for cs in product(range(F.q), repeat=k):
        if Q.compose_y(UniPoly(F, cs)).is_zero():
            out.append(cs)
    return out


def _padded(polys, k):
    return [p.coeffs + (0,) * (k - len(p.coeffs)) for p in polys]


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_y_roots_matches_brute_force_random(data):
    F = data.draw(st.sampled_from([GF(2), GF(3), GF(5), GF(2, 2), GF(7)]))
    k = data.draw(st.integers(1, 3))
    Q = _bipoly(data.draw, F, 3, 3)
    if Q.is_zero():
        return
    assert _padded(y_roots(Q, k), k) == _brute_roots(Q, k)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_y_roots_matches_brute_force_planted(data):
    # random Q rarely has roots, so plant factors Y - p_i(X)
    F = data.draw(st.sampled_from([GF(2), GF(3), GF(5), GF(2, 2), GF(2, 3), GF(3, 2)]))
    k = data.draw(st.integers(1, 3))
    Q = _bipoly(data.draw, F, 2, 1)
    if Q.is_zero():
        Q = BiPoly(F, {(0, 0): 1})
    for _ in range(data.draw(st.integers(1, 3))):
        p = UniPoly(F, data.draw(st.lists(st.integers(0, F.q - 1), min_size=k, max_size=k)))
        Q = Q * BiPoly.y_minus(p)
    if F.q ** k <= 10 ** 5:
        assert _padded(y_roots(Q, k), k) == _brute_roots(Q, k)
