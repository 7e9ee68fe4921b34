from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from rslist.channel import hamming
from rslist.errors import InequalityViolated, InvalidFoldParams, InvalidRate, InvalidSpec, ThresholdTooLow
from rslist.field import GF
from rslist.frs import (
    FRSSpec,
    bundle_agreements,
    capacity_params,
    dilute,
    dilute_spec,
    dilute_word,
    diluted_rate,
    frs_decode_capacity,
    frs_decode_overlapping,
    frs_encode,
    frs_interpolate,
    is_non_overlapping,
    overlap_threshold,
    smallest_prime_power_at_least,
)
from rslist.oracle import brute_force_frs_list
from rslist.rs import RSSpec, rs_encode

F5 = GF(5)
FOLDED = FRSSpec(F5, 2, 2, 2, (1, 4))
OVERLAP = FRSSpec(F5, 2, 2, 2, (1, 2, 3, 4))
F13_TRIPLE = FRSSpec(GF(13), 3, 2, 2, (1, 8, 12, 5))


def test_encode_examples():
    assert frs_encode(FOLDED, (1, 1)) == ((2, 3), (0, 4))
    assert frs_encode(FOLDED, (0, 0)) == ((0, 0), (0, 0))


def test_non_overlapping_examples():
    assert is_non_overlapping(FOLDED)
    assert not is_non_overlapping(FRSSpec(F5, 2, 2, 2, (1, 2)))
    assert is_non_overlapping(FRSSpec(F5, 1, 2, 2, (0, 1, 2)))
    assert is_non_overlapping(F13_TRIPLE)


def test_spec_validation():
    with pytest.raises(InvalidSpec):
        FRSSpec(F5, 2, 2, 4, (1, 4))  # 4 has order 2
    with pytest.raises(InvalidSpec):
        FRSSpec(F5, 2, 2, 2, (0, 1))
    with pytest.raises(InvalidSpec):
        FRSSpec(GF(2), 1, 1, 1, (1,))


def test_dilution_examples():
    assert dilute_word(((1, 2, 3),), 3, 2) == ((1, 2), (2, 3))
    w = frs_encode(FOLDED, (1, 1))
    assert dilute_word(w, 2, 2) == w
    spec1, w1 = dilute(FOLDED, w, 1)
    assert w1 == ((2,), (3,), (0,), (4,))
    assert spec1.S == (1, 2, 4, 3) and spec1.s == 1


def test_dilution_rejects_bad_params():
    with pytest.raises(InvalidFoldParams):
        dilute_word(((1, 2),), 2, 3)
    with pytest.raises(InvalidFoldParams):
        dilute_spec(OVERLAP, 1)


def test_diluted_rate():
    spec2 = dilute_spec(F13_TRIPLE, 2)
    assert spec2.rate == diluted_rate(F13_TRIPLE.rate, 3, 2) == Fraction(2, 16)


def test_s1_matches_rs():
    F = GF(7)
    S = (1, 2, 3, 4, 5, 6)
    frs = FRSSpec(F, 1, 3, 3, S)
    rs = RSSpec(F, 3, S)
    for m in product(range(7), repeat=3):
        assert tuple(b[0] for b in frs_encode(frs, m)) == rs_encode(rs, m)


def test_dilution_maps_codewords_to_codewords():
    for s_prime in (1, 2, 3):
        spec2 = dilute_spec(F13_TRIPLE, s_prime)
        for m in product(range(13), repeat=2):
            assert dilute_word(frs_encode(F13_TRIPLE, m), 3, s_prime) == frs_encode(spec2, m)


def test_dilution_distance_monotone():
    rng = np.random.default_rng(5)
    for _ in range(500):
        x = rng.integers(0, 13, size=(4, 3))
        y = x.copy()
        flips = rng.random(size=x.shape) < 0.3
        y[flips] = rng.integers(0, 13, size=flips.sum())
        xt, yt = tuple(map(tuple, x.tolist())), tuple(map(tuple, y.tolist()))
        for s_prime in (1, 2, 3):
            assert hamming(dilute_word(xt, 3, s_prime), dilute_word(yt, 3, s_prime)) <= hamming(xt, yt)


def test_overlapping_example():
    cw = frs_encode(OVERLAP, (1, 1))
    r = list(cw)
    r[2] = (0, 0)
    assert overlap_threshold(4, 2, 2) == 3
    out = frs_decode_overlapping(OVERLAP, r, 3)
    assert (1, 1) in out
    assert out.candidates == brute_force_frs_list(OVERLAP, r, 3).candidates
    assert frs_decode_overlapping(OVERLAP, cw, 4).messages == [(1, 1)]


def test_overlapping_threshold_guard():
    with pytest.raises(ThresholdTooLow):
        frs_decode_overlapping(OVERLAP, frs_encode(OVERLAP, (1, 1)), 2)


def test_interpolant_vanishes_on_received_windows():
    r = list(frs_encode(OVERLAP, (3, 2)))
    r[1] = (4, 4)
    Q = frs_interpolate(OVERLAP, r)
    assert any(not a.is_zero() for a in Q.A)
    for x, b in zip(OVERLAP.S, r):
        assert Q.eval(x, b) == 0


def test_overlapping_oracle_equivalence_random():
    F = GF(7)
    spec = FRSSpec(F, 2, 2, 3, (1, 2, 3, 4, 5, 6))
    t = overlap_threshold(6, 2, 2)
    rng = np.random.default_rng(9)
    for _ in range(200):
        m = tuple(int(v) for v in rng.integers(0, 7, size=2))
        r = [list(b) for b in frs_encode(spec, m)]
        for i in rng.choice(6, size=int(rng.integers(0, 7 - t + 1)), replace=False):
            r[i] = [int(v) for v in rng.integers(0, 7, size=2)]
        got = frs_decode_overlapping(spec, r, t)
        assert got.candidates == brute_force_frs_list(spec, r, t).candidates
        assert got.solution_dim is None or got.solution_dim <= spec.s


@pytest.mark.parametrize("eps,R,n,expect", [
    (Fraction(1, 2), Fraction(1, 4), 10, (3, 2, 31, 8)),
    (Fraction(1, 3), Fraction(1, 4), 4, (8, 3, 37, 8)),
])
def test_capacity_params(eps, R, n, expect):
    cp = capacity_params(eps, R, n)
    assert (cp.s, cp.s_prime, cp.q, cp.k) == expect
    F = cp.field
    assert cp.S == tuple(F.pow(cp.omega, cp.s * j) for j in range(n))
    assert is_non_overlapping(cp.spec())


def test_capacity_params_rejects():
    with pytest.raises(InvalidRate):
        capacity_params(Fraction(1, 2), Fraction(1, 2), 10)
    with pytest.raises(InvalidRate):
        capacity_params(0, Fraction(1, 4), 10)


def test_smallest_prime_power():
    assert smallest_prime_power_at_least(31) == 31
    assert smallest_prime_power_at_least(24) == 25
    assert smallest_prime_power_at_least(122) == 125


def _capacity_spec():
    return capacity_params(Fraction(1, 2), Fraction(1, 4), 10).spec()


def test_capacity_decode_examples():
    spec = _capacity_spec()
    msg = tuple(range(1, 9))
    cw = frs_encode(spec, msg)
    r = list(cw)
    r[0] = (0, 0, 0)
    r[7] = (1, 2, 3)
    out = frs_decode_capacity(spec, 2, r, Fraction(1, 5))
    assert msg in out
    assert out.info["diluted_spec"].n == 20
    assert out.info["diluted_t"] == 16
    assert frs_decode_capacity(spec, 2, cw, 0).messages == [msg]


def test_capacity_guard():
    spec = _capacity_spec()
    cw = frs_encode(spec, (0,) * 8)
    with pytest.raises(InequalityViolated):
        frs_decode_capacity(spec, 2, cw, Fraction(3, 10))


def test_bundle_agreements():
    assert bundle_agreements(((2, 3), (0, 4)), ((2, 3), (0, 0))) == 1
