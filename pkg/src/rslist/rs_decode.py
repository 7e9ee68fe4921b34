"""Reed-Solomon decoders built on bivariate interpolation.

All list decoders share one shape: interpolate a nonzero Q(X, Y) through
the received points (possibly with multiplicity), pull out the factors
Y - p(X) with deg p < k, and keep the p that agree with the received word
in at least t positions.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

import numpy as np

from .errors import InternalContradiction, ThresholdTooLow
from .field import GF
from .linalg import nullspace
from .outcome import DecodeOutcome
from .poly import BiPoly, UniPoly, binom_mod, y_roots
from .rs import RSSpec, agreements, check_word, rs_encode

ALGORITHMS = ("bw", "basic", "weighted", "gs")


def ceil_sqrt(x: int) -> int:
    r = isqrt(x)
    return r if r * r == x else r + 1


@dataclass(frozen=True)
class InterpolationPlan:
    monomials: tuple[tuple[int, int], ...]
    multiplicity: int
    weighted_bound: int
    y_weight: int

    @property
    def constraints_per_point(self) -> int:
        return comb(self.multiplicity + 1, 2)


def y_weight(k: int) -> int:
    # with k = 1 the (1, 0) weighting admits unboundedly many monomials
    return max(k - 1, 1)


def _monomials_up_to(D: int, wy: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(D // wy + 1) for i in range(D - j * wy + 1)]


def choose_plan(n: int, k: int, m: int) -> InterpolationPlan:
    """Smallest (1, k-1)-weighted degree D admitting more monomials than
    the n * C(m+1, 2) vanishing constraints."""
    if not 1 <= k <= n or m < 1:
        raise ValueError(f"need 1 <= k <= n and m >= 1, got n={n}, k={k}, m={m}")
    wy = y_weight(k)
    need = n * comb(m + 1, 2)
    D = 0
    while True:
        count = sum(D - j * wy + 1 for j in range(D // wy + 1))
        if count > need:
            break
        D += 1
    assert D <= ceil_sqrt(m * (m + 1) * k * n), (n, k, m, D)
    return InterpolationPlan(tuple(_monomials_up_to(D, wy)), m, D, wy)


def box_plan(n: int, k: int) -> InterpolationPlan:
    """deg_X, deg_Y <= ceil(sqrt(n)) as in the basic decoder."""
    c = ceil_sqrt(n)
    mons = tuple((i, j) for j in range(c + 1) for i in range(c + 1))
    return InterpolationPlan(mons, 1, c + (k - 1) * c, y_weight(k))


def _power_table(F: GF, pts: np.ndarray, top: int) -> np.ndarray:
    P = np.ones((pts.shape[0], top + 1), dtype=np.int64)
    for e in range(1, top + 1):
        P[:, e] = F.vmul(P[:, e - 1], pts)
    return P


def constraint_matrix(F: GF, xs, ys, monomials, m: int) -> np.ndarray:
    """Rows: for each point (a, b) and each u + v < m, the linear form
    giving the Hasse coefficient of X^u Y^v in Q(X + a, Y + b)."""
    xs = np.asarray(xs, dtype=np.int64)
    ys = np.asarray(ys, dtype=np.int64)
    n = xs.shape[0]
    PX = _power_table(F, xs, max(i for i, _ in monomials))
    PY = _power_table(F, ys, max(j for _, j in monomials))
    shifts = [(u, d - u) for d in range(m) for u in range(d + 1)]
    M = np.zeros((n * len(shifts), len(monomials)), dtype=np.int64)
    for block, (u, v) in enumerate(shifts):
        rows = slice(block * n, (block + 1) * n)
        for col, (i, j) in enumerate(monomials):
            if i < u or j < v:
                continue
            w = binom_mod(i, u, F) * binom_mod(j, v, F) % F.p
            if w:
                M[rows, col] = F.vmul(F.vmul(PX[:, i - u], PY[:, j - v]), w)
    return M


def interpolate(spec: RSSpec, r, plan: InterpolationPlan) -> BiPoly:
    """Nonzero Q on plan.monomials with a zero of multiplicity plan.multiplicity
    at every (a, r(a)); the first nullspace basis vector is used."""
    r = check_word(spec, r)
    F = spec.field
    M = constraint_matrix(F, spec.S, r, plan.monomials, plan.multiplicity)
    basis = nullspace(F, M)
    if not basis:
        raise InternalContradiction(
            f"no interpolating polynomial: {M.shape[0]} constraints, {M.shape[1]} unknowns")
    return BiPoly(F, dict(zip(plan.monomials, basis[0])))


def _pad(p: UniPoly, k: int) -> tuple[int, ...]:
    return p.coeffs + (0,) * (k - len(p.coeffs))


def _filtered(spec: RSSpec, r, polys, t: int, **info) -> DecodeOutcome:
    pairs = []
    for p in polys:
        msg = _pad(p, spec.k)
        a = agreements(rs_encode(spec, msg), r)
        if a >= t:
            pairs.append((msg, a))
    return DecodeOutcome.build(pairs, info=info)


def unique_radius(n: int, k: int) -> int:
    return (n - k) // 2


def decode_unique_bw(spec: RSSpec, r):
    """Berlekamp-Welch: Q = A(X) Y + B(X) with deg A <= e, deg B <= n - e - 1
    where e = floor((n - k)/2). Returns the message, or None if no codeword
    lies within e errors."""
    r = check_word(spec, r)
    n, k, F = spec.n, spec.k, spec.field
    e = unique_radius(n, k)
    mons = tuple([(i, 0) for i in range(n - e)] + [(i, 1) for i in range(e + 1)])
    plan = InterpolationPlan(mons, 1, n - e - 1, y_weight(k))
    Q = interpolate(spec, r, plan)
    B, A = (Q.y_coeffs() + [UniPoly(F)] * 2)[:2]
    if A.is_zero():
        return None
    p, rem = divmod(-B, A)
    if not rem.is_zero() or p.degree >= k:
        return None
    msg = _pad(p, k)
    if agreements(rs_encode(spec, msg), r) < n - e:
        return None
    return msg


def basic_threshold(n: int, k: int) -> int:
    """Smallest t with t > k * ceil(sqrt(n))."""
    return k * ceil_sqrt(n) + 1


def decode_list_basic(spec: RSSpec, r, t: int, force: bool = False) -> DecodeOutcome:
    r = check_word(spec, r)
    if t < basic_threshold(spec.n, spec.k) and not force:
        raise ThresholdTooLow(
            f"basic decoder needs t > k*ceil(sqrt(n)) = {basic_threshold(spec.n, spec.k) - 1}, got t={t}")
    plan = box_plan(spec.n, spec.k)
    Q = interpolate(spec, r, plan)
    return _filtered(spec, r, y_roots(Q, spec.k), t, Q=Q, plan=plan)


def weighted_threshold(n: int, k: int) -> int:
    """Smallest t exceeding the weighted-degree bound of the m = 1 plan."""
    return choose_plan(n, k, 1).weighted_bound + 1


def decode_list_weighted(spec: RSSpec, r, t: int, force: bool = False) -> DecodeOutcome:
    r = check_word(spec, r)
    plan = choose_plan(spec.n, spec.k, 1)
    if t <= plan.weighted_bound and not force:
        raise ThresholdTooLow(
            f"weighted decoder needs t > D = {plan.weighted_bound}, got t={t}")
    Q = interpolate(spec, r, plan)
    return _filtered(spec, r, y_roots(Q, spec.k), t, Q=Q, plan=plan)


def gs_threshold(n: int, k: int) -> int:
    """Smallest t with t^2 > k n."""
    return isqrt(k * n) + 1


def gs_multiplicity(n: int, k: int, t: int, max_m: int | None = None) -> int | None:
    """Smallest m >= 1 with t*m > D(m); None if t^2 <= kn (or max_m is hit)."""
    if t * t <= k * n:
        return None
    m = 1
    while max_m is None or m <= max_m:
        if t * m > choose_plan(n, k, m).weighted_bound:
            return m
        m += 1
    return None


def decode_list_gs(spec: RSSpec, r, t: int, force: bool = False) -> DecodeOutcome:
    r = check_word(spec, r)
    n, k = spec.n, spec.k
    m = gs_multiplicity(n, k, t)
    if m is None:
        if not force:
            raise ThresholdTooLow(f"multiplicity decoder needs t^2 > kn = {k * n}, got t={t}")
        m = 1
    plan = choose_plan(n, k, m)
    Q = interpolate(spec, r, plan)
    return _filtered(spec, r, y_roots(Q, k), t, Q=Q, plan=plan)


def decode(spec: RSSpec, r, algo: str, t: int | None = None, force: bool = False) -> DecodeOutcome:
    """Dispatch on the decoder name used by the command line."""
    if algo == "bw":
        msg = decode_unique_bw(spec, r)
        if msg is None:
            return DecodeOutcome()
        return DecodeOutcome.build([(msg, agreements(rs_encode(spec, msg), r))])
    if t is None:
        raise ValueError(f"decoder {algo!r} needs an agreement threshold")
    fn = {"basic": decode_list_basic, "weighted": decode_list_weighted, "gs": decode_list_gs}
    if algo not in fn:
        raise ValueError(f"unknown decoder {algo!r}")
    return fn[algo](spec, r, t, force=force)
