"""Folded Reed-Solomon codes, the dilution map, and their list decoders."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import numpy as np

from .errors import (
    InequalityViolated,
    InternalContradiction,
    InvalidFoldParams,
    InvalidRate,
    InvalidSpec,
    LengthMismatch,
    ThresholdTooLow,
)
from .field import GF, prime_power
from .linalg import enumerate_affine, nullspace, solve_affine
from .outcome import DecodeOutcome
from .poly import UniPoly
from .rs import message_poly

Bundle = tuple[int, ...]
BundledWord = tuple[Bundle, ...]


@dataclass(frozen=True)
class FRSSpec:
    field: GF
    s: int
    k: int
    omega: int
    S: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(int(a) for a in self.S))
        F = self.field
        if self.s < 1 or self.k < 1 or not self.S:
            raise InvalidSpec(f"need s >= 1, k >= 1, n >= 1 (s={self.s}, k={self.k}, n={len(self.S)})")
        if F.q < 3:
            raise InvalidSpec("folded codes need a field with a primitive element of order q-1 >= 2")
        F.check(self.omega)
        if self.omega == 0 or F.order(self.omega) != F.q - 1:
            raise InvalidSpec(f"omega={self.omega} is not primitive in {F!r}")
        for a in self.S:
            F.check(a)
        if len(set(self.S)) != len(self.S):
            raise InvalidSpec("evaluation points must be distinct")
        if self.s > 1 and 0 in self.S:
            raise InvalidSpec("0 cannot be an evaluation point when s > 1")

    @property
    def n(self) -> int:
        return len(self.S)

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.s * self.n)

    def bundle_points(self) -> list[tuple[int, ...]]:
        F = self.field
        wp = [F.pow(self.omega, i) for i in range(self.s)]
        return [tuple(F.mul(a, w) for w in wp) for a in self.S]


def frs_encode(spec: FRSSpec, message) -> BundledWord:
    p = message_poly(spec, message)
    return tuple(tuple(p.eval(x) for x in pts) for pts in spec.bundle_points())


def check_bundled(spec: FRSSpec, word) -> BundledWord:
    if len(word) != spec.n:
        raise LengthMismatch(f"word has {len(word)} bundles, expected n={spec.n}")
    out = []
    for b in word:
        if len(b) != spec.s:
            raise LengthMismatch(f"bundle {tuple(b)} has length {len(b)}, expected s={spec.s}")
        out.append(tuple(spec.field.check(int(c)) for c in b))
    return tuple(out)


def bundle_agreements(x, y) -> int:
    return sum(tuple(a) == tuple(b) for a, b in zip(x, y))


def is_non_overlapping(spec: FRSSpec) -> bool:
    pts = [x for b in spec.bundle_points() for x in b]
    return len(set(pts)) == len(pts)


# -- dilution ----------------------------------------------------------------

def dilute_word(word, s: int, s_prime: int) -> BundledWord:
    """Split each size-s bundle into its s - s' + 1 consecutive windows of size s'."""
    if not 1 <= s_prime <= s:
        raise InvalidFoldParams(f"need 1 <= s' <= s, got s={s}, s'={s_prime}")
    return tuple(tuple(b[j:j + s_prime]) for b in word for j in range(s - s_prime + 1))


def dilute_spec(spec: FRSSpec, s_prime: int) -> FRSSpec:
    if not 1 <= s_prime <= spec.s:
        raise InvalidFoldParams(f"need 1 <= s' <= s, got s={spec.s}, s'={s_prime}")
    if not is_non_overlapping(spec):
        raise InvalidFoldParams("dilution needs a non-overlapping code")
    F = spec.field
    S2 = [F.mul(F.pow(spec.omega, j), a) for a in spec.S for j in range(spec.s - s_prime + 1)]
    return FRSSpec(F, s_prime, spec.k, spec.omega, tuple(S2))


def dilute(spec: FRSSpec, word, s_prime: int) -> tuple[FRSSpec, BundledWord]:
    spec2 = dilute_spec(spec, s_prime)
    return spec2, dilute_word(check_bundled(spec, word), spec.s, s_prime)


def diluted_rate(rate: Fraction, s: int, s_prime: int) -> Fraction:
    return Fraction(1, s_prime) * Fraction(s, s - s_prime + 1) * rate


# -- overlapping decoder -------------------------------------------------------

def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def overlap_degree(n: int, k: int, s: int) -> int:
    """ceil((n - k)/(s + 1)), floored at 0: the degree cap of A_1..A_s."""
    return max(_ceil_div(n - k, s + 1), 0)


def overlap_threshold(n: int, k: int, s: int) -> int:
    """Smallest integer t with t >= (n - k)/(s + 1) + k."""
    return overlap_degree(n, k, s) + k


@dataclass(frozen=True)
class FRSLinearQ:
    """Q(X, Y_1..Y_s) = A_0(X) + sum_i A_i(X) Y_i."""

    A: tuple[UniPoly, ...]

    def eval(self, x: int, ys) -> int:
        F = self.A[0].field
        acc = self.A[0].eval(x)
        for Ai, y in zip(self.A[1:], ys):
            acc = F.add(acc, F.mul(Ai.eval(x), y))
        return acc

    def compose(self, p: UniPoly, omega: int) -> UniPoly:
        """A_0(X) + sum_i A_i(X) p(omega^(i-1) X)."""
        F = p.field
        acc = self.A[0]
        w = 1
        for Ai in self.A[1:]:
            acc = acc + Ai * p.scale_var(w)
            w = F.mul(w, omega)
        return acc


def _pow_rows(F: GF, pts, top: int) -> np.ndarray:
    pts = np.asarray(pts, dtype=np.int64)
    P = np.ones((pts.shape[0], top + 1), dtype=np.int64)
    for e in range(1, top + 1):
        P[:, e] = F.vmul(P[:, e - 1], pts)
    return P


def frs_interpolate(spec: FRSSpec, r) -> FRSLinearQ:
    """Step 1: a nonzero linear Q vanishing at every (a, r(a))."""
    F, n, k, s = spec.field, spec.n, spec.k, spec.s
    c = overlap_degree(n, k, s)
    d0, d1 = c + k - 1, c
    unknowns = d0 + 1 + s * (d1 + 1)
    assert unknowns > n, (unknowns, n)
    P = _pow_rows(F, spec.S, max(d0, d1))
    R = np.array(r, dtype=np.int64)
    blocks = [P[:, :d0 + 1]]
    for i in range(s):
        blocks.append(F.vmul(P[:, :d1 + 1], R[:, i:i + 1]))
    basis = nullspace(F, np.hstack(blocks))
    if not basis:
        raise InternalContradiction("no interpolating Q despite more unknowns than constraints")
    v = basis[0]
    A = [UniPoly(F, v[:d0 + 1])]
    for i in range(s):
        off = d0 + 1 + i * (d1 + 1)
        A.append(UniPoly(F, v[off:off + d1 + 1]))
    return FRSLinearQ(tuple(A))


def root_system(Q: FRSLinearQ, k: int, omega: int):
    """Step 2 as a linear system M c = b in the k coefficients of p."""
    F = Q.A[0].field
    s = len(Q.A) - 1
    top = max([Q.A[0].degree] + [Ai.degree + k - 1 for Ai in Q.A[1:]] + [0])
    # wpow[i][j] = omega^(i*j)
    wpow = [[F.pow(omega, i * j) for j in range(k)] for i in range(s)]
    M = np.zeros((top + 1, k), dtype=np.int64)
    for l in range(top + 1):
        for j in range(min(k, l + 1)):
            acc = 0
            for i in range(s):
                a = Q.A[i + 1][l - j]
                if a:
                    acc = F.add(acc, F.mul(a, wpow[i][j]))
            M[l, j] = acc
    b = np.array([F.neg(Q.A[0][l]) for l in range(top + 1)], dtype=np.int64)
    return M, b


def frs_decode_overlapping(spec: FRSSpec, r, t: int, cap: int | None = None,
                           force: bool = False) -> DecodeOutcome:
    """List every degree < k polynomial whose folded encoding agrees with r
    on at least t bundles; valid for t >= (n - k)/(s + 1) + k."""
    r = check_bundled(spec, r)
    F, n, k, s = spec.field, spec.n, spec.k, spec.s
    if t < overlap_threshold(n, k, s) and not force:
        raise ThresholdTooLow(
            f"folded decoder needs t >= {overlap_threshold(n, k, s)} (n={n}, k={k}, s={s}), got t={t}")
    if cap is None:
        cap = F.q ** s
    Q = frs_interpolate(spec, r)
    M, b = root_system(Q, k, spec.omega)
    sol = solve_affine(F, M, b)
    if sol is None:
        return DecodeOutcome(solution_dim=None, info={"Q": Q})
    pairs = []
    for msg in enumerate_affine(F, sol, cap):
        a = bundle_agreements(frs_encode(spec, msg), r)
        if a >= t:
            pairs.append((msg, a))
    return DecodeOutcome.build(pairs, solution_dim=sol.dim, info={"Q": Q})


# -- capacity-achieving parameters and pipeline --------------------------------

@dataclass(frozen=True)
class CapacityParams:
    s: int
    s_prime: int
    q: int
    k: int
    omega: int
    S: tuple[int, ...]
    field: GF

    def spec(self) -> FRSSpec:
        return FRSSpec(self.field, self.s, self.k, self.omega, self.S)


def smallest_prime_power_at_least(x: int) -> int:
    q = max(x, 2)
    while prime_power(q) is None:
        q += 1
    return q


def capacity_params(epsilon, R, n: int) -> CapacityParams:
    """Folding s' = ceil(1/eps), s = (s'+1)(s'-1), smallest prime power q
    with q - 1 >= s n, k = ceil(R s n), S = (w^0, w^s, ..., w^((n-1)s))."""
    epsilon, R = Fraction(epsilon), Fraction(R)
    if not 0 < epsilon <= 1 or n < 1:
        raise InvalidRate(f"need 0 < epsilon <= 1 and n >= 1, got epsilon={epsilon}, n={n}")
    if not 0 < R or R + epsilon >= 1:
        raise InvalidRate(f"need 0 < R < 1 - epsilon, got R={R}, epsilon={epsilon}")
    s_prime = ceil(1 / epsilon)
    s = (s_prime + 1) * (s_prime - 1)
    q = smallest_prime_power_at_least(s * n + 1)
    F = GF.from_order(q)
    omega = F.primitive_element
    k = ceil(R * s * n)
    S = tuple(F.pow(omega, j * s) for j in range(n))
    return CapacityParams(s, s_prime, q, k, omega, S, F)


def capacity_inequality(spec: FRSSpec, s_prime: int, epsilon) -> tuple[Fraction, Fraction]:
    """(agreements available after dilution, agreements the decoder needs)."""
    n, k, s = spec.n, spec.k, spec.s
    n2 = n * (s - s_prime + 1)
    lhs = Fraction(k * (s - s_prime + 1), s) + Fraction(epsilon) * n2
    rhs = k + Fraction(n2 - k, s_prime + 1)
    return lhs, rhs


def frs_decode_capacity(spec: FRSSpec, s_prime: int, r, err_frac, epsilon=None,
                        cap: int | None = None) -> DecodeOutcome:
    """Decode a non-overlapping code from an err_frac fraction of bundle errors
    by diluting to folding s_prime and running the overlapping decoder."""
    r = check_bundled(spec, r)
    err_frac = Fraction(err_frac)
    epsilon = Fraction(1, s_prime) if epsilon is None else Fraction(epsilon)
    if not 1 <= s_prime <= spec.s:
        raise InvalidFoldParams(f"need 1 <= s' <= s, got s={spec.s}, s'={s_prime}")
    if not is_non_overlapping(spec):
        raise InvalidFoldParams("capacity decoding needs a non-overlapping code")
    if err_frac > 1 - spec.rate - epsilon:
        raise InequalityViolated(
            f"error fraction {err_frac} exceeds 1 - R - eps = {1 - spec.rate - epsilon}")
    lhs, rhs = capacity_inequality(spec, s_prime, epsilon)
    if lhs < rhs:
        raise InequalityViolated(f"diluted agreement {lhs} < required {rhs}")
    spec2, r2 = dilute(spec, r, s_prime)
    t2 = ceil((1 - err_frac) * spec2.n)
    inner = frs_decode_overlapping(spec2, r2, t2, cap=cap)
    t = ceil((1 - err_frac) * spec.n)
    pairs = []
    for msg in inner.messages:
        a = bundle_agreements(frs_encode(spec, msg), r)
        if a >= t:
            pairs.append((msg, a))
    return DecodeOutcome.build(pairs, solution_dim=inner.solution_dim,
                               info={"diluted_spec": spec2, "diluted_t": t2})
