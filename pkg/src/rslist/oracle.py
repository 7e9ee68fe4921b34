"""Exhaustive ground truth for list decoding and minimum distance."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import comb

import numpy as np

from .errors import SearchSpaceTooLarge
from .frs import FRSSpec, check_bundled, frs_encode
from .linalg import solve_affine
from .outcome import DecodeOutcome
from .rs import check_word

LIST_CAP = 10 ** 6
DISTANCE_CAP = 10 ** 4
PAIRWISE_CAP = 2000
CHUNK = 1 << 15


def _points(spec) -> list[int]:
    if isinstance(spec, FRSSpec):
        return [x for b in spec.bundle_points() for x in b]
    return list(spec.S)


def iter_codebook(spec, start: int = 0):
    """Yield (message array, codeword array) chunks over all q^k messages in
    lexicographic order; FRS codewords are shaped (count, n, s)."""
    F, k = spec.field, spec.k
    q = F.q
    pts = np.array(_points(spec), dtype=np.int64)
    V = np.ones((k, pts.shape[0]), dtype=np.int64)
    for j in range(1, k):
        V[j] = F.vmul(V[j - 1], pts)
    total = q ** k
    for lo in range(start, total, CHUNK):
        idx = np.arange(lo, min(lo + CHUNK, total), dtype=np.int64)
        msgs = np.empty((idx.shape[0], k), dtype=np.int64)
        rest = idx.copy()
        for j in range(k - 1, -1, -1):
            msgs[:, j] = rest % q
            rest //= q
        cw = np.zeros((idx.shape[0], pts.shape[0]), dtype=np.int64)
        for j in range(k):
            cw = F.vadd(cw, F.vmul(msgs[:, j, None], V[j][None, :]))
        if isinstance(spec, FRSSpec):
            cw = cw.reshape(idx.shape[0], spec.n, spec.s)
        yield msgs, cw


def _guard(spec, cap):
    if spec.field.q ** spec.k > cap:
        raise SearchSpaceTooLarge(f"q^k = {spec.field.q}^{spec.k} exceeds {cap}")


def _list(spec, r, t) -> DecodeOutcome:
    pairs = []
    r = np.array(r, dtype=np.int64)
    for msgs, cw in iter_codebook(spec):
        eq = cw == r
        if eq.ndim == 3:
            eq = eq.all(axis=2)
        agree = eq.sum(axis=1)
        for i in np.nonzero(agree >= t)[0]:
            pairs.append((tuple(int(c) for c in msgs[i]), int(agree[i])))
    return DecodeOutcome.build(pairs)


def brute_force_list(spec, r, t: int) -> DecodeOutcome:
    """All messages whose RS encoding agrees with r in at least t positions."""
    _guard(spec, LIST_CAP)
    return _list(spec, check_word(spec, r), t)


def brute_force_frs_list(spec: FRSSpec, r, t: int) -> DecodeOutcome:
    """All messages whose folded encoding agrees with r on at least t bundles."""
    _guard(spec, LIST_CAP)
    return _list(spec, check_bundled(spec, r), t)


def _weights(cw) -> np.ndarray:
    nz = cw != 0
    if nz.ndim == 3:
        nz = nz.any(axis=2)
    return nz.sum(axis=1)


def exhaustive_min_distance(spec) -> Fraction:
    """Minimum relative weight of a nonzero codeword (the code is linear)."""
    _guard(spec, DISTANCE_CAP)
    best = spec.n
    for _, cw in iter_codebook(spec, start=1):
        best = min(best, int(_weights(cw).min()))
    return Fraction(best, spec.n)


def pairwise_min_distance(spec) -> Fraction:
    """Minimum relative distance over all pairs of distinct codewords."""
    _guard(spec, PAIRWISE_CAP)
    cw = np.concatenate([c for _, c in iter_codebook(spec)])
    best = spec.n
    for i in range(cw.shape[0] - 1):
        ne = cw[i + 1:] != cw[i]
        if ne.ndim == 3:
            ne = ne.any(axis=2)
        best = min(best, int(ne.sum(axis=1).min()))
    return Fraction(best, spec.n)


def subset_frs_list(spec: FRSSpec, r, t: int, cap: int = LIST_CAP) -> DecodeOutcome:
    """Exact list for large q^k: any answer agrees with r on some j bundles
    with j*s >= k, and those j bundles pin it down by interpolation."""
    r = check_bundled(spec, r)
    F, n, k, s = spec.field, spec.n, spec.k, spec.s
    j = -(-k // s)
    if t < j:
        raise ValueError(f"subset oracle needs t >= ceil(k/s) = {j}, got t={t}")
    if comb(n, j) > cap:
        raise SearchSpaceTooLarge(f"C({n}, {j}) subsets exceed {cap}")
    pts = spec.bundle_points()
    found = {}
    for sub in combinations(range(n), j):
        xs = [x for i in sub for x in pts[i]]
        ys = [y for i in sub for y in r[i]]
        V = [[F.pow(x, e) for e in range(k)] for x in xs]
        sol = solve_affine(F, V, ys)
        if sol is None or sol.dim:
            continue
        msg = sol.particular
        if msg not in found:
            found[msg] = sum(tuple(a) == b for a, b in zip(frs_encode(spec, msg), r))
    return DecodeOutcome.build([(m, a) for m, a in found.items() if a >= t])
