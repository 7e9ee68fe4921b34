"""Bounded adversarial channels and Hamming distance.

A channel with error fraction ``err_frac`` changes at most
``floor(err_frac * n)`` coordinates of a word. Randomised channels draw from
numpy's PCG64 generator seeded with the channel's 64-bit seed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import BudgetShape, LengthMismatch

KINDS = ("random_positions", "targeted", "prefix_zero")


def hamming(x, y) -> Fraction:
    """Fraction of coordinates (symbols or whole bundles) where x and y differ."""
    if len(x) != len(y):
        raise LengthMismatch(f"lengths differ: {len(x)} vs {len(y)}")
    if not x:
        return Fraction(0)
    return Fraction(sum(a != b for a, b in zip(x, y)), len(x))


def trial_seed(seed: int, trial: int) -> int:
    return (seed ^ trial) & ((1 << 64) - 1)


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & ((1 << 64) - 1)))


@dataclass(frozen=True)
class ChannelSpec:
    kind: str
    err_frac: Fraction = Fraction(0)
    seed: int = 0
    target: tuple | None = None
    ell: int | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown channel kind {self.kind!r}; expected one of {KINDS}")
        ef = Fraction(self.err_frac)
        if not 0 <= ef <= 1:
            raise BudgetShape(f"error fraction {ef} outside [0, 1]")
        object.__setattr__(self, "err_frac", ef)
        if self.kind == "targeted" and self.target is None:
            raise BudgetShape("targeted channel needs a target word")
        if self.kind == "prefix_zero" and self.ell is None:
            raise BudgetShape("prefix_zero channel needs ell")

    def budget(self, n: int) -> int:
        return self.err_frac.numerator * n // self.err_frac.denominator


def _symbol_index(sym, q: int) -> int:
    if isinstance(sym, tuple):
        v = 0
        for c in reversed(sym):
            v = v * q + c
        return v
    return sym


def _symbol_from_index(v: int, q: int, like):
    if isinstance(like, tuple):
        out = []
        for _ in like:
            v, c = divmod(v, q)
            out.append(c)
        return tuple(out)
    return v


def apply_channel(ch: ChannelSpec, word, q: int):
    """Corrupt ``word`` (a tuple of field symbols or of bundles) over GF(q)."""
    word = tuple(tuple(c) if isinstance(c, (tuple, list)) else int(c) for c in word)
    n = len(word)
    out = list(word)
    if ch.kind == "random_positions":
        b = ch.budget(n)
        if b:
            rng = rng_for(ch.seed)
            alphabet = q ** len(word[0]) if isinstance(word[0], tuple) else q
            for pos in rng.choice(n, size=b, replace=False):
                orig = _symbol_index(word[pos], q)
                v = int(rng.integers(0, alphabet - 1))
                if v >= orig:
                    v += 1
                out[pos] = _symbol_from_index(v, q, word[pos])
    elif ch.kind == "targeted":
        target = tuple(tuple(c) if isinstance(c, (tuple, list)) else int(c) for c in ch.target)
        if len(target) != n:
            raise LengthMismatch(f"target has length {len(target)}, word has {n}")
        diff = [i for i in range(n) if word[i] != target[i]]
        for i in diff[:ch.budget(n)]:
            out[i] = target[i]
    else:
        ell = ch.ell
        if not 0 <= ell <= n:
            raise BudgetShape(f"ell={ell} outside [0, {n}]")
        if Fraction(n - ell, n) > ch.err_frac:
            raise BudgetShape(f"zeroing {n - ell} of {n} coordinates exceeds error fraction {ch.err_frac}")
        zero = (0,) * len(word[0]) if isinstance(word[0], tuple) else 0
        for i in range(ell, n):
            out[i] = zero
    out = tuple(out)
    assert hamming(word, out) <= ch.err_frac
    return out
