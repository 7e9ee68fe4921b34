"""Reed-Solomon codes: parameters, encoding, rate and distance."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidSpec, LengthMismatch
from .field import GF
from .poly import UniPoly

Word = tuple[int, ...]


@dataclass(frozen=True)
class RSSpec:
    """RS code of dimension k evaluated, in order, on the points S."""

    field: GF
    k: int
    S: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "S", tuple(int(a) for a in self.S))
        n, q = len(self.S), self.field.q
        if not 1 <= self.k <= n <= q:
            raise InvalidSpec(f"need 1 <= k <= n <= q, got k={self.k}, n={n}, q={q}")
        for a in self.S:
            self.field.check(a)
        if len(set(self.S)) != n:
            raise InvalidSpec("evaluation points must be distinct")

    @property
    def n(self) -> int:
        return len(self.S)

    @classmethod
    def first_points(cls, field: GF, k: int, n: int) -> "RSSpec":
        """Spec on the evaluation set (0, 1, ..., n-1)."""
        return cls(field, k, tuple(range(n)))


def message_poly(spec, message) -> UniPoly:
    if len(message) != spec.k:
        raise LengthMismatch(f"message has length {len(message)}, expected k={spec.k}")
    for c in message:
        spec.field.check(c)
    return UniPoly(spec.field, message)


def rs_encode(spec: RSSpec, message) -> Word:
    p = message_poly(spec, message)
    return tuple(p.eval(a) for a in spec.S)


def check_word(spec, word) -> Word:
    if len(word) != spec.n:
        raise LengthMismatch(f"word has length {len(word)}, expected n={spec.n}")
    return tuple(spec.field.check(int(c)) for c in word)


def agreements(x, y) -> int:
    return sum(a == b for a, b in zip(x, y))


def rs_min_distance(spec: RSSpec) -> Fraction:
    """Relative minimum distance 1 - k/n + 1/n."""
    return 1 - Fraction(spec.k, spec.n) + Fraction(1, spec.n)


def rate(spec: RSSpec) -> Fraction:
    return Fraction(spec.k, spec.n)


def singleton_gap(spec: RSSpec, distance: Fraction | None = None) -> Fraction:
    """Slack in rate + distance <= 1 + 1/n; zero for an MDS code."""
    if distance is None:
        distance = rs_min_distance(spec)
    return (1 - rate(spec) + Fraction(1, spec.n)) - distance
