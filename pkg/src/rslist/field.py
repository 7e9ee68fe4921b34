"""Finite fields GF(p^m) with elements encoded as canonical integers.

An element of GF(p^m) is the integer ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``
where ``c_0 + c_1 X + ... + c_{m-1} X^{m-1}`` is its residue modulo the
field's irreducible modulus. Zero is 0 and one is 1 in every field.

Scalar operations take and return plain ``int``. The ``v*`` methods apply
the same operation elementwise to numpy integer arrays and back the dense
linear algebra.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from .errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidSpec,
    NonPrimeCharacteristic,
    ReducibleModulus,
    UnsupportedOrder,
)

MAX_DEFAULT_ORDER = 1 << 16
MAX_ORDER = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, m) with q == p**m, or None if q is not a prime power."""
    if q < 2:
        return None
    p = prime_factors(q)
    if len(p) != 1:
        return None
    p = p[0]
    m = 0
    while q > 1:
        q //= p
        m += 1
    return p, m


# -- polynomials over the prime field, as ascending coefficient lists --------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], f: list[int], p: int) -> list[int]:
    a = _trim([c % p for c in a])
    df = len(f) - 1
    inv_lead = pow(f[-1], p - 2, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fc) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _pmod(out, f, p)


def _ppowmod(a: list[int], e: int, f: list[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def is_irreducible(f: list[int] | tuple[int, ...], p: int) -> bool:
    """Exhaustive search for a monic factor of degree 1..deg(f)//2."""
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if m < 1:
        return False
    for d in range(1, m // 2 + 1):
        for low in product(range(p), repeat=d):
            if not _pmod(f, list(low) + [1], p):
                return False
    return True


def is_primitive_polynomial(f: list[int] | tuple[int, ...], p: int) -> bool:
    """Irreducible and X generates the multiplicative group of F_p[X]/(f)."""
    f = _trim([c % p for c in f])
    m = len(f) - 1
    if f[-1] != 1 or not is_irreducible(f, p):
        return False
    order = p ** m - 1
    return all(_ppowmod([0, 1], order // r, f, p) != [1] for r in prime_factors(order))


def _poly_from_int(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, c = divmod(v, p)
        out.append(c)
    return out


@lru_cache(maxsize=None)
def smallest_primitive_polynomial(p: int, m: int) -> tuple[int, ...]:
    """Monic primitive polynomial of degree m whose low coefficients form
    the smallest base-p integer."""
    for v in range(p ** m):
        f = _poly_from_int(v, p, m) + [1]
        if f[0] and is_primitive_polynomial(f, p):
            return tuple(f)
    raise AssertionError(f"no primitive polynomial of degree {m} over F_{p}")


def _bits(mask: int, m: int) -> tuple[int, ...]:
    return tuple((mask >> i) & 1 for i in range(m + 1))


# Binary moduli, as bit masks (bit i = coefficient of X^i). Each is the
# smallest primitive polynomial of its degree; tests re-derive them.
BINARY_MODULI = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x83,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x402B,
    15: 0x8003,
    16: 0x1002D,
}


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    if p == 2 and m in BINARY_MODULI:
        return _bits(BINARY_MODULI[m], m)
    return smallest_primitive_polynomial(p, m)


class GF:
    """The finite field with ``p**m`` elements.

    ``modulus`` is the ascending coefficient vector (length m+1, monic) of
    the irreducible polynomial defining the extension; it is ignored for
    prime fields and chosen from a fixed table when omitted.
    """

    def __init__(self, p: int, m: int = 1, modulus=None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"characteristic {p} is not prime")
        if m < 1:
            raise InvalidSpec(f"extension degree must be >= 1, got {m}")
        q = p ** m
        if q > MAX_ORDER:
            raise UnsupportedOrder(f"field order {q} exceeds {MAX_ORDER}")
        self.p = p
        self.m = m
        self.q = q
        if m == 1:
            self.modulus = None
        elif modulus is None:
            if q > MAX_DEFAULT_ORDER:
                raise UnsupportedOrder(f"no built-in modulus for order {q}")
            self.modulus = default_modulus(p, m)
        else:
            f = [int(c) % p for c in modulus]
            _trim(f)
            if len(f) != m + 1 or f[-1] != 1:
                raise InvalidSpec(f"modulus must be monic of degree {m}: {list(modulus)}")
            if not is_irreducible(f, p):
                raise ReducibleModulus(f"modulus {f} factors over F_{p}")
            self.modulus = tuple(f)
        self._key = (p, m, self.modulus)
        self._primitive = None
        self._exp = None
        self._log = None
        if m > 1:
            self._build_tables()

    @classmethod
    def from_order(cls, q: int) -> "GF":
        pm = prime_power(q)
        if pm is None:
            raise NonPrimeCharacteristic(f"{q} is not a prime power")
        return cls(*pm)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}, modulus={list(self.modulus)})"

    def __len__(self):
        return self.q

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise FieldMismatch(f"{a} is not an element of {self!r}")
        return a

    def to_dict(self) -> dict:
        d = {"p": self.p, "m": self.m}
        if self.modulus is not None:
            d["modulus"] = list(self.modulus)
        return d

    # -- digits ------------------------------------------------------------

    def digits(self, a: int) -> list[int]:
        return _poly_from_int(a, self.p, self.m)

    def from_digits(self, ds) -> int:
        v = 0
        for c in reversed(list(ds)):
            v = v * self.p + c % self.p
        return v

    # -- reference arithmetic: polynomial product then reduction -----------

    def mul_poly(self, a: int, b: int) -> int:
        """Product computed from the definition, without lookup tables."""
        p = self.p
        if self.m == 1:
            return a * b % p
        if p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                b >>= 1
                a <<= 1
            fmask = sum(c << i for i, c in enumerate(self.modulus))
            for shift in range(r.bit_length() - 1 - self.m, -1, -1):
                if r >> (shift + self.m) & 1:
                    r ^= fmask << shift
            return r
        prod = _pmulmod(self.digits(a), self.digits(b), list(self.modulus), p)
        return self.from_digits(prod)

    def _pow_poly(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul_poly(r, a)
            a = self.mul_poly(a, a)
            e >>= 1
        return r

    def _times_x(self, a: int) -> int:
        # multiply by X (the element p), reduce the overflowing top digit
        a *= self.p
        top, a = divmod(a, self.q)
        if top:
            if self.p == 2:
                a ^= sum(c << i for i, c in enumerate(self.modulus[:-1]))
            else:
                ds = self.digits(a)
                for i in range(self.m):
                    ds[i] = (ds[i] - top * self.modulus[i]) % self.p
                a = self.from_digits(ds)
        return a

    def _build_tables(self):
        g = self.primitive_element
        n = self.q - 1
        exp = np.zeros(2 * n + 1, dtype=np.int64)
        log = np.zeros(self.q, dtype=np.int64)
        x = 1
        step = self._times_x if g == self.p else (lambda v: self.mul_poly(v, g))
        for i in range(n):
            exp[i] = x
            log[x] = i
            x = step(x)
        assert x == 1
        exp[n:2 * n] = exp[:n]
        exp[2 * n] = exp[0]
        self._exp = exp
        self._log = log
        self._exp_list = exp.tolist()
        self._log_list = log.tolist()

    # -- primitive element -------------------------------------------------

    @property
    def primitive_element(self) -> int:
        """Smallest canonical integer whose multiplicative order is q-1."""
        if self._primitive is None:
            if self.q < 3:
                raise InvalidSpec("GF(2) has no primitive element of order q-1 > 1")
            n = self.q - 1
            exps = [n // r for r in prime_factors(n)]
            for g in range(2, self.q):
                if all(self._pow_poly(g, e) != 1 for e in exps):
                    self._primitive = g
                    break
        return self._primitive

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.q - 1
        order = n
        for r in prime_factors(n):
            while order % r == 0 and self.pow(a, order // r) == 1:
                order //= r
        return order

    # -- scalar arithmetic -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        r, scale = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            r += (da + db) % p * scale
            scale *= p
        return r

    def neg(self, a: int) -> int:
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a
        p = self.p
        r, scale = 0, 1
        while a:
            a, da = divmod(a, p)
            r += -da % p * scale
            scale *= p
        return r

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp_list[self._log_list[a] + self._log_list[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return pow(int(a), self.p - 2, self.p)
        return self._exp_list[(self.q - 1 - self._log_list[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        e %= self.q - 1
        if self.m == 1:
            return pow(int(a), e, self.p)
        return self._exp_list[self._log_list[a] * e % (self.q - 1)]

    def from_int(self, c: int) -> int:
        """Image of the integer c under Z -> F_p -> F_q."""
        return c % self.p

    # -- vectorised arithmetic on numpy int64 arrays ------------------------

    def _digitwise(self, a, b, op):
        p = self.p
        r = np.zeros(np.broadcast(a, b).shape, dtype=np.int64)
        scale = 1
        for _ in range(self.m):
            r += op(a // scale % p, b // scale % p) % p * scale
            scale *= p
        return r

    def vadd(self, a, b):
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, np.add)

    def vsub(self, a, b):
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, np.subtract)

    def vneg(self, a):
        if self.m == 1:
            return -a % self.p
        if self.p == 2:
            return a.copy()
        return self._digitwise(np.zeros_like(a), a, np.subtract)

    def vmul(self, a, b):
        if self.m == 1:
            return a * b % self.p
        a, b = np.broadcast_arrays(a, b)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    def vinv(self, a):
        if np.any(a == 0):
            raise DivisionByZero("inverse of zero")
        if self.m == 1:
            return np.array([pow(int(x), self.p - 2, self.p) for x in np.ravel(a)],
                            dtype=np.int64).reshape(np.shape(a))
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
