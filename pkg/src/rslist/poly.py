"""Univariate and bivariate polynomials over a finite field.

Coefficients are canonical field integers. ``UniPoly`` keeps a trimmed
ascending coefficient tuple; ``BiPoly`` keeps a sparse ``{(i, j): c}`` map
for the monomial ``X^i Y^j`` with no zero entries.
"""
from __future__ import annotations

from math import comb

from .errors import DivisionByZero, FieldMismatch, ZeroPolynomial
from .field import GF


def _same_field(a, b):
    if a.field != b.field:
        raise FieldMismatch(f"{a.field!r} vs {b.field!r}")


def binom_mod(n: int, k: int, F: GF) -> int:
    """Binomial coefficient C(n, k) mapped into F (reduced mod p)."""
    if k < 0 or k > n:
        return 0
    return comb(n, k) % F.p


class UniPoly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, field, deg, c=1):
        return cls(field, [0] * deg + [c])

    @classmethod
    def x(cls, field):
        return cls(field, (0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, UniPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "UniPoly(0)"
        terms = [f"{c}*X^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return "UniPoly(" + " + ".join(terms) + ")"

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, a: int) -> int:
        return self.eval(a)

    def eval(self, a: int) -> int:
        F = self.field
        F.check(a)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, a), c)
        return acc

    def __add__(self, other):
        _same_field(self, other)
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __neg__(self):
        return UniPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        _same_field(self, other)
        F = self.field
        if not self.coeffs or not other.coeffs:
            return UniPoly(F)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = F.add(out[i + j], F.mul(a, b))
        return UniPoly(F, out)

    def scale(self, c: int):
        F = self.field
        return UniPoly(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, e: int):
        r = UniPoly(self.field, (1,))
        base = self
        while e:
            if e & 1:
                r = r * base
            base = base * base
            e >>= 1
        return r

    def __divmod__(self, other):
        _same_field(self, other)
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        F = self.field
        rem = list(self.coeffs)
        d = other.degree
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * max(len(rem) - d, 0)
        for top in range(len(rem) - 1, d - 1, -1):
            c = rem[top]
            if c == 0:
                continue
            f = F.mul(c, inv_lead)
            shift = top - d
            quot[shift] = f
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = F.sub(rem[shift + i], F.mul(f, b))
        return UniPoly(F, quot), UniPoly(F, rem[:d] if d > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def compose(self, other: "UniPoly") -> "UniPoly":
        """self(other(X))."""
        _same_field(self, other)
        acc = UniPoly(self.field)
        for c in reversed(self.coeffs):
            acc = acc * other + UniPoly(self.field, (c,))
        return acc

    def scale_var(self, w: int) -> "UniPoly":
        """p(w X)."""
        F = self.field
        out, wp = [], 1
        for c in self.coeffs:
            out.append(F.mul(c, wp))
            wp = F.mul(wp, w)
        return UniPoly(F, out)

    def to_json(self):
        return list(self.coeffs)


class BiPoly:
    """Sparse bivariate polynomial in X and Y."""

    __slots__ = ("field", "terms")

    def __init__(self, field: GF, terms=None):
        self.field = field
        self.terms = {ij: c for ij, c in (terms or {}).items() if c}

    @classmethod
    def from_triples(cls, field, triples):
        F = field
        terms: dict = {}
        for i, j, c in triples:
            terms[(i, j)] = F.add(terms.get((i, j), 0), c)
        return cls(F, terms)

    @classmethod
    def from_uni(cls, p: UniPoly, y_power=0):
        return cls(p.field, {(i, y_power): c for i, c in enumerate(p.coeffs)})

    @classmethod
    def y_minus(cls, p: UniPoly):
        """The polynomial Y - p(X)."""
        return cls.from_uni(-p) + cls(p.field, {(0, 1): 1})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, BiPoly) and self.field == other.field and self.terms == other.terms

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        body = " + ".join(f"{c}*X^{i}*Y^{j}" for (i, j), c in sorted(self.terms.items()))
        return f"BiPoly({body or 0})"

    @property
    def deg_x(self):
        return max((i for i, _ in self.terms), default=-1)

    @property
    def deg_y(self):
        return max((j for _, j in self.terms), default=-1)

    def weighted_degree(self, wx: int, wy: int) -> int:
        if not self.terms:
            raise ZeroPolynomial("weighted degree of the zero polynomial")
        return max(i * wx + j * wy for i, j in self.terms)

    def __add__(self, other):
        _same_field(self, other)
        F = self.field
        terms = dict(self.terms)
        for ij, c in other.terms.items():
            terms[ij] = F.add(terms.get(ij, 0), c)
        return BiPoly(F, terms)

    def __neg__(self):
        return BiPoly(self.field, {ij: self.field.neg(c) for ij, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPoly(self.field, {ij: self.field.mul(other, c) for ij, c in self.terms.items()})
        _same_field(self, other)
        F = self.field
        terms: dict = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = F.add(terms.get(key, 0), F.mul(a, b))
        return BiPoly(F, terms)

    def __pow__(self, e: int):
        r = BiPoly(self.field, {(0, 0): 1})
        for _ in range(e):
            r = r * self
        return r

    def eval(self, x: int, y: int) -> int:
        F = self.field
        F.check(x)
        F.check(y)
        acc = 0
        for (i, j), c in self.terms.items():
            acc = F.add(acc, F.mul(c, F.mul(F.pow(x, i), F.pow(y, j))))
        return acc

    def __call__(self, x, y):
        return self.eval(x, y)

    def y_coeffs(self) -> list[UniPoly]:
        """Q viewed in F_q[X][Y]: the list of X-polynomials multiplying Y^j."""
        F = self.field
        cols = [[0] * (self.deg_x + 1) for _ in range(self.deg_y + 1)]
        for (i, j), c in self.terms.items():
            cols[j][i] = c
        return [UniPoly(F, col) for col in cols]

    def compose_y(self, p: UniPoly) -> UniPoly:
        """Q(X, p(X))."""
        _same_field(self, p)
        acc = UniPoly(self.field)
        for coeff in reversed(self.y_coeffs()):
            acc = acc * p + coeff
        return acc

    def compose_x(self, p: UniPoly) -> "BiPoly":
        """Q(p(X), Y)."""
        _same_field(self, p)
        F = self.field
        out = BiPoly(F)
        for (i, j), c in self.terms.items():
            pi = p ** i
            out = out + BiPoly(F, {(e, j): F.mul(c, a) for e, a in enumerate(pi.coeffs)})
        return out

    def divmod_y_minus(self, p: UniPoly):
        """Divide by the Y-monic polynomial Y - p(X) in F_q[X][Y].

        Returns (quotient BiPoly, remainder UniPoly); the remainder is Q(X, p(X)).
        """
        _same_field(self, p)
        F = self.field
        cs = self.y_coeffs()
        if not cs:
            return BiPoly(F), UniPoly(F)
        # synthetic division: b_{d-1} = c_d, b_{j-1} = c_j + p b_j
        quot = [UniPoly(F)] * (len(cs) - 1)
        carry = UniPoly(F)
        for j in range(len(cs) - 1, 0, -1):
            carry = cs[j] + p * carry
            quot[j - 1] = carry
        rem = cs[0] + p * carry
        terms = {}
        for j, u in enumerate(quot):
            for i, c in enumerate(u.coeffs):
                if c:
                    terms[(i, j)] = c
        return BiPoly(F, terms), rem

    def shift(self, a: int, b: int) -> "BiPoly":
        """Q(X + a, Y + b)."""
        F = self.field
        terms: dict = {}
        for (i, j), c in self.terms.items():
            for u in range(i + 1):
                cu = binom_mod(i, u, F)
                if not cu:
                    continue
                au = F.mul(cu, F.pow(a, i - u))
                for v in range(j + 1):
                    cv = binom_mod(j, v, F)
                    if not cv:
                        continue
                    term = F.mul(c, F.mul(au, F.mul(cv, F.pow(b, j - v))))
                    terms[(u, v)] = F.add(terms.get((u, v), 0), term)
        return BiPoly(F, terms)

    def hasse(self, a: int, b: int, i: int, j: int) -> int:
        """Coefficient of X^i Y^j in Q(X + a, Y + b)."""
        F = self.field
        acc = 0
        for (i2, j2), c in self.terms.items():
            if i2 < i or j2 < j:
                continue
            w = binom_mod(i2, i, F) * binom_mod(j2, j, F) % F.p
            if w:
                term = F.mul(F.mul(w, c), F.mul(F.pow(a, i2 - i), F.pow(b, j2 - j)))
                acc = F.add(acc, term)
        return acc

    def has_multiplicity(self, a: int, b: int, m: int) -> bool:
        return all(self.hasse(a, b, i, d - i) == 0 for d in range(m) for i in range(d + 1))

    def _lift(self, gamma: int) -> "BiPoly":
        """Q(X, X*Y + gamma) with the largest power of X divided out."""
        F = self.field
        terms: dict = {}
        for (i, j), c in self.terms.items():
            gp = 1
            # (XY + g)^j = sum_l C(j, l) X^l Y^l g^(j-l)
            pows = [1]
            for _ in range(j):
                gp = F.mul(gp, gamma)
                pows.append(gp)
            for l in range(j + 1):
                w = binom_mod(j, l, F)
                if not w:
                    continue
                t = F.mul(c, F.mul(w, pows[j - l]))
                if t:
                    key = (i + l, l)
                    terms[key] = F.add(terms.get(key, 0), t)
        out = BiPoly(F, terms)
        if out.terms:
            r = min(i for i, _ in out.terms)
            if r:
                out = BiPoly(F, {(i - r, j): c for (i, j), c in out.terms.items()})
        return out

    def to_json(self):
        return [[i, j, c] for (i, j), c in sorted(self.terms.items())]


def univariate_roots(p: UniPoly) -> list[int]:
    """All roots of a nonzero univariate polynomial, by exhaustive evaluation."""
    if p.is_zero():
        raise ZeroPolynomial("roots of the zero polynomial")
    if p.degree == 0:
        return []
    return [a for a in p.field.elements() if p.eval(a) == 0]


def y_roots(Q: BiPoly, k: int) -> list[UniPoly]:
    """Every p with deg p < k and Q(X, p(X)) == 0, ordered by coefficient vector.

    Roth-Ruckenstein style lifting: the constant term of p is a root of
    Q(0, Y) once X-powers are stripped; recurse on Q(X, XY + p(0)).
    """
    if Q.is_zero():
        raise ZeroPolynomial("y_roots of the zero polynomial")
    F = Q.field
    start = _strip_x(Q)
    found = []

    def recurse(R: BiPoly, prefix: list[int]):
        if len(prefix) == k:
            cand = UniPoly(F, prefix)
            if Q.compose_y(cand).is_zero():
                found.append(cand)
            return
        cs = [0] * (R.deg_y + 1)
        for (i, j), c in R.terms.items():
            if i == 0:
                cs[j] = c
        slice0 = UniPoly(F, cs)
        for gamma in univariate_roots(slice0):
            recurse(R._lift(gamma), prefix + [gamma])

    recurse(start, [])
    uniq = {tuple(p.coeffs) + (0,) * (k - len(p.coeffs)): p for p in found}
    return [uniq[key] for key in sorted(uniq)]


def _strip_x(Q: BiPoly) -> BiPoly:
    r = min(i for i, _ in Q.terms)
    if not r:
        return Q
    return BiPoly(Q.field, {(i - r, j): c for (i, j), c in Q.terms.items()})
