"""Exact arithmetic in the cyclotomic field Q(zeta_n).

The field is modelled as Q[x]/Phi_n(x) with zeta the residue class of x, so
"a primitive n-th root of unity" has one canonical representation and every
conjugate root is reachable through the Galois maps.  Elements are stored as
an integer coordinate vector over the basis 1, zeta, ..., zeta^(d-1) together
with one shared positive denominator, kept in lowest terms; the observable
coordinates are Fractions (see ``CycloElem.coeffs``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n) if n % d == 0]
    return out


def _int_poly_div_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    """Divide integer polynomials (dense, lowest degree first); den is monic
    and must divide num exactly."""
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c:
            out[k - dd] = c
            for i in range(dd + 1):
                num[k - dd + i] -= c * den[i]
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n (dense, lowest degree first, monic).

    Computed by exact division of x^n - 1 by the product of Phi_d over the
    proper divisors d of n.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n):
        poly = _int_poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CycloContext:
    """Precomputed data for Q(zeta_n): Phi_n, its degree, and reduction
    tables for powers of zeta.  Immutable and shareable."""

    __slots__ = ("n", "phi", "degree", "_pow", "_zero", "_one")

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("cyclotomic context requires n >= 2")
        self.n = n
        self.phi = cyclotomic_polynomial(n)
        d = len(self.phi) - 1
        self.degree = d
        # _pow[k] = coordinates of x^k mod Phi_n, for 0 <= k <= n + d - 2
        # (enough for products of two reduced elements and monomial shifts).
        pow_table: list[tuple[int, ...]] = []
        for k in range(d):
            row = [0] * d
            row[k] = 1
            pow_table.append(tuple(row))
        top = tuple(-c for c in self.phi[:d])  # x^d mod Phi_n
        pow_table.append(top)
        for k in range(d + 1, n + d - 1):
            prev = pow_table[k - 1]
            row = [0] + list(prev[: d - 1])
            c = prev[d - 1]
            if c:
                for i in range(d):
                    row[i] += c * top[i]
            pow_table.append(tuple(row))
        self._pow = tuple(pow_table)
        self._zero = CycloElem(self, (0,) * d, 1, _raw=True)
        one = [0] * d
        one[0] = 1
        self._one = CycloElem(self, tuple(one), 1, _raw=True)

    def __eq__(self, other):
        return isinstance(other, CycloContext) and other.n == self.n

    def __hash__(self):
        return hash(("CycloContext", self.n))

    def __repr__(self):
        return f"CycloContext(n={self.n})"

    def zero(self) -> CycloElem:
        return self._zero

    def one(self) -> CycloElem:
        return self._one

    def from_rational(self, value) -> CycloElem:
        q = Fraction(value)
        num = [0] * self.degree
        num[0] = q.numerator
        return CycloElem(self, num, q.denominator)

    def from_coeffs(self, coeffs) -> CycloElem:
        """Element with the given coordinates (length <= degree, padded)."""
        vals = [Fraction(c) for c in coeffs]
        if len(vals) > self.degree:
            raise ValueError("too many coordinates")
        den = 1
        for v in vals:
            den = den * v.denominator // gcd(den, v.denominator)
        num = [0] * self.degree
        for i, v in enumerate(vals):
            num[i] = v.numerator * (den // v.denominator)
        return CycloElem(self, num, den)

    def zeta_pow(self, e: int) -> CycloElem:
        """Canonical residue of zeta^e (exponent reduced mod n)."""
        return CycloElem(self, self._pow[e % self.n], 1, _raw=True)

    def zeta(self) -> CycloElem:
        return self.zeta_pow(1)


def context_new(n: int) -> CycloContext:
    return CycloContext(n)


@lru_cache(maxsize=None)
def shared_context(n: int) -> CycloContext:
    """Cached context; verifier code reuses these across calls."""
    return CycloContext(n)


def zeta_pow(ctx: CycloContext, e: int) -> CycloElem:
    return ctx.zeta_pow(e)


class CycloElem:
    """Immutable element of Q(zeta_n) in canonical coordinates.

    Internally an integer vector plus one shared positive denominator with
    content gcd 1 (zero is the all-zero vector over denominator 1), so
    equality is structural.
    """

    __slots__ = ("ctx", "num", "den")

    def __init__(self, ctx: CycloContext, num, den: int = 1, _raw: bool = False):
        self.ctx = ctx
        if _raw:
            self.num = num
            self.den = den
            return
        if den < 0:
            den = -den
            num = [-v for v in num]
        g = gcd(den, *num)
        if g > 1:
            den //= g
            num = [v // g for v in num]
        if not any(num):
            den = 1
        self.num = tuple(num)
        self.den = den

    # -- scalar coercion -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycloElem):
            if other.ctx.n != self.ctx.n:
                raise ValueError("elements from different cyclotomic contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return None

    # -- ring operations -------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        g = gcd(da, db)
        ma, mb = db // g, da // g
        num = [a * ma + b * mb for a, b in zip(self.num, other.num)]
        return CycloElem(self.ctx, num, da * ma)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        da, db = self.den, other.den
        g = gcd(da, db)
        ma, mb = db // g, da // g
        num = [a * ma - b * mb for a, b in zip(self.num, other.num)]
        return CycloElem(self.ctx, num, da * ma)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycloElem(self.ctx, tuple(-v for v in self.num), self.den, _raw=True)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            num = [v * q.numerator for v in self.num]
            return CycloElem(self.ctx, num, self.den * q.denominator)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        ctx = self.ctx
        d = ctx.degree
        a, b = self.num, other.num
        conv = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        num = conv[:d]
        pow_table = ctx._pow
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = pow_table[k]
                for i in range(d):
                    num[i] += c * row[i]
        return CycloElem(ctx, num, self.den * other.den)

    __rmul__ = __mul__

    def mul_zeta_pow(self, e: int) -> CycloElem:
        """Fast product with zeta^e (coordinate shift plus reduction)."""
        ctx = self.ctx
        e %= ctx.n
        if e == 0:
            return self
        d = ctx.degree
        num = [0] * e + list(self.num)
        out = num[:d] + [0] * max(0, d - len(num))
        pow_table = ctx._pow
        for k in range(d, len(num)):
            c = num[k]
            if c:
                row = pow_table[k]
                for i in range(d):
                    out[i] += c * row[i]
        return CycloElem(ctx, out, self.den)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            if q == 0:
                raise ZeroDivisionError("division by zero")
            num = [v * q.denominator for v in self.num]
            return CycloElem(self.ctx, num, self.den * q.numerator)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.ctx.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def inverse(self) -> CycloElem:
        """Multiplicative inverse via the extended Euclidean algorithm
        against Phi_n (Phi_n is irreducible over Q, so any nonzero residue
        is a unit)."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        ctx = self.ctx
        r0 = [Fraction(c) for c in ctx.phi]
        r1 = [Fraction(v, self.den) for v in self.num]
        while r1 and r1[-1] == 0:
            r1.pop()
        t0: list[Fraction] = []
        t1: list[Fraction] = [Fraction(1)]
        while len(r1) > 1:
            q, r = _frac_poly_divmod(r0, r1)
            r0, r1 = r1, r
            t0, t1 = t1, _frac_poly_sub(t0, _frac_poly_mul(q, t1))
        if not r1:
            raise ArithmeticError("element shares a factor with Phi_n")
        c = r1[0]
        inv = [t / c for t in t1]
        return ctx.from_coeffs(inv + [0] * (ctx.degree - len(inv)))

    # -- field automorphisms ----------------------------------------------

    def galois(self, t: int) -> CycloElem:
        """Image under the automorphism zeta -> zeta^t (t coprime to n)."""
        ctx = self.ctx
        n = ctx.n
        t %= n
        if gcd(t, n) != 1:
            raise ValueError(f"{t} is not coprime to {n}")
        d = ctx.degree
        pow_table = ctx._pow
        num = [0] * d
        for k, c in enumerate(self.num):
            if c:
                row = pow_table[(k * t) % n]
                for i in range(d):
                    num[i] += c * row[i]
        return CycloElem(ctx, num, self.den)

    def conjugate(self) -> CycloElem:
        """Complex conjugation, i.e. zeta -> zeta^(n-1)."""
        return self.galois(self.ctx.n - 1)

    # -- inspection --------------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        den = self.den
        return tuple(Fraction(v, den) for v in self.num)

    def as_rational(self):
        """The Fraction value when all higher coordinates vanish, else None."""
        if any(self.num[1:]):
            return None
        return Fraction(self.num[0], self.den)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def __bool__(self):
        return any(self.num)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return (not any(self.num[1:])) and self.num[0] == q.numerator \
                and self.den == q.denominator
        if not isinstance(other, CycloElem):
            return NotImplemented
        return self.ctx.n == other.ctx.n and self.den == other.den \
            and self.num == other.num

    def __hash__(self):
        return hash((self.ctx.n, self.num, self.den))

    def render(self, symbol: str = "z") -> str:
        """Human-readable "c0 + c1*z + ..." with zero terms dropped."""
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = _frac_str(mag)
            else:
                var = symbol if k == 1 else f"{symbol}^{k}"
                body = var if mag == 1 else f"{_frac_str(mag)}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        if not parts:
            return "0"
        return " ".join(parts)

    def __repr__(self):
        return f"CycloElem({self.render()!r}, n={self.ctx.n})"


def _frac_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# -- Fraction polynomial helpers for the extended Euclidean inverse --------


def _frac_poly_divmod(a: list[Fraction], b: list[Fraction]):
    r = list(a)
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    db = len(b) - 1
    lead = b[-1]
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if c:
            f = c / lead
            q[k - db] = f
            for i in range(db + 1):
                r[k - db + i] -= f * b[i]
    while r and r[-1] == 0:
        r.pop()
    while q and q[-1] == 0:
        q.pop()
    return q, r


def _frac_poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    while out and out[-1] == 0:
        out.pop()
    return out


def _frac_poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    while out and out[-1] == 0:
        out.pop()
    return out


def inv_one_minus_zeta(ctx: CycloContext, r: int) -> CycloElem:
    """Closed form for 1/(1 - zeta^r), r not divisible by n.

    (1 - zeta^r) * sum_{j<n} (j+1) zeta^(rj) = -n, so the inverse is
    -(1/n) sum_{j<n} (j+1) zeta^(rj).  Cheaper than the Euclidean route and
    cross-checked against it in the tests.
    """
    n = ctx.n
    r %= n
    if r == 0:
        raise ZeroDivisionError("1 - zeta^0 is zero")
    d = ctx.degree
    pow_table = ctx._pow
    num = [0] * d
    for j in range(n):
        row = pow_table[(r * j) % n]
        w = j + 1
        for i in range(d):
            num[i] -= w * row[i]
    return CycloElem(ctx, num, n)
