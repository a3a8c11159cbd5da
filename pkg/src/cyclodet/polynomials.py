"""Dense univariate polynomials over Q(zeta_n).

These carry the indeterminate x of the rational-function identities and the
characteristic polynomials.  Coefficients are stored lowest degree first and
trimmed, so the zero polynomial is the empty tuple and equality is structural.
"""

from __future__ import annotations

from fractions import Fraction

from .cyclotomic import CycloContext, CycloElem


class CPoly:
    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: CycloContext, coeffs=()):
        self.ctx = ctx
        vals = []
        for c in coeffs:
            if isinstance(c, CycloElem):
                if c.ctx.n != ctx.n:
                    raise ValueError("coefficient from a different context")
                vals.append(c)
            else:
                vals.append(ctx.from_rational(c))
        while vals and not vals[-1]:
            vals.pop()
        self.coeffs = tuple(vals)

    @classmethod
    def zero(cls, ctx: CycloContext) -> CPoly:
        return cls(ctx)

    @classmethod
    def one(cls, ctx: CycloContext) -> CPoly:
        return cls(ctx, [ctx.one()])

    @classmethod
    def x(cls, ctx: CycloContext) -> CPoly:
        return cls(ctx, [ctx.zero(), ctx.one()])

    @classmethod
    def x_pow(cls, ctx: CycloContext, k: int) -> CPoly:
        return cls(ctx, [ctx.zero()] * k + [ctx.one()])

    def degree(self) -> int:
        """Degree of the leading term; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: CPoly):
        if self.ctx.n != other.ctx.n:
            raise ValueError("polynomials from different contexts")

    def __add__(self, other):
        if not isinstance(other, CPoly):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return CPoly(self.ctx, out)

    def __sub__(self, other):
        if not isinstance(other, CPoly):
            return NotImplemented
        self._check(other)
        out = list(self.coeffs) + [self.ctx.zero()] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] = out[i] - c
        return CPoly(self.ctx, out)

    def __neg__(self):
        return CPoly(self.ctx, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycloElem)):
            return self.scale(other)
        if not isinstance(other, CPoly):
            return NotImplemented
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return CPoly.zero(self.ctx)
        zero = self.ctx.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return CPoly(self.ctx, out)

    __rmul__ = __mul__

    def scale(self, factor) -> CPoly:
        if not isinstance(factor, CycloElem):
            factor = self.ctx.from_rational(factor)
        return CPoly(self.ctx, [c * factor for c in self.coeffs])

    def shift(self, k: int) -> CPoly:
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return CPoly(self.ctx, [self.ctx.zero()] * k + list(self.coeffs))

    def evaluate(self, point) -> CycloElem:
        if not isinstance(point, CycloElem):
            point = self.ctx.from_rational(point)
        acc = self.ctx.zero()
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def coeff(self, k: int) -> CycloElem:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return self.ctx.zero()

    def __eq__(self, other):
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.ctx.n == other.ctx.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.ctx.n, self.coeffs))

    def render(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            q = c.as_rational()
            xpart = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            if q is None:
                body = f"({c.render()})"
                body = body + ("*" + xpart if xpart else "")
                sign = "+"
            else:
                sign = "+" if q > 0 else "-"
                mag = abs(q)
                if xpart and mag == 1:
                    body = xpart
                else:
                    mag_s = str(mag.numerator) if mag.denominator == 1 else f"{mag.numerator}/{mag.denominator}"
                    body = mag_s + ("*" + xpart if xpart else "")
            if not parts:
                parts.append(body if sign == "+" else f"-{body}")
            else:
                parts.append(f"{sign} {body}")
        return " ".join(parts) if parts else "0"

    def __repr__(self):
        return f"CPoly({self.render()!r}, n={self.ctx.n})"


def geometric_sum(ctx: CycloContext) -> CPoly:
    """1 + x + ... + x^(n-1)."""
    return CPoly(ctx, [ctx.one()] * ctx.n)


def prod_one_minus_x_zeta(ctx: CycloContext, exclude=frozenset()) -> CPoly:
    """Product of (1 - x*zeta^r) over r in 0..n-1 outside ``exclude``.

    With nothing excluded this is 1 - x^n, since the zeta^r run over all
    n-th roots of unity.
    """
    exclude = set(exclude)
    for r in exclude:
        if not 0 <= r < ctx.n:
            raise ValueError("excluded residues must lie in 0..n-1")
    acc = CPoly.one(ctx)
    for r in range(ctx.n):
        if r not in exclude:
            acc = acc * CPoly(ctx, [ctx.one(), -ctx.zeta_pow(r)])
    return acc


def partial_fraction_check(ctx: CycloContext, s: int) -> bool:
    """Exact polynomial form of the expansion
    sum_{0<r<n} zeta^(-rs)/(1 - x*zeta^r) = (sum_j x^j - n*x^s)/(x^n - 1).

    Both sides are multiplied by x^n - 1; the left side becomes
    (x-1) * sum_{0<r<n} zeta^(-rs) * prod_{0<r'<n, r'!=r} (1 - x*zeta^r').
    """
    n = ctx.n
    if not 0 <= s <= n - 1:
        raise ValueError("s must lie in 0..n-1")
    lhs = CPoly.zero(ctx)
    for r in range(1, n):
        term = prod_one_minus_x_zeta(ctx, exclude={0, r})
        lhs = lhs + term.scale(ctx.zeta_pow(-r * s))
    lhs = lhs * CPoly(ctx, [-1, 1])  # the (x - 1) factor
    rhs = geometric_sum(ctx) - CPoly.x_pow(ctx, s).scale(n)
    return lhs == rhs


def row_sum_x_check(ctx: CycloContext, k: int, s: int) -> bool:
    """Exact polynomial form of the x-weighted row-sum identity
    sum_{j!=k} (1 + x*zeta^(j-k))/(1 - x*zeta^(j-k)) * zeta^(s(k-j))
      = 1 + 2*(sum_j x^j - n*x^s)/(x^n - 1) - n*[s == 0].

    Both sides are cleared of the x^n - 1 denominator before comparing.
    """
    n = ctx.n
    if not 1 <= k <= n:
        raise ValueError("k must lie in 1..n")
    if not 0 <= s <= n - 1:
        raise ValueError("s must lie in 0..n-1")
    x_minus_1 = CPoly(ctx, [-1, 1])
    lhs = CPoly.zero(ctx)
    for j in range(1, n + 1):
        if j == k:
            continue
        r = (j - k) % n
        partial = prod_one_minus_x_zeta(ctx, exclude={0, r})
        numer = CPoly(ctx, [ctx.one(), ctx.zeta_pow(r)])  # 1 + x*zeta^r
        lhs = lhs + (numer * partial * x_minus_1).scale(ctx.zeta_pow(-s * r))
    x_n_minus_1 = CPoly.x_pow(ctx, n) - CPoly.one(ctx)
    rhs = x_n_minus_1.scale(1 - (n if s == 0 else 0)) \
        + (geometric_sum(ctx) - CPoly.x_pow(ctx, s).scale(n)).scale(2)
    return lhs == rhs
