"""Exact dense linear algebra over Q(zeta_n).

Determinants use Gaussian elimination with exact field division (first
nonzero pivot down the column, sign tracked through row swaps); the
characteristic polynomial uses the Faddeev-LeVerrier recurrence, whose
divisions by 1..dim are exact in characteristic zero.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .combinatorics import perm_sign
from .cyclotomic import CycloContext, CycloElem
from .polynomials import CPoly

PERM_DET_GUARDRAIL = 8


class CMatrix:
    """Row-major dense matrix of CycloElem sharing one context."""

    __slots__ = ("ctx", "rows", "cols", "data")

    def __init__(self, ctx: CycloContext, rows_of_entries):
        data: list[CycloElem] = []
        rows = len(rows_of_entries)
        cols = len(rows_of_entries[0]) if rows else 0
        for row in rows_of_entries:
            if len(row) != cols:
                raise ValueError("ragged rows")
            for e in row:
                if not isinstance(e, CycloElem):
                    e = ctx.from_rational(e)
                elif e.ctx.n != ctx.n:
                    raise ValueError("entry from a different context")
                data.append(e)
        self.ctx = ctx
        self.rows = rows
        self.cols = cols
        self.data = tuple(data)

    @classmethod
    def identity(cls, ctx: CycloContext, dim: int) -> CMatrix:
        one, zero = ctx.one(), ctx.zero()
        return cls(ctx, [[one if i == j else zero for j in range(dim)] for i in range(dim)])

    def __getitem__(self, rc) -> CycloElem:
        r, c = rc
        return self.data[r * self.cols + c]

    def row_lists(self) -> list[list[CycloElem]]:
        return [list(self.data[r * self.cols:(r + 1) * self.cols]) for r in range(self.rows)]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __eq__(self, other):
        if not isinstance(other, CMatrix):
            return NotImplemented
        return (self.ctx.n, self.rows, self.cols, self.data) == \
            (other.ctx.n, other.rows, other.cols, other.data)

    def __hash__(self):
        return hash((self.ctx.n, self.rows, self.cols, self.data))

    def __repr__(self):
        return f"CMatrix({self.rows}x{self.cols}, n={self.ctx.n})"

    def __matmul__(self, other: CMatrix) -> CMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        return CMatrix(self.ctx, _mat_mul(self.row_lists(), other.row_lists(), self.ctx))

    # ------------------------------------------------------------------

    def det(self) -> CycloElem:
        """Exact determinant; the empty matrix has determinant 1."""
        if not self.is_square():
            raise ValueError("determinant requires a square matrix")
        ctx = self.ctx
        dim = self.rows
        if dim == 0:
            return ctx.one()
        a = self.row_lists()
        acc = ctx.one()
        negate = False
        for col in range(dim):
            pivot_row = None
            for r in range(col, dim):
                if a[r][col]:
                    pivot_row = r
                    break
            if pivot_row is None:
                return ctx.zero()
            if pivot_row != col:
                a[col], a[pivot_row] = a[pivot_row], a[col]
                negate = not negate
            pivot = a[col][col]
            acc = acc * pivot
            if col == dim - 1:
                break
            pivot_inv = pivot.inverse()
            top = a[col]
            for r in range(col + 1, dim):
                lead = a[r][col]
                if lead:
                    f = lead * pivot_inv
                    row = a[r]
                    for c in range(col + 1, dim):
                        row[c] = row[c] - f * top[c]
        return -acc if negate else acc

    def perm_expansion_det(self, force: bool = False) -> CycloElem:
        """Leibniz-style oracle: sum over all permutations of
        sign * product of picked entries.  Factorial cost, so guarded."""
        if not self.is_square():
            raise ValueError("determinant requires a square matrix")
        dim = self.rows
        if dim > PERM_DET_GUARDRAIL and not force:
            raise ValueError(
                f"permutation expansion of dimension {dim} exceeds the "
                f"guardrail ({PERM_DET_GUARDRAIL}); pass force=True to override")
        ctx = self.ctx
        total = ctx.zero()
        data, cols = self.data, self.cols
        for perm in permutations(range(dim)):
            prod = ctx.one()
            for j, img in enumerate(perm):
                e = data[j * cols + img]
                if not e:
                    prod = None
                    break
                prod = prod * e
            if prod is None:
                continue
            if perm_sign(tuple(i + 1 for i in perm)) == 1:
                total = total + prod
            else:
                total = total - prod
        return total

    def trace(self) -> CycloElem:
        acc = self.ctx.zero()
        for i in range(self.rows):
            acc = acc + self[i, i]
        return acc

    def charpoly(self) -> CPoly:
        """Monic characteristic polynomial det(x*I - M) by the
        Faddeev-LeVerrier recurrence."""
        if not self.is_square():
            raise ValueError("characteristic polynomial requires a square matrix")
        ctx = self.ctx
        dim = self.rows
        coeffs = [ctx.zero()] * dim + [ctx.one()]
        if dim == 0:
            return CPoly(ctx, coeffs)
        m = self.row_lists()
        mk = [row[:] for row in m]
        c = _trace_of(mk, ctx) / -1
        coeffs[dim - 1] = c
        for k in range(2, dim + 1):
            for i in range(dim):
                mk[i][i] = mk[i][i] + c
            mk = _mat_mul(m, mk, ctx)
            c = _trace_of(mk, ctx) / -k
            coeffs[dim - k] = c
        return CPoly(ctx, coeffs)

    def matvec(self, vec) -> list[CycloElem]:
        if len(vec) != self.cols:
            raise ValueError("vector length does not match columns")
        ctx = self.ctx
        out = []
        for r in range(self.rows):
            acc = ctx.zero()
            base = r * self.cols
            for c, v in enumerate(vec):
                e = self.data[base + c]
                if e and v:
                    acc = acc + e * v
            out.append(acc)
        return out

    def conj_transpose(self) -> CMatrix:
        return CMatrix(self.ctx, [[self[r, c].conjugate() for r in range(self.rows)]
                                  for c in range(self.cols)])

    def is_hermitian(self) -> bool:
        if not self.is_square():
            return False
        for r in range(self.rows):
            for c in range(r, self.cols):
                if self[r, c] != self[c, r].conjugate():
                    return False
        return True

    def minor_delete(self, j: int) -> CMatrix:
        """Delete row j and column j (1-based j)."""
        if not self.is_square():
            raise ValueError("principal minor requires a square matrix")
        if not 1 <= j <= self.rows:
            raise ValueError(f"j must lie in 1..{self.rows}")
        idx = j - 1
        keep = [r for r in range(self.rows) if r != idx]
        return CMatrix(self.ctx, [[self[r, c] for c in keep] for r in keep])

    def mm_prime(self) -> CMatrix:
        """Difference matrix m[j][k] - m[j][0] - m[0][k] + m[0][0] over
        j,k >= 1; the companion of the affine determinant split."""
        if not self.is_square():
            raise ValueError("requires a square matrix")
        dim = self.rows
        if dim < 2:
            raise ValueError("requires dimension >= 2")
        m00 = self[0, 0]
        out = []
        for j in range(1, dim):
            mj0 = self[j, 0]
            out.append([self[j, k] - mj0 - self[0, k] + m00 for k in range(1, dim)])
        return CMatrix(self.ctx, out)

    def det_affine(self) -> tuple[CycloElem, CycloElem]:
        """(d0, d1) with det[x + m_jk] = d0 + d1*x for every x;
        d0 = det(M), d1 = det of the mm_prime difference matrix (0 for
        dimension 1 by convention)."""
        if not self.is_square():
            raise ValueError("requires a square matrix")
        d0 = self.det()
        if self.rows < 2:
            return d0, self.ctx.zero()
        return d0, self.mm_prime().det()

    def add_scalar(self, x) -> CMatrix:
        """Matrix with x added to every entry (the det[x + m_jk] shift)."""
        if not isinstance(x, CycloElem):
            x = self.ctx.from_rational(x)
        return CMatrix(self.ctx, [[self[r, c] + x for c in range(self.cols)]
                                  for r in range(self.rows)])


def _mat_mul(a: list[list[CycloElem]], b: list[list[CycloElem]], ctx: CycloContext):
    dim_i = len(a)
    dim_k = len(b)
    dim_j = len(b[0]) if dim_k else 0
    zero = ctx.zero()
    out = []
    for i in range(dim_i):
        ai = a[i]
        row = []
        for j in range(dim_j):
            acc = zero
            for k in range(dim_k):
                e = ai[k]
                f = b[k][j]
                if e and f:
                    acc = acc + e * f
            row.append(acc)
        out.append(row)
    return out


def _trace_of(m: list[list[CycloElem]], ctx: CycloContext) -> CycloElem:
    acc = ctx.zero()
    for i in range(len(m)):
        acc = acc + m[i][i]
    return acc


def random_element(ctx: CycloContext, rng, span: int = 3) -> CycloElem:
    """Small random element for property tests (coordinates in [-span, span],
    denominators in 1..3)."""
    coeffs = [Fraction(rng.randint(-span, span), rng.randint(1, 3))
              for _ in range(ctx.degree)]
    return ctx.from_coeffs(coeffs)


def random_matrix(ctx: CycloContext, rng, dim: int, span: int = 3) -> CMatrix:
    return CMatrix(ctx, [[random_element(ctx, rng, span) for _ in range(dim)]
                         for _ in range(dim)])
