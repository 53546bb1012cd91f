"""Exact dense integer matrices: Smith normal form, mod-q kernels, pencil determinants.

Entries are Python ints, so all arithmetic is exact at any magnitude. Matrices
are immutable; the JSON wire format is {"rows": [[...], ...]} with entries
either ints or decimal strings (strings are used on output past 64 bits).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import polynomials as poly
from .errors import CapExceededError, InputError

_I64_MAX = 2**63 - 1

DEFAULT_ENUM_CAP = 10**7


def _prime_power(q: int) -> tuple[int, int]:
    """Return (p, k) with q = p**k, or raise InputError."""
    if q < 2:
        raise InputError(f"modulus {q} is not a prime power")
    p = None
    m = q
    for d in itertools.chain([2], range(3, q + 1, 2)):
        if d * d > m:
            break
        if m % d == 0:
            p = d
            while m % d == 0:
                m //= d
            break
    if p is None:
        p = m
        m = 1
    if m != 1:
        raise InputError(f"modulus {q} is not a prime power")
    k = 0
    t = q
    while t > 1:
        t //= p
        k += 1
    return p, k


class IntMatrix:
    """Immutable dense matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data):
        rows = [tuple(int(x) for x in row) for row in data]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise InputError("ragged matrix rows")
        else:
            width = 0
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, r: int, c: int) -> "IntMatrix":
        return cls([[0] * c for _ in range(r)])

    @classmethod
    def block_diag(cls, blocks) -> "IntMatrix":
        blocks = list(blocks)
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        out = [[0] * m for _ in range(n)]
        i0 = j0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[i0 + i][j0 + j] = b[i, j]
            i0 += b.rows
            j0 += b.cols
        return cls(out)

    # -- basics ------------------------------------------------------------

    def __getitem__(self, idx):
        i, j = idx
        return self._data[i][j]

    def row(self, i: int):
        return self._data[i]

    def tolists(self):
        return [list(r) for r in self._data]

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        return f"IntMatrix({self.tolists()!r})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> "IntMatrix":
        return IntMatrix([[self._data[i][j] for i in range(self.rows)]
                          for j in range(self.cols)])

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise InputError("matrix shape mismatch in addition")
        return IntMatrix([[a + b for a, b in zip(r1, r2)]
                          for r1, r2 in zip(self._data, other._data)])

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-x for x in r] for r in self._data])

    def __mul__(self, k: int) -> "IntMatrix":
        return IntMatrix([[x * k for x in r] for r in self._data])

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError("matrix shape mismatch in product")
        ot = other.transpose()._data
        return IntMatrix([[sum(a * b for a, b in zip(row, col)) for col in ot]
                          for row in self._data])

    def matvec(self, v):
        if len(v) != self.cols:
            raise InputError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, v)) for row in self._data)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self._data[i][j] == self._data[j][i]
            for i in range(self.rows) for j in range(i))

    def det(self) -> int:
        """Exact determinant by Bareiss fraction-free elimination."""
        if not self.is_square:
            raise InputError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return 1
        m = self.tolists()
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    # -- JSON wire format ----------------------------------------------------

    @classmethod
    def from_json_obj(cls, obj) -> "IntMatrix":
        if not isinstance(obj, dict) or "rows" not in obj:
            raise InputError('matrix JSON must be an object with a "rows" key')
        try:
            data = [[int(x) for x in row] for row in obj["rows"]]
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad matrix entry: {exc}") from exc
        return cls(data)

    def to_json_obj(self):
        def enc(x):
            return x if -_I64_MAX <= x <= _I64_MAX else str(x)
        return {"rows": [[enc(x) for x in row] for row in self._data]}

    @classmethod
    def load(cls, path) -> "IntMatrix":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json_obj(json.load(fh))


@dataclass(frozen=True)
class SNFResult:
    """Smith normal form D = U @ M @ V with U, V unimodular and D diagonal."""

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> tuple:
        n = min(self.D.rows, self.D.cols)
        return tuple(self.D[i, i] for i in range(n))


def smith_normal_form(M: IntMatrix) -> SNFResult:
    """Canonical Smith normal form over Z.

    Pivots are chosen with minimal absolute value to limit coefficient growth;
    the diagonal is normalized non-negative with each entry dividing the next.
    """
    r, c = M.rows, M.cols
    m = M.tolists()
    U = IntMatrix.identity(r).tolists()
    V = IntMatrix.identity(c).tolists()

    def row_op(i, j, q):  # row_i -= q * row_j
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for row in m:
            row[i] -= q * row[j]
        for row in V:
            row[i] -= q * row[j]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(r, c):
        # minimal |.| nonzero pivot in the trailing submatrix
        piv = None
        best = None
        for i in range(t, r):
            for j in range(t, c):
                x = m[i][j]
                if x != 0 and (best is None or abs(x) < best):
                    best = abs(x)
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        dirty = False
        for i in range(t + 1, r):
            q = m[i][t] // m[t][t]
            if q:
                row_op(i, t, q)
            if m[i][t]:
                dirty = True
        for j in range(t + 1, c):
            q = m[t][j] // m[t][t]
            if q:
                col_op(j, t, q)
            if m[t][j]:
                dirty = True
        if dirty:
            continue
        # enforce divisibility of the remaining block by the pivot
        bad = None
        for i in range(t + 1, r):
            if any(m[i][j] % m[t][t] for j in range(t + 1, c)):
                bad = i
                break
        if bad is not None:
            row_op(t, bad, -1)  # fold the offending row into the pivot row
            continue
        t += 1

    for i in range(min(r, c)):
        if m[i][i] < 0:
            m[i] = [-x for x in m[i]]
            U[i] = [-x for x in U[i]]
    return SNFResult(D=IntMatrix(m), U=IntMatrix(U), V=IntMatrix(V))


def invariant_factors(M: IntMatrix) -> tuple:
    """Diagonal entries of the SNF with the units (1) dropped, divisibility order."""
    return tuple(d for d in smith_normal_form(M).diagonal if d != 1)


@dataclass(frozen=True)
class ModKernel:
    """Structured description of {c in (Z/q)^n : M c = 0 mod q}.

    ``generators`` is a tuple of value vectors; ``generator_orders`` the
    corresponding cyclic orders. Every solution is a unique combination
    sum(t_i * g_i) with 0 <= t_i < order_i.
    """

    modulus: int
    dimension: int
    generators: tuple
    generator_orders: tuple
    order: int

    def enumerate(self, cap: int = DEFAULT_ENUM_CAP) -> list:
        """All solutions, lexicographically sorted; raises past the cap."""
        if self.order > cap:
            raise CapExceededError(self.order, cap, "kernel vectors")
        q = self.modulus
        sols = []
        for ts in itertools.product(*(range(o) for o in self.generator_orders)):
            v = [0] * self.dimension
            for t, g in zip(ts, self.generators):
                if t:
                    for k in range(self.dimension):
                        v[k] = (v[k] + t * g[k]) % q
            sols.append(tuple(v))
        sols.sort()
        return sols


def kernel_mod_q(M: IntMatrix, q: int) -> ModKernel:
    """Solve M c = 0 (mod q) for square M and prime-power q, via SNF.

    With U M V = D, solutions are c = V w where each w_i ranges over the
    multiples of q/gcd(d_i, q); the kernel order is the product of the gcds.
    """
    if not M.is_square:
        raise InputError("kernel_mod_q expects a square matrix")
    _prime_power(q)
    n = M.rows
    snf = smith_normal_form(M)
    gens = []
    orders = []
    order = 1
    for i in range(n):
        d = snf.D[i, i]
        g = gcd(d, q) if d else q
        order *= g
        if g > 1:
            step = q // g
            col = tuple((snf.V[k, i] * step) % q for k in range(n))
            gens.append(col)
            orders.append(g)
    return ModKernel(modulus=q, dimension=n, generators=tuple(gens),
                     generator_orders=tuple(orders), order=order)


def in_column_image(M: IntMatrix, v) -> bool:
    """True when v lies in the integer column span of M.

    With U M V = D, solvability of M x = v is equivalent to d_i | (U v)_i for
    the diagonal entries and (U v)_i = 0 beyond the nonzero diagonal.
    """
    if len(v) != M.rows:
        raise InputError("vector length does not match the matrix")
    snf = smith_normal_form(M)
    w = snf.U.matvec(v)
    k = min(M.rows, M.cols)
    for i, wi in enumerate(w):
        d = snf.D[i, i] if i < k else 0
        if d == 0:
            if wi != 0:
                return False
        elif wi % d != 0:
            return False
    return True


def det_linear_pencil(A: IntMatrix, B: IntMatrix) -> poly.Poly:
    """Exact coefficients of det(A - t*B) by interpolation at integer points.

    Evaluates Bareiss determinants at t = 0, 1, -1, 2, -2, ... and rebuilds the
    polynomial with Newton divided differences over Fraction; integrality of
    the result and agreement at all sample points are checked.
    """
    if not (A.is_square and B.is_square and A.rows == B.rows):
        raise InputError("pencil requires square matrices of equal size")
    n = A.rows
    if n == 0:
        return poly.ONE
    pts = [0]
    k = 1
    while len(pts) < n + 1:
        pts.append(k)
        if len(pts) < n + 1:
            pts.append(-k)
        k += 1
    vals = []
    for t in pts:
        Mt = IntMatrix([[A[i, j] - t * B[i, j] for j in range(n)] for i in range(n)])
        vals.append(Mt.det())

    dd = [Fraction(v) for v in vals]
    m = len(pts)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (pts[i] - pts[i - j])
    coeffs = [Fraction(0)] * m
    coeffs[0] = dd[m - 1]
    for k in range(m - 2, -1, -1):
        nxt = [Fraction(0)] * m
        for d in range(m - 1):
            nxt[d + 1] += coeffs[d]
        for d in range(m):
            nxt[d] -= pts[k] * coeffs[d]
        nxt[0] += dd[k]
        coeffs = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("pencil interpolation produced non-integer coefficients")
    out = poly.normalize([int(c) for c in coeffs])
    for t, v in zip(pts, vals):
        if poly.evaluate(out, t) != v:
            raise ArithmeticError("pencil interpolation failed the exactness check")
    return out
