"""Exact arithmetic in Q(zeta_n) and certified signatures of Hermitian forms.

Field elements are residues modulo the n-th cyclotomic polynomial, stored as
an integer coefficient vector over a single positive denominator. Complex
conjugation is the automorphism zeta -> zeta^(n-1) = 1/zeta, which restricts
to honest complex conjugation under every embedding zeta = e^(2*pi*i*j/n).

Signs of exactly-nonzero real elements are certified by interval arithmetic at
escalating precision: coefficients are integers below the working precision
(so conversions are exact) and mpmath's outward-rounded pi/cos enclosures make
the final interval rigorous. Termination is guaranteed because exact zero is
decidable in the residue representation and is rejected up front.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from mpmath import iv

from . import polynomials as poly


def _divmod_frac(a, b):
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(r) >= len(b):
        f = r[-1] / lead
        k = len(r) - len(b)
        q[k] += f
        for i, c in enumerate(b):
            r[k + i] -= f * c
        while r and r[-1] == 0:
            r.pop()
    while q and q[-1] == 0:
        q.pop()
    return tuple(q), tuple(r)


def _mul_frac(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def _sub_frac(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
           for i in range(n)]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class CyclotomicField:
    """Q[x] / Phi_n(x), with x standing for a primitive n-th root of unity."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("cyclotomic order must be positive")
        self.n = n
        self.phi = poly.cyclotomic(n)
        self.degree = poly.degree(self.phi)
        # x^k in the power basis for k = 0 .. max(2*deg-2, n)
        rows: list[tuple] = []
        for k in range(max(2 * self.degree - 1, n + 1)):
            if k < self.degree:
                rows.append(tuple(1 if i == k else 0 for i in range(self.degree)))
            else:
                prev = rows[k - 1]
                shifted = [0] + list(prev[:-1])
                top = prev[-1]
                if top:
                    for i in range(self.degree):
                        shifted[i] -= top * self.phi[i]
                rows.append(tuple(shifted))
        self._power_rows = rows
        self.zero = CycloNum(self, (0,) * self.degree, 1)
        self.one = self.from_int(1)

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def from_int(self, k: int) -> "CycloNum":
        c = [0] * self.degree
        c[0] = k
        return CycloNum(self, tuple(c), 1)

    def power_of_zeta(self, k: int) -> "CycloNum":
        return CycloNum(self, self._power_rows[k % self.n], 1)

    def reduce_ints(self, coeffs) -> tuple:
        out = [0] * self.degree
        for k, c in enumerate(coeffs):
            if c == 0:
                continue
            row = self._power_rows[k]
            for i in range(self.degree):
                out[i] += c * row[i]
        return tuple(out)

    def from_fractions(self, coeffs) -> "CycloNum":
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = [int(c * den) for c in coeffs]
        nums += [0] * (max(0, self.degree - len(nums)))
        return CycloNum(self, self.reduce_ints(nums), den)


class CycloNum:
    """An element of Q(zeta_n): integer coefficient vector over one denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CyclotomicField, num: tuple, den: int):
        if den == 0:
            raise ZeroDivisionError
        if den < 0:
            den = -den
            num = tuple(-c for c in num)
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = tuple(c // g for c in num)
            den //= g
        self.field = field
        self.num = num
        self.den = den

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.num)

    def __eq__(self, other):
        return (isinstance(other, CycloNum) and self.field is other.field
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return f"CycloNum({self.num}, den={self.den})"

    def __add__(self, other: "CycloNum") -> "CycloNum":
        d1, d2 = self.den, other.den
        g = gcd(d1, d2)
        m1, m2 = d2 // g, d1 // g
        num = tuple(a * m1 + b * m2 for a, b in zip(self.num, other.num))
        return CycloNum(self.field, num, d1 * m1)

    def __sub__(self, other: "CycloNum") -> "CycloNum":
        return self + (-other)

    def __neg__(self) -> "CycloNum":
        return CycloNum(self.field, tuple(-c for c in self.num), self.den)

    def __mul__(self, other: "CycloNum") -> "CycloNum":
        f = self.field
        a, b = self.num, other.num
        raw = [0] * (2 * f.degree - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    raw[i + j] += x * y
        return CycloNum(f, f.reduce_ints(raw), self.den * other.den)

    def inverse(self) -> "CycloNum":
        """Field inverse by the extended Euclidean algorithm against Phi_n."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero field element")
        f = self.field
        a = tuple(Fraction(c, self.den) for c in self.num)
        while a and a[-1] == 0:
            a = a[:-1]
        b = tuple(Fraction(c) for c in f.phi)
        r0, r1 = a, b
        s0, s1 = (Fraction(1),), ()
        while r1:
            q, r = _divmod_frac(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _sub_frac(s0, _mul_frac(q, s1))
        if len(r0) != 1:
            raise ArithmeticError("gcd with the cyclotomic polynomial is not constant")
        c = r0[0]
        return f.from_fractions([x / c for x in s0])

    def conjugate(self) -> "CycloNum":
        f = self.field
        raw = [0] * (f.n + 1)
        for k, c in enumerate(self.num):
            if c:
                raw[(f.n - k) % f.n] += c
        return CycloNum(f, f.reduce_ints(raw), self.den)

    def is_real(self) -> bool:
        return self.conjugate() == self


_MAX_PREC = 1 << 20


def sign_at_unit_root(x: CycloNum, j: int) -> int:
    """Certified sign of the real element x at the embedding zeta = e^(2*pi*i*j/n)."""
    if x.is_zero():
        raise ValueError("sign of an exactly zero element")
    if not x.is_real():
        raise ValueError("sign of a non-real element")
    n = x.field.n
    coeffs = x.num  # the denominator is positive and cannot change the sign
    maxbits = max(abs(c).bit_length() for c in coeffs)
    prec = max(64, maxbits + 32)
    while prec <= _MAX_PREC:
        old = iv.prec
        try:
            iv.prec = max(prec, maxbits + 32)
            total = iv.mpf(0)
            for k, c in enumerate(coeffs):
                if c == 0:
                    continue
                num = (2 * j * k) % (2 * n)
                angle = iv.pi * iv.mpf(num) / iv.mpf(n)
                total += iv.mpf(c) * iv.cos(angle)
            if total > 0:
                return 1
            if total < 0:
                return -1
        finally:
            iv.prec = old
        prec *= 2
    raise ArithmeticError("interval sign evaluation failed to converge")


def hermitian_signature(entries, field: CyclotomicField, j: int) -> tuple[int, int]:
    """(positive, negative) inertia counts of a nonsingular Hermitian matrix.

    Symmetric elimination with 1x1 pivots on nonzero diagonal entries and
    2x2 hyperbolic blocks (zero diagonal, nonzero off-diagonal) contributing
    one eigenvalue of each sign. ``entries`` is a square list of lists of
    CycloNum, Hermitian with respect to conjugation; since the form is
    nonsingular, the elimination always terminates with all rows consumed.
    """
    m = [row[:] for row in entries]
    active = list(range(len(m)))
    pos = neg = 0
    while active:
        k = next((i for i in active if not m[i][i].is_zero()), None)
        if k is not None:
            d = m[k][k]
            if sign_at_unit_root(d, j) > 0:
                pos += 1
            else:
                neg += 1
            dinv = d.inverse()
            active.remove(k)
            col = {i: m[i][k] for i in active}
            for i in active:
                if col[i].is_zero():
                    continue
                fi = col[i] * dinv
                for l in active:
                    if not m[k][l].is_zero():
                        m[i][l] = m[i][l] - fi * m[k][l]
            continue
        pair = None
        for a_idx, i in enumerate(active):
            for l in active[a_idx + 1:]:
                if not m[i][l].is_zero():
                    pair = (i, l)
                    break
            if pair:
                break
        if pair is None:
            raise ArithmeticError("singular Hermitian form in signature elimination")
        i0, l0 = pair
        pos += 1
        neg += 1
        b = m[i0][l0]
        binv = b.inverse()
        bbarinv = binv.conjugate()
        active.remove(i0)
        active.remove(l0)
        ci = {t: m[t][i0] for t in active}
        cl = {t: m[t][l0] for t in active}
        for t in active:
            for u in active:
                # Schur complement of the hyperbolic block [[0, b], [conj(b), 0]]
                m[t][u] = m[t][u] - ci[t] * (bbarinv * m[l0][u]) - cl[t] * (binv * m[i0][u])
    return pos, neg
