"""Dense univariate polynomials with exact coefficients.

Polynomials are tuples of coefficients in ascending degree order, normalized
so the last entry is nonzero; the zero polynomial is the empty tuple.
Integer tuples are used wherever the algebra stays in Z (products, cyclotomic
polynomials, exact division); Sturm counting works over Fraction.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Poly = tuple  # coefficients, ascending; () is the zero polynomial

ZERO: Poly = ()
ONE: Poly = (1,)


def normalize(coeffs) -> Poly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(p: Poly) -> int:
    """Degree with deg 0 = -1 convention for the zero polynomial."""
    return len(p) - 1


def evaluate(p: Poly, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                      for i in range(n)])


def neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def sub(p: Poly, q: Poly) -> Poly:
    return add(p, neg(q))


def mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return ZERO
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return tuple(out)


def scale(p: Poly, k) -> Poly:
    if k == 0:
        return ZERO
    return tuple(c * k for c in p)


def shift(p: Poly, e: int) -> Poly:
    """Multiply by x**e."""
    if not p:
        return ZERO
    return (0,) * e + p


def pow_(p: Poly, e: int) -> Poly:
    out: Poly = ONE
    base = p
    while e:
        if e & 1:
            out = mul(out, base)
        base = mul(base, base)
        e >>= 1
    return out


def divmod_exact_int(p: Poly, d: Poly) -> tuple[Poly, Poly]:
    """Division over Z valid when d is monic or the division is exact."""
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    q = [0] * max(len(p) - len(d) + 1, 0)
    lead = d[-1]
    while len(r) >= len(d) and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) < len(d):
            break
        if r[-1] % lead != 0:
            raise ValueError("inexact integer polynomial division")
        f = r[-1] // lead
        k = len(r) - len(d)
        q[k] = f
        for i, c in enumerate(d):
            r[k + i] -= f * c
    return normalize(q), normalize(r)


def divides(d: Poly, p: Poly) -> bool:
    """True when d | p over Q (hence over Z for monic d)."""
    if not p:
        return True
    if not d:
        return False
    r = [Fraction(c) for c in p]
    lead = Fraction(d[-1])
    while len(r) >= len(d):
        f = r[-1] / lead
        k = len(r) - len(d)
        for i, c in enumerate(d):
            r[k + i] -= f * c
        while r and r[-1] == 0:
            r.pop()
        if not r:
            return True
    return not r


def derivative(p: Poly) -> Poly:
    return normalize([i * c for i, c in enumerate(p)][1:])


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial over Z."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    num = normalize([-1] + [0] * (n - 1) + [1])  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            num, rem = divmod_exact_int(num, cyclotomic(d))
            assert not rem
    return num


def content(p: Poly) -> int:
    g = 0
    for c in p:
        g = gcd(g, c)
    return g


def primitive_part(p: Poly) -> Poly:
    g = content(p)
    if g <= 1:
        return p
    return tuple(c // g for c in p)


def _frac(p: Poly) -> tuple[Fraction, ...]:
    return tuple(Fraction(c) for c in p)


def _rem_frac(p, d):
    """Remainder of p by d over Fraction tuples."""
    r = list(p)
    while len(r) >= len(d) > 0:
        f = r[-1] / d[-1]
        k = len(r) - len(d)
        for i, c in enumerate(d):
            r[k + i] -= f * c
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def gcd_poly(p: Poly, q: Poly) -> Poly:
    """Monic-free gcd over Q, returned as a primitive integer polynomial."""
    a, b = _frac(p), _frac(q)
    while b:
        a, b = b, _rem_frac(a, b)
    if not a:
        return ZERO
    # clear denominators, make primitive with positive leading coefficient
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in a]
    prim = primitive_part(normalize(ints))
    if prim and prim[-1] < 0:
        prim = neg(prim)
    return prim


def squarefree_decomposition(p: Poly) -> list[tuple[int, Poly]]:
    """Gcd-chain decomposition: [(multiplicity, factor), ...], factors squarefree.

    The product of factor**multiplicity equals p up to a rational unit.
    """
    if degree(p) < 1:
        return []
    # a[k] = product of f_i^(i-k) over multiplicities i >= k, where p = prod f_i^i
    a = [gcd_poly(p, p)]  # primitive copy of p
    while degree(a[-1]) > 0:
        a.append(gcd_poly(a[-1], derivative(a[-1])))
    # b[k] = a[k]/a[k+1] = product of f_i over i >= k+1
    b = [_exact_div_primitive(a[k], a[k + 1]) for k in range(len(a) - 1)]
    out = []
    for k in range(1, len(b)):
        fk = _exact_div_primitive(b[k - 1], b[k])
        if degree(fk) > 0:
            out.append((k, fk))
    if degree(b[-1]) > 0:
        out.append((len(b), b[-1]))
    return out


def _exact_div_primitive(p: Poly, d: Poly) -> Poly:
    """p / d over Q, result as primitive integer polynomial (d must divide p)."""
    if not d:
        raise ZeroDivisionError
    a = list(_frac(p))
    q = [Fraction(0)] * max(len(a) - len(d) + 1, 1)
    lead = Fraction(d[-1])
    while len(a) >= len(d) and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) < len(d):
            break
        f = a[-1] / lead
        k = len(a) - len(d)
        q[k] = f
        for i, c in enumerate(d):
            a[k + i] -= f * c
    if any(a):
        raise ValueError("inexact division in squarefree decomposition")
    den = 1
    for c in q:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = normalize([int(c * den) for c in q])
    prim = primitive_part(ints)
    if prim and prim[-1] < 0:
        prim = neg(prim)
    return prim


def sturm_count(p: Poly, a: Fraction, b: Fraction) -> int:
    """Number of distinct real roots of p in the open interval (a, b).

    Requires p(a) != 0 and p(b) != 0; p need not be squarefree (the chain
    handles repeated roots, counting each distinct root once).
    """
    pa, pb = evaluate(p, a), evaluate(p, b)
    if pa == 0 or pb == 0:
        raise ValueError("sturm_count requires nonzero values at the endpoints")
    chain = [_frac(p), _frac(derivative(p))]
    while chain[-1]:
        r = _rem_frac(chain[-2], chain[-1])
        if not r:
            break
        chain.append(tuple(-c for c in r))

    def variations(x):
        signs = []
        for q in chain:
            v = evaluate(q, x)
            if v != 0:
                signs.append(1 if v > 0 else -1)
        return sum(1 for s, t in zip(signs, signs[1:]) if s != t)

    return variations(a) - variations(b)


def count_roots_in_open_interval(p: Poly, a: Fraction, b: Fraction) -> int:
    """Real roots of p in (a, b), counted with multiplicity."""
    total = 0
    for mult, factor in squarefree_decomposition(p):
        total += mult * sturm_count(factor, a, b)
    return total


def format_poly(p: Poly, var: str = "t") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = (first_body if first_sign == "+" else f"-{first_body}")
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
