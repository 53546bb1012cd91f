"""Knot expressions, Seifert matrices, Alexander polynomials, Tristram-Levine signatures.

The expression grammar (whitespace-insensitive):

    expr := term { "#" term }
    term := [ INT "*" ] atom
    atom := "T(" INT "," INT ")" | "mirror(" expr ")" | "seifert(" PATH ")" | "(" expr ")"

Torus knots are realized by the standard band matrix for T(2, n): (n-1) x (n-1)
with -1 on the diagonal and +1 on the superdiagonal, which makes the
right-handed trefoil have signature -2 at omega = -1. Signatures are computed
exactly over Q(zeta_n) with certified pivot signs; omega = 1 is never a valid
angle (signatures there are taken to vanish by convention where needed).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import polynomials as poly
from .cyclotomic import CyclotomicField, hermitian_signature
from .errors import ExprSyntaxError, InputError, SingularOmegaError, UnsupportedTorusKnotError
from .intmatrix import IntMatrix, det_linear_pencil


# --------------------------------------------------------------------------
# expression AST


@dataclass(frozen=True)
class TorusKnot:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise InputError(f"torus knot parameters must be positive, got T({self.p},{self.q})")
        if gcd(self.p, self.q) != 1:
            raise InputError(f"T({self.p},{self.q}): parameters are not coprime")


@dataclass(frozen=True)
class Mirror:
    inner: "KnotExpr"


@dataclass(frozen=True)
class Multiple:
    count: int
    inner: "KnotExpr"

    def __post_init__(self):
        if self.count < 0:
            raise InputError("multiple count must be non-negative")


@dataclass(frozen=True)
class ConnectedSum:
    left: "KnotExpr"
    right: "KnotExpr"


@dataclass(frozen=True)
class Literal:
    matrix: IntMatrix

    def __post_init__(self):
        d = (self.matrix - self.matrix.transpose()).det()
        if d not in (1, -1):
            raise InputError(
                "literal Seifert matrix rejected: |det(M - M^T)| must be 1, got "
                f"{abs(d)}")


KnotExpr = TorusKnot | Mirror | Multiple | ConnectedSum | Literal

UNKNOT: KnotExpr = Multiple(0, TorusKnot(2, 3))


# --------------------------------------------------------------------------
# parser

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|(#|\*|\(|\)|,)|(T|mirror|seifert)\b)")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str):
        raise ExprSyntaxError(msg, self.pos)

    def peek(self):
        m = _TOKEN_RE.match(self.text, self.pos)
        if not m:
            rest = self.text[self.pos:].strip()
            return None if not rest else ("?", rest[0])
        if m.group(1) is not None:
            return ("int", m.group(1), m.end())
        if m.group(2) is not None:
            return ("sym", m.group(2), m.end())
        return ("name", m.group(3), m.end())

    def next_token(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        if tok[0] == "?":
            self.error(f"unexpected character {tok[1]!r}")
        self.pos = tok[2]
        return tok[0], tok[1]

    def expect(self, kind, value=None):
        k, v = self.next_token()
        if k != kind or (value is not None and v != value):
            self.error(f"expected {value or kind}, got {v!r}")
        return v

    def at_end(self):
        tok = self.peek()
        if tok is None:
            return self.pos >= len(self.text) or not self.text[self.pos:].strip()
        return False

    def parse_expr(self) -> KnotExpr:
        node = self.parse_term()
        while True:
            tok = self.peek()
            if tok and tok[0] == "sym" and tok[1] == "#":
                self.pos = tok[2]
                node = ConnectedSum(node, self.parse_term())
            else:
                return node

    def parse_term(self) -> KnotExpr:
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of expression")
        if tok[0] == "int":
            self.pos = tok[2]
            count = int(tok[1])
            self.expect("sym", "*")
            return Multiple(count, self.parse_atom())
        return self.parse_atom()

    def parse_atom(self) -> KnotExpr:
        kind, value = self.next_token()
        if kind == "sym" and value == "(":
            inner = self.parse_expr()
            self.expect("sym", ")")
            return inner
        if kind == "name" and value == "T":
            self.expect("sym", "(")
            p = int(self.expect("int"))
            self.expect("sym", ",")
            q = int(self.expect("int"))
            self.expect("sym", ")")
            try:
                return TorusKnot(p, q)
            except InputError as exc:
                self.error(str(exc))
        if kind == "name" and value == "mirror":
            self.expect("sym", "(")
            inner = self.parse_expr()
            self.expect("sym", ")")
            return Mirror(inner)
        if kind == "name" and value == "seifert":
            self.expect("sym", "(")
            end = self.text.find(")", self.pos)
            if end < 0:
                self.error("unterminated seifert(...) path")
            path = self.text[self.pos:end].strip()
            self.pos = end + 1
            try:
                return Literal(IntMatrix.load(path))
            except OSError as exc:
                raise InputError(f"cannot read Seifert matrix file {path!r}: {exc}") from exc
        self.error(f"unexpected token {value!r}")


def parse_knot_expr(text: str) -> KnotExpr:
    parser = _Parser(text)
    node = parser.parse_expr()
    if not parser.at_end():
        parser.error("trailing input after expression")
    return node


def format_knot_expr(e: KnotExpr) -> str:
    if isinstance(e, TorusKnot):
        return f"T({e.p},{e.q})"
    if isinstance(e, Mirror):
        return f"mirror({format_knot_expr(e.inner)})"
    if isinstance(e, Multiple):
        return f"{e.count}*({format_knot_expr(e.inner)})"
    if isinstance(e, ConnectedSum):
        return f"{format_knot_expr(e.left)} # {format_knot_expr(e.right)}"
    return f"seifert[{e.matrix.rows}x{e.matrix.cols}]"


# --------------------------------------------------------------------------
# Seifert realization


@dataclass(frozen=True)
class SeifertKnot:
    """A knot presented by a Seifert matrix with unimodular intersection form."""

    matrix: IntMatrix

    def __post_init__(self):
        if not self.matrix.is_square:
            raise InputError("Seifert matrix must be square")
        d = (self.matrix - self.matrix.transpose()).det()
        if d not in (1, -1):
            raise InputError(
                f"|det(A - A^T)| must be 1 for a knot Seifert matrix, got {abs(d)}")
        a1 = poly.evaluate(alexander_polynomial(self), 1)
        if a1 not in (1, -1):
            raise InputError(f"Alexander polynomial at 1 must be a unit, got {a1}")

    @property
    def size(self) -> int:
        return self.matrix.rows


def _torus_band_matrix(n: int) -> IntMatrix:
    rows = [[0] * (n - 1) for _ in range(n - 1)]
    for i in range(n - 1):
        rows[i][i] = -1
        if i + 1 < n - 1:
            rows[i][i + 1] = 1
    return IntMatrix(rows)


def seifert_matrix(e: KnotExpr) -> SeifertKnot:
    """Realize an expression as a block Seifert matrix."""
    return SeifertKnot(_seifert_raw(e))


def _seifert_raw(e: KnotExpr) -> IntMatrix:
    if isinstance(e, TorusKnot):
        if e.p != 2:
            raise UnsupportedTorusKnotError(
                f"only T(2, odd) torus knots have a bundled Seifert matrix, got T({e.p},{e.q})")
        return _torus_band_matrix(e.q)
    if isinstance(e, Mirror):
        return -_seifert_raw(e.inner).transpose()
    if isinstance(e, Multiple):
        if e.count == 0:
            return IntMatrix.zeros(0, 0)
        block = _seifert_raw(e.inner)
        return IntMatrix.block_diag([block] * e.count)
    if isinstance(e, ConnectedSum):
        return IntMatrix.block_diag([_seifert_raw(e.left), _seifert_raw(e.right)])
    if isinstance(e, Literal):
        return e.matrix
    raise InputError(f"unknown knot expression node {e!r}")


# --------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class RationalAngle:
    """A reduced fraction j/n in (0, 1), standing for omega = e^(2*pi*i*j/n)."""

    numerator: int
    denominator: int

    def __init__(self, numerator: int, denominator: int):
        if denominator <= 0:
            raise InputError("angle denominator must be positive")
        g = gcd(numerator, denominator)
        numerator //= g
        denominator //= g
        if not 0 < numerator < denominator:
            raise InputError("angle must lie strictly between 0 and 1")
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "denominator", denominator)

    @classmethod
    def parse(cls, text: str) -> "RationalAngle":
        m = re.fullmatch(r"\s*(\d+)\s*/\s*(\d+)\s*", text)
        if not m:
            raise InputError(f"angle must look like j/n, got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))

    def as_fraction(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


def alexander_polynomial(K: SeifertKnot) -> poly.Poly:
    """det(A - t A^T), exact; satisfies Delta(1) = +-1."""
    return _alexander_cached(K.matrix)


@lru_cache(maxsize=256)
def _alexander_cached(A: IntMatrix) -> poly.Poly:
    return det_linear_pencil(A, A.transpose())


def _connected_components(A: IntMatrix) -> list[list[int]]:
    """Components of the symmetric support graph of A + A^T.

    A congruence by the corresponding permutation makes the Hermitian form
    block-diagonal, so each component contributes its signature independently.
    """
    n = A.rows
    adj = [set() for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and (A[i, j] or A[j, i]):
                adj[i].add(j)
                adj[j].add(i)
    seen = [False] * n
    comps = []
    for s in range(n):
        if seen[s]:
            continue
        stack = [s]
        seen[s] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def tl_signature(K: SeifertKnot, s: RationalAngle) -> int:
    """Tristram-Levine signature at omega = e^(2*pi*i*s): sig((1-w)A + (1-conj(w))A^T).

    Exact and certified. Raises SingularOmegaError when omega is a root of the
    Alexander polynomial (a jump point of the signature function).
    """
    return _tl_signature_cached(K.matrix, s.numerator, s.denominator)


@lru_cache(maxsize=4096)
def _tl_signature_cached(A: IntMatrix, j: int, n: int) -> int:
    delta = _alexander_cached(A)
    if poly.divides(poly.cyclotomic(n), delta):
        raise SingularOmegaError(n)
    if A.rows == 0:
        return 0
    total = 0
    for comp in _connected_components(A):
        sub = IntMatrix([[A[i, j2] for j2 in comp] for i in comp])
        total += _block_signature(sub, j, n)
    return total


@lru_cache(maxsize=4096)
def _block_signature(A: IntMatrix, j: int, n: int) -> int:
    """Signature of (1-w)A + (1-conj(w))A^T for one irreducible block."""
    field = CyclotomicField(n)
    u = field.one - field.power_of_zeta(1)
    ubar = field.one - field.power_of_zeta(n - 1)
    entries = [[u * field.from_int(A[i, j2]) + ubar * field.from_int(A[j2, i])
                for j2 in range(A.cols)] for i in range(A.rows)]
    pos, neg = hermitian_signature(entries, field, j)
    return pos - neg


def unit_circle_root_count(delta: poly.Poly) -> int:
    """Roots of delta on |t| = 1, with multiplicity, by exact real root counting.

    Requires delta(1) != 0 and delta(-1) != 0 and delta reciprocal up to units
    (powers of t and sign). Writes t^k * delta = t^(d/2) g(t + 1/t) and counts
    real roots of g in (-2, 2) with a Sturm chain; each corresponds to a
    conjugate pair on the circle.
    """
    if not delta:
        raise InputError("zero polynomial has no root count")
    if poly.evaluate(delta, 1) == 0 or poly.evaluate(delta, -1) == 0:
        raise InputError("root counting requires delta(1) != 0 and delta(-1) != 0")
    # strip powers of t (roots at 0 are off the circle)
    k = 0
    while delta[k] == 0:
        k += 1
    delta = delta[k:]
    d = poly.degree(delta)
    if d == 0:
        return 0
    if d % 2 != 0 or any(delta[i] != delta[d - i] for i in range(d + 1)):
        raise InputError("root counting requires a reciprocal polynomial of even degree")
    g = _compact_form(delta)
    return 2 * poly.count_roots_in_open_interval(g, Fraction(-2), Fraction(2))


def _compact_form(p: poly.Poly) -> poly.Poly:
    """g with p(t) = t^(deg/2) g(t + 1/t), for palindromic p of even degree."""
    f = p
    g: poly.Poly = poly.ZERO
    while f:
        d = poly.degree(f)
        assert d % 2 == 0
        c = f[-1]
        g = poly.add(g, poly.scale(poly.shift(poly.ONE, d // 2), c))
        f = poly.sub(f, poly.scale(poly.pow_((1, 0, 1), d // 2), c))
        if f:
            e = 0
            while f[e] == 0:
                e += 1
            assert e > 0
            f = f[e:]
    # safety: recompose t^(deg/2) g(t + 1/t) and compare with the input
    half = poly.degree(p) // 2
    lifted = poly.ZERO
    for i, c in enumerate(g):
        if c:
            term = poly.scale(poly.shift(poly.pow_((1, 0, 1), i), half - i), c)
            lifted = poly.add(lifted, term)
    assert lifted == p, "compact form recomposition failed"
    return g


def g4_signature_bound(K: SeifertKnot) -> int:
    """ceil(|sigma(K, 1/2)| / 2), the classical signature lower bound for the 4-genus."""
    if K.size == 0:
        return 0
    sig = tl_signature(K, RationalAngle(1, 2))
    return (abs(sig) + 1) // 2
