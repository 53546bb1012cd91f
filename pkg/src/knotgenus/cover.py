"""First homology of the double branched cover, with character enumeration.

The cover of a knot with Seifert matrix A is presented on generators
y_0 .. y_(n-1) (lifts of the dual basis curves) with relation matrix A + A^T.
Characters to Z/q are stored as their full value vector on the y-generators,
so evaluating on a homology class written in y-coordinates is a dot product.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd

from .errors import InputError
from .intmatrix import DEFAULT_ENUM_CAP, IntMatrix, invariant_factors, kernel_mod_q
from .knots import SeifertKnot


@dataclass(frozen=True)
class CoverPresentation:
    """Presentation of H_1 of the double branched cover."""

    relation_matrix: IntMatrix
    generator_count: int
    invariant_factors: tuple
    order: int

    def character_count(self, q: int) -> int:
        """Number of characters to Z/q, as a product of gcds with the factors."""
        count = 1
        for d in self.invariant_factors:
            count *= gcd(d, q)
        return count


@dataclass(frozen=True)
class HomologyClass:
    """An element of the cover homology in y-coordinates."""

    coefficients: tuple

    def __init__(self, coefficients):
        object.__setattr__(self, "coefficients", tuple(int(c) for c in coefficients))


@dataclass(frozen=True)
class Character:
    """A homomorphism H_1(cover) -> Z/q given by its values on the y-generators."""

    modulus: int
    values: tuple

    def __init__(self, modulus: int, values):
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "values", tuple(int(v) % modulus for v in values))

    def evaluate(self, z: HomologyClass | tuple | list) -> int:
        coeffs = z.coefficients if isinstance(z, HomologyClass) else tuple(z)
        if len(coeffs) != len(self.values):
            raise InputError(
                f"class has {len(coeffs)} coordinates, character has {len(self.values)}")
        return sum(a * b for a, b in zip(self.values, coeffs)) % self.modulus

    def __neg__(self) -> "Character":
        return Character(self.modulus, tuple(-v for v in self.values))

    def scaled(self, u: int) -> "Character":
        return Character(self.modulus, tuple(u * v for v in self.values))

    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.values)


def double_cover_presentation(K: SeifertKnot) -> CoverPresentation:
    """Presentation with relations the columns of A + A^T; order |det(A + A^T)|."""
    rel = K.matrix + K.matrix.transpose()
    det = rel.det()
    if det == 0:
        raise InputError("det(A + A^T) = 0: the double cover is not a rational homology sphere")
    if det % 2 == 0:
        raise InputError("knot determinant must be odd; the Seifert matrix is not a knot matrix")
    return CoverPresentation(
        relation_matrix=rel,
        generator_count=rel.rows,
        invariant_factors=invariant_factors(rel),
        order=abs(det),
    )


def enumerate_characters(P: CoverPresentation, q: int,
                         cap: int = DEFAULT_ENUM_CAP) -> list[Character]:
    """All characters to Z/q (not only surjective ones), lexicographically sorted."""
    kern = kernel_mod_q(P.relation_matrix, q)
    return [Character(q, v) for v in kern.enumerate(cap)]


def is_surjective(chi: Character) -> bool:
    """True when the image is all of Z/q, i.e. gcd of the values with q is 1."""
    g = reduce(gcd, chi.values, 0)
    return gcd(g, chi.modulus) == 1


def units_mod(q: int) -> tuple:
    return tuple(u for u in range(1, q) if gcd(u, q) == 1)


def rescaling_classes(chars) -> list[list[Character]]:
    """Partition characters into orbits under multiplication by units of Z/q.

    Orbits are sorted internally and between each other by value vectors, so
    the partition is canonical.
    """
    chars = list(chars)
    if not chars:
        return []
    q = chars[0].modulus
    if any(c.modulus != q for c in chars):
        raise InputError("rescaling classes require a single common modulus")
    units = units_mod(q)
    seen = set()
    classes = []
    for chi in sorted(chars, key=lambda c: c.values):
        if chi.values in seen:
            continue
        orbit = {chi.scaled(u).values for u in units}
        orbit &= {c.values for c in chars}
        for v in orbit:
            seen.add(v)
        classes.append([Character(q, v) for v in sorted(orbit)])
    classes.sort(key=lambda cls: cls[0].values)
    return classes
