"""Independent oracles used by the test suite.

These deliberately avoid the library's own code paths: determinants by
permutation expansion, signatures by floating-point eigenvalues with a margin
check, kernels by exhaustive enumeration, torus-knot signatures by jump
counting.
"""

from __future__ import annotations

import cmath
import itertools
from fractions import Fraction

import numpy as np


def det_permutation(rows) -> int:
    """Exact determinant by the Leibniz expansion (small matrices only)."""
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        seen = [False] * n
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            k = start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


def inertia_numeric(A_rows, j: int, n: int, tol: float = 1e-8) -> int:
    """Signature of (1-w)A + (1-conj(w))A^T at w = e^(2*pi*i*j/n) by eigenvalues.

    Asserts all eigenvalues stay clear of zero by the given margin, so any
    disagreement with the exact route would indicate a real bug, not noise.
    """
    size = len(A_rows)
    if size == 0:
        return 0
    w = cmath.exp(2j * cmath.pi * j / n)
    A = np.array(A_rows, dtype=complex)
    H = (1 - w) * A + (1 - w.conjugate()) * A.conj().T
    eig = np.linalg.eigvalsh(H)
    assert min(abs(e) for e in eig) > tol, "numeric oracle too close to singular"
    return int(sum(1 for e in eig if e > 0) - sum(1 for e in eig if e < 0))


def kernel_brute(rows, q: int) -> list:
    """All c with M c = 0 mod q by exhausting q^n vectors."""
    n = len(rows)
    out = []
    for vec in itertools.product(range(q), repeat=n):
        if all(sum(r[k] * vec[k] for k in range(n)) % q == 0 for r in rows):
            out.append(vec)
    return sorted(out)


def torus_signature_closed_form(n: int, s: Fraction, mirrored: bool = False) -> int:
    """Signature of T(2, n) by counting jumps of -2 at odd multiples of 1/(2n).

    Raises ValueError at a jump point (where the exact route must also refuse).
    """
    if s > Fraction(1, 2):
        s = 1 - s
    twice = 2 * n * s
    # jump points are odd k/(2n) except k = n, where t = -1 is not a root
    if twice.denominator == 1 and int(twice) % 2 == 1 and int(twice) != n:
        raise ValueError("jump point")
    count = 0
    k = 1
    while Fraction(k, 2 * n) < s:
        if k != n:
            count += 1
        k += 2
    sig = -2 * count
    return -sig if mirrored else sig


def gaussian_binomial_2_of_4(p: int) -> int:
    """Number of 2-dimensional subspaces of F_p^4."""
    return ((p**4 - 1) * (p**4 - p)) // ((p**2 - 1) * (p**2 - p))
