import json
import random

import pytest

from knotgenus import polynomials as P
from knotgenus.errors import CapExceededError, InputError
from knotgenus.intmatrix import (
    IntMatrix,
    det_linear_pencil,
    in_column_image,
    invariant_factors,
    kernel_mod_q,
    smith_normal_form,
)

from _oracles import det_permutation, kernel_brute

TREFOIL_REL = IntMatrix([[-2, 1], [1, -2]])


def assert_snf_contract(M):
    snf = smith_normal_form(M)
    assert snf.U @ M @ snf.V == snf.D
    assert abs(snf.U.det()) == 1
    assert abs(snf.V.det()) == 1
    diag = snf.diagonal
    assert all(d >= 0 for d in diag)
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0
    for i in range(snf.D.rows):
        for j in range(snf.D.cols):
            if i != j:
                assert snf.D[i, j] == 0
    return snf


def test_snf_examples():
    assert assert_snf_contract(IntMatrix([[2, 0], [0, 3]])).diagonal == (1, 6)
    assert assert_snf_contract(IntMatrix.zeros(2, 2)).diagonal == (0, 0)
    assert invariant_factors(TREFOIL_REL) == (3,)
    assert invariant_factors(IntMatrix.identity(3)) == ()


def test_snf_rectangular():
    M = IntMatrix([[2, 4, 4], [-6, 6, 12]])
    snf = assert_snf_contract(M)
    assert snf.diagonal == (2, 6)


def test_snf_random_unimodularity():
    rng = random.Random(7)
    for _ in range(50):
        r, c = rng.randint(1, 5), rng.randint(1, 6)
        M = IntMatrix([[rng.randint(-9, 9) for _ in range(c)] for _ in range(r)])
        assert_snf_contract(M)


def test_kernel_examples():
    k = kernel_mod_q(IntMatrix([[3]]), 9)
    assert k.order == 3
    assert k.enumerate() == [(0,), (3,), (6,)]

    k = kernel_mod_q(TREFOIL_REL, 3)
    assert k.order == 3
    assert k.enumerate() == kernel_brute([[-2, 1], [1, -2]], 3)


def test_kernel_matches_brute_force():
    rng = random.Random(11)
    for q in (2, 3, 4, 5, 8, 9):
        for _ in range(4):
            n = rng.randint(1, 3)
            rows = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            M = IntMatrix(rows)
            kern = kernel_mod_q(M, q)
            brute = kernel_brute(rows, q)
            assert kern.enumerate() == brute
            assert kern.order == len(brute)


def test_kernel_order_is_product_of_gcds():
    from math import gcd
    rng = random.Random(13)
    for _ in range(10):
        n = rng.randint(1, 4)
        M = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        for q in (3, 9):
            expect = 1
            snf = smith_normal_form(M)
            for i in range(n):
                d = snf.D[i, i]
                expect *= gcd(d, q) if d else q
            assert kernel_mod_q(M, q).order == expect


def test_kernel_requirements():
    with pytest.raises(InputError):
        kernel_mod_q(IntMatrix([[1, 2]]), 3)
    with pytest.raises(InputError):
        kernel_mod_q(IntMatrix([[1]]), 6)  # not a prime power
    with pytest.raises(CapExceededError):
        kernel_mod_q(IntMatrix.zeros(4, 4), 9).enumerate(cap=100)


def test_pencil_examples():
    one = IntMatrix([[1]])
    assert det_linear_pencil(one, one) == (1, -1)
    tref = IntMatrix([[-1, 1], [0, -1]])
    assert det_linear_pencil(tref, tref.transpose()) == (1, -1, 1)


def test_pencil_matches_permutation_oracle():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(1, 4)
        A = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        B = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        p = det_linear_pencil(IntMatrix(A), IntMatrix(B))
        for t in (-3, -1, 0, 2, 7):
            direct = det_permutation(
                [[A[i][j] - t * B[i][j] for j in range(n)] for i in range(n)])
            assert P.evaluate(p, t) == direct


def test_bareiss_matches_permutation_oracle():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(0, 4)
        rows = [[rng.randint(-7, 7) for _ in range(n)] for _ in range(n)]
        assert IntMatrix(rows).det() == det_permutation(rows)


def test_in_column_image():
    M = IntMatrix([[2, 0], [0, 3]])
    assert in_column_image(M, (2, 3))
    assert in_column_image(M, (4, 0))
    assert not in_column_image(M, (1, 0))
    assert not in_column_image(IntMatrix.zeros(2, 2), (0, 1))


def test_json_round_trip():
    big = 2**80 + 7
    M = IntMatrix([[1, -big], [big, 0]])
    obj = M.to_json_obj()
    assert isinstance(obj["rows"][0][1], str)  # past 64 bits -> decimal string
    assert IntMatrix.from_json_obj(json.loads(json.dumps(obj))) == M
    with pytest.raises(InputError):
        IntMatrix.from_json_obj({"rows": [[1], [2, 3]]})
    with pytest.raises(InputError):
        IntMatrix.from_json_obj([1, 2])


def test_exact_arithmetic_at_large_magnitude():
    big = 10**30
    M = IntMatrix([[big, 1], [0, big]])
    assert M.det() == big * big
    snf = assert_snf_contract(M)
    assert snf.diagonal == (1, big * big)


def test_block_diag_and_ops():
    A = IntMatrix([[1, 2], [3, 4]])
    B = IntMatrix([[5]])
    C = IntMatrix.block_diag([A, B])
    assert C.rows == C.cols == 3
    assert C[2, 2] == 5 and C[0, 2] == 0
    assert (A + (-A)) == IntMatrix.zeros(2, 2)
    assert (A @ IntMatrix.identity(2)) == A
    assert A.transpose().transpose() == A
    assert A.matvec((1, 0)) == (1, 3)
