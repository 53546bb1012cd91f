import random

import pytest

from knotgenus.cover import (
    Character,
    HomologyClass,
    double_cover_presentation,
    enumerate_characters,
    is_surjective,
    rescaling_classes,
    units_mod,
)
from knotgenus.errors import InputError
from knotgenus.intmatrix import IntMatrix
from knotgenus.knots import SeifertKnot, TorusKnot, UNKNOT, seifert_matrix

from _oracles import kernel_brute

TREFOIL = seifert_matrix(TorusKnot(2, 3))


def test_presentation_examples():
    P = double_cover_presentation(seifert_matrix(UNKNOT))
    assert P.order == 1 and P.invariant_factors == ()

    P = double_cover_presentation(TREFOIL)
    assert P.invariant_factors == (3,)
    assert P.order == 3
    assert P.relation_matrix == IntMatrix([[-2, 1], [1, -2]])
    assert P.relation_matrix.is_symmetric()


def test_presentation_rejects_degenerate():
    # a valid knot matrix always has odd det(A + A^T), so the degenerate
    # guard is only reachable by bypassing SeifertKnot validation
    K = SeifertKnot.__new__(SeifertKnot)
    object.__setattr__(K, "matrix", IntMatrix([[1, 1], [1, 1]]))
    with pytest.raises(InputError):
        double_cover_presentation(K)


def test_character_count_formula():
    P = double_cover_presentation(TREFOIL)
    assert P.character_count(3) == 3
    assert P.character_count(9) == 3
    assert P.character_count(2) == 1


def test_enumeration_matches_brute_force():
    rng = random.Random(41)
    for _ in range(6):
        n = rng.randint(1, 4)
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-4, 4)
        M = IntMatrix(rows)
        if M.det() == 0 or M.det() % 2 == 0:
            continue
        from knotgenus.cover import CoverPresentation
        from knotgenus.intmatrix import invariant_factors
        P = CoverPresentation(relation_matrix=M, generator_count=n,
                              invariant_factors=invariant_factors(M),
                              order=abs(M.det()))
        for q in (3, 9):
            got = [c.values for c in enumerate_characters(P, q)]
            assert got == kernel_brute(rows, q)


def test_characters_form_a_group():
    P = double_cover_presentation(TREFOIL)
    chars = enumerate_characters(P, 3)
    values = {c.values for c in chars}
    assert len(values) == 3
    for a in values:
        assert tuple(-x % 3 for x in a) in values
        for b in values:
            assert tuple((x + y) % 3 for x, y in zip(a, b)) in values


def test_evaluate():
    chi = Character(9, (1, 2, 0, 5))
    assert chi.evaluate(HomologyClass((1, 0, 0, 0))) == 1
    assert chi.evaluate((0, 1, -1, 0)) == 2
    assert chi.evaluate((1, 1, 1, 1)) == 8
    trivial = Character(9, (0, 0, 0, 0))
    assert trivial.evaluate((3, -7, 2, 9)) == 0
    with pytest.raises(InputError):
        chi.evaluate((1, 2))


def test_is_surjective():
    assert not is_surjective(Character(9, (0, 0)))
    assert not is_surjective(Character(9, (3, 6, 0)))
    assert is_surjective(Character(9, (3, 1)))
    assert is_surjective(Character(3, (2,)))


def test_units():
    assert units_mod(9) == (1, 2, 4, 5, 7, 8)
    assert units_mod(3) == (1, 2)
    assert units_mod(8) == (1, 3, 5, 7)


def test_rescaling_classes():
    trivial = Character(3, (0, 0))
    assert rescaling_classes([trivial]) == [[trivial]]

    P = double_cover_presentation(TREFOIL)
    chars = enumerate_characters(P, 3)
    nontrivial = [c for c in chars if not c.is_trivial()]
    classes = rescaling_classes(nontrivial)
    assert len(classes) == 1 and len(classes[0]) == 2

    # a surjective mod-9 character has an orbit of size |units| = 6
    full = [Character(9, (v,)) for v in range(9)]
    classes = rescaling_classes(full)
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 2, 6]  # {0}, {3,6}, units


def test_rescaling_rejects_mixed_moduli():
    with pytest.raises(InputError):
        rescaling_classes([Character(3, (1,)), Character(9, (1,))])
