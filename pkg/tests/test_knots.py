import random
from fractions import Fraction

import pytest

from knotgenus import polynomials as P
from knotgenus.errors import (
    ExprSyntaxError,
    InputError,
    SingularOmegaError,
    UnsupportedTorusKnotError,
)
from knotgenus.intmatrix import IntMatrix
from knotgenus.knots import (
    ConnectedSum,
    Literal,
    Mirror,
    Multiple,
    RationalAngle,
    SeifertKnot,
    TorusKnot,
    UNKNOT,
    alexander_polynomial,
    g4_signature_bound,
    parse_knot_expr,
    seifert_matrix,
    tl_signature,
    unit_circle_root_count,
)

from _oracles import inertia_numeric, torus_signature_closed_form

TREFOIL = seifert_matrix(TorusKnot(2, 3))
FOOTNOTE_SUM = "3*T(2,3) # 3*T(2,5) # T(2,7) # 5*mirror(T(2,9))"


# -- parser ------------------------------------------------------------


def test_parse_basic():
    assert parse_knot_expr("T(2,3)") == TorusKnot(2, 3)
    assert parse_knot_expr(" T( 2 , 3 ) ") == TorusKnot(2, 3)
    assert parse_knot_expr("mirror(T(2,3))") == Mirror(TorusKnot(2, 3))
    assert parse_knot_expr("2*T(2,3)") == Multiple(2, TorusKnot(2, 3))
    assert parse_knot_expr("(T(2,3))") == TorusKnot(2, 3)


def test_parse_left_associated_sum():
    e = parse_knot_expr(FOOTNOTE_SUM)
    assert isinstance(e, ConnectedSum)
    assert e.right == Multiple(5, Mirror(TorusKnot(2, 9)))
    assert isinstance(e.left, ConnectedSum)
    assert e.left.right == TorusKnot(2, 7)
    assert e.left.left == ConnectedSum(Multiple(3, TorusKnot(2, 3)),
                                       Multiple(3, TorusKnot(2, 5)))


def test_parse_errors_carry_position():
    with pytest.raises(ExprSyntaxError):
        parse_knot_expr("T(2,3) #")
    with pytest.raises(ExprSyntaxError):
        parse_knot_expr("T(2,3) T(2,5)")
    with pytest.raises(ExprSyntaxError):
        parse_knot_expr("mirror(T(2,3)")
    with pytest.raises(ExprSyntaxError) as exc:
        parse_knot_expr("T(2,4)")
    assert "coprime" in str(exc.value)
    with pytest.raises(ExprSyntaxError):
        parse_knot_expr("")


def test_parse_seifert_file(tmp_path):
    path = tmp_path / "m.json"
    path.write_text('{"rows": [[-1, 1], [0, -1]]}')
    e = parse_knot_expr(f"seifert({path})")
    assert isinstance(e, Literal)
    assert e.matrix == TREFOIL.matrix
    with pytest.raises(InputError):
        parse_knot_expr("seifert(/nonexistent/path.json)")


def test_literal_validates_intersection_form():
    with pytest.raises(InputError):
        Literal(IntMatrix([[1, 0], [0, 1]]))  # det(M - M^T) = 0


# -- Seifert matrices ----------------------------------------------------


def test_seifert_matrices():
    assert TREFOIL.matrix == IntMatrix([[-1, 1], [0, -1]])
    assert seifert_matrix(Mirror(TorusKnot(2, 3))).matrix == IntMatrix([[1, 0], [-1, 1]])
    assert seifert_matrix(UNKNOT).matrix.rows == 0
    assert seifert_matrix(Multiple(0, TorusKnot(2, 9))).matrix.rows == 0
    two = seifert_matrix(ConnectedSum(TorusKnot(2, 3), TorusKnot(2, 3)))
    assert two.size == 4
    assert seifert_matrix(Multiple(2, TorusKnot(2, 3))).matrix == two.matrix


def test_seifert_rejects_general_torus_knots():
    with pytest.raises(UnsupportedTorusKnotError):
        seifert_matrix(TorusKnot(3, 5))


# -- Alexander polynomials -----------------------------------------------


def test_alexander_examples():
    assert alexander_polynomial(seifert_matrix(UNKNOT)) == (1,)
    assert alexander_polynomial(TREFOIL) == (1, -1, 1)
    assert alexander_polynomial(seifert_matrix(TorusKnot(2, 5))) == (1, -1, 1, -1, 1)


def test_alexander_reciprocality_and_unit():
    rng = random.Random(23)
    for _ in range(10):
        n = rng.choice([3, 5, 7, 9, 11])
        K = seifert_matrix(ConnectedSum(TorusKnot(2, n),
                                        Mirror(TorusKnot(2, rng.choice([3, 5, 7])))))
        d = alexander_polynomial(K)
        assert P.evaluate(d, 1) in (1, -1)
        deg = P.degree(d)
        assert tuple(reversed(d)) in (d, P.neg(d)) or all(
            d[i] == d[deg - i] for i in range(deg + 1))


# -- signatures ----------------------------------------------------------


def test_signature_examples():
    assert tl_signature(TREFOIL, RationalAngle(1, 2)) == -2
    assert tl_signature(TREFOIL, RationalAngle(1, 9)) == 0
    assert tl_signature(TREFOIL, RationalAngle(2, 9)) == -2
    assert tl_signature(seifert_matrix(Mirror(TorusKnot(2, 3))), RationalAngle(1, 2)) == 2


def test_signature_footnote_profile():
    S = seifert_matrix(parse_knot_expr(FOOTNOTE_SUM))
    values = [tl_signature(S, RationalAngle(j, 9)) for j in (1, 2, 3, 4)]
    assert values == [2, 4, 8, 16]
    for j, v in zip((1, 2, 3, 4), values):
        assert inertia_numeric(S.matrix.tolists(), j, 9) == v


def test_signature_matches_numeric_oracle():
    rng = random.Random(31)
    for _ in range(8):
        parts = [TorusKnot(2, rng.choice([3, 5, 7, 9])) for _ in range(rng.randint(1, 3))]
        expr = parts[0]
        for pp in parts[1:]:
            expr = ConnectedSum(expr, Mirror(pp) if rng.random() < 0.5 else pp)
        K = seifert_matrix(expr)
        j, n = rng.choice([(1, 9), (2, 9), (4, 9), (1, 2), (1, 3)])
        assert tl_signature(K, RationalAngle(j, n)) == \
            inertia_numeric(K.matrix.tolists(), j, n)


def test_signature_matches_torus_closed_form():
    for n in (3, 5, 7, 9, 11):
        K = seifert_matrix(TorusKnot(2, n))
        Km = seifert_matrix(Mirror(TorusKnot(2, n)))
        for num, den in [(j, 9) for j in range(1, 9)] + \
                        [(j, 6) for j in range(1, 6)] + [(1, 2)]:
            s = Fraction(num, den)
            try:
                expected = torus_signature_closed_form(n, s)
            except ValueError:
                with pytest.raises(SingularOmegaError):
                    tl_signature(K, RationalAngle(num, den))
                continue
            assert tl_signature(K, RationalAngle(num, den)) == expected
            assert tl_signature(Km, RationalAngle(num, den)) == -expected


def test_signature_symmetry_additivity_parity():
    rng = random.Random(37)
    for _ in range(6):
        a = TorusKnot(2, rng.choice([3, 5, 7, 9]))
        b = Mirror(TorusKnot(2, rng.choice([3, 5, 9, 11])))
        Ka, Kb = seifert_matrix(a), seifert_matrix(b)
        Ks = seifert_matrix(ConnectedSum(a, b))
        for j in (1, 2, 4):
            s = RationalAngle(j, 9)
            s_sym = RationalAngle(9 - j, 9)
            va, vb, vs = (tl_signature(Ka, s), tl_signature(Kb, s),
                          tl_signature(Ks, s))
            assert vs == va + vb
            assert tl_signature(Ks, s_sym) == vs
            assert vs % 2 == 0 and abs(vs) <= Ks.size


def _random_unimodular(rng, n):
    """Product of elementary row additions and swaps: determinant +-1."""
    E = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(3 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        if rng.random() < 0.8:
            k = rng.choice([-2, -1, 1, 2])
            for c in range(n):
                E[i][c] += k * E[j][c]
        else:
            E[i], E[j] = E[j], E[i]
    return IntMatrix(E)


def test_invariants_stable_under_basis_change():
    # a Seifert-surface basis change sends A to E A E^T; the Alexander
    # polynomial and every signature are unchanged
    rng = random.Random(43)
    expr = ConnectedSum(TorusKnot(2, 5), Mirror(TorusKnot(2, 7)))
    K = seifert_matrix(expr)
    for _ in range(5):
        E = _random_unimodular(rng, K.size)
        K2 = SeifertKnot(E @ K.matrix @ E.transpose())
        assert alexander_polynomial(K2) == alexander_polynomial(K)
        for j, n in ((1, 9), (4, 9), (1, 2)):
            assert tl_signature(K2, RationalAngle(j, n)) == \
                tl_signature(K, RationalAngle(j, n))
            assert tl_signature(K2, RationalAngle(j, n)) == \
                inertia_numeric(K2.matrix.tolists(), j, n)


def test_singular_omega_reports_order():
    with pytest.raises(SingularOmegaError) as exc:
        tl_signature(TREFOIL, RationalAngle(1, 6))
    assert exc.value.denominator == 6


def test_angle_validation():
    with pytest.raises(InputError):
        RationalAngle(0, 2)
    with pytest.raises(InputError):
        RationalAngle(3, 2)
    assert str(RationalAngle(3, 9)) == "1/3"
    assert RationalAngle.parse("2/9") == RationalAngle(2, 9)
    with pytest.raises(InputError):
        RationalAngle.parse("0.5")


# -- unit circle roots -----------------------------------------------------


def test_unit_circle_root_count_examples():
    assert unit_circle_root_count((1, -1, 1)) == 2
    assert unit_circle_root_count((1, -3, 1)) == 0
    assert unit_circle_root_count((1,)) == 0


def test_unit_circle_root_count_products():
    # (t^2 - t + 1)(t^2 - 3t + 1): two roots on the circle, two off
    p = P.mul((1, -1, 1), (1, -3, 1))
    assert unit_circle_root_count(p) == 2
    # squared factor doubles the count
    assert unit_circle_root_count(P.mul(p, (1, -1, 1))) == 4
    # powers of t are ignored
    assert unit_circle_root_count(P.shift((1, -1, 1), 3)) == 2


def test_unit_circle_root_count_rejections():
    with pytest.raises(InputError):
        unit_circle_root_count((1, 0, -1))  # vanishes at +-1
    with pytest.raises(InputError):
        unit_circle_root_count((2, -1, 1))  # not reciprocal


# -- genus bound -----------------------------------------------------------


def test_g4_signature_bound():
    assert g4_signature_bound(TREFOIL) == 1
    assert g4_signature_bound(seifert_matrix(UNKNOT)) == 0
    assert g4_signature_bound(seifert_matrix(TorusKnot(2, 9))) == 4


def test_seifert_knot_validation():
    with pytest.raises(InputError):
        SeifertKnot(IntMatrix([[0]]))
    with pytest.raises(InputError):
        SeifertKnot(IntMatrix([[1, 2], [4, 4]]))  # |det(A - A^T)| = 4
