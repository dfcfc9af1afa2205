"""Exact number-field, polynomial, and finite-field arithmetic."""

from fractions import Fraction

import pytest

from nodalcodes.exactalg import (
    F2,
    F5,
    F25,
    GOLDEN,
    QQ,
    DivisionByZero,
    MultiPoly,
    ZeroForm,
    golden,
    matrix_inverse_over_field,
    matrix_kernel_over_field,
    matrix_rank_over_field,
    multiplicity_profile,
    pg_points,
    poly_sqrt,
    restrict_to_line,
    sqrt5,
)


def test_golden_ratio_relations():
    tau = golden()
    assert tau * tau == tau + GOLDEN(1)
    assert sqrt5() * sqrt5() == GOLDEN(5)
    assert sqrt5() == tau + tau - GOLDEN(1)
    assert (tau * tau.inverse()) == GOLDEN(1)


def test_field_element_fractions():
    half = QQ(Fraction(1, 2))
    assert half + half == QQ(1)
    with pytest.raises(DivisionByZero):
        QQ(0).inverse()


def test_multipoly_calculus():
    x = MultiPoly.variable(QQ, 3, 0)
    y = MultiPoly.variable(QQ, 3, 1)
    f = x * x * y + y * y * y
    assert f.degree() == 3
    assert f.partial(0) == MultiPoly.constant(QQ, 3, 2) * x * y
    assert f.evaluate([QQ(2), QQ(3), QQ(0)]) == QQ(39)
    hess = f.hessian_matrix_at([QQ(1), QQ(1), QQ(0)])
    assert hess[0][0] == QQ(2) and hess[0][1] == QQ(2) and hess[1][1] == QQ(6)


def test_poly_sqrt_finds_square_root():
    x = MultiPoly.variable(QQ, 2, 0)
    y = MultiPoly.variable(QQ, 2, 1)
    p = (x + y) * (x + y)
    h = poly_sqrt(p)
    assert h is not None and h * h == p


def test_poly_sqrt_rejects_non_square():
    x = MultiPoly.variable(QQ, 2, 0)
    y = MultiPoly.variable(QQ, 2, 1)
    assert poly_sqrt(x * x + y) is None


def test_matrix_kernel_and_inverse():
    rows = [[QQ(1), QQ(2), QQ(3)], [QQ(2), QQ(4), QQ(6)]]
    ker = matrix_kernel_over_field(rows, QQ)
    assert len(ker) == 2
    for vec in ker:
        for row in rows:
            acc = QQ(0)
            for a, b in zip(row, vec):
                acc = acc + a * b
            assert acc.is_zero()
    tau = golden()
    m = [[tau, GOLDEN(1)], [GOLDEN(1), GOLDEN(1)]]
    inv = matrix_inverse_over_field(m, GOLDEN)
    prod00 = m[0][0] * inv[0][0] + m[0][1] * inv[1][0]
    prod01 = m[0][0] * inv[0][1] + m[0][1] * inv[1][1]
    assert prod00 == GOLDEN(1) and prod01 == GOLDEN(0)


def test_matrix_rank_over_field():
    rows = [[QQ(1), QQ(2)], [QQ(2), QQ(4)], [QQ(0), QQ(1)]]
    assert matrix_rank_over_field(rows) == 2


def test_restrict_to_line_detects_node_multiplicity():
    # f = x^2 z - y^2 z has an ordinary double point at (0:0:1).
    x = MultiPoly.variable(QQ, 3, 0)
    y = MultiPoly.variable(QQ, 3, 1)
    z = MultiPoly.variable(QQ, 3, 2)
    f = x * x * z - y * y * z
    coeffs = restrict_to_line(f, [0, 0, 1], [1, 2, 0])
    profile = multiplicity_profile(coeffs)
    assert profile["mult_p"] == 2
    # A line inside the surface restricts to zero.
    assert restrict_to_line(f, [1, 1, 0], [1, 1, 1]) == []
    with pytest.raises(ZeroForm):
        multiplicity_profile([])


def test_finite_field_arithmetic():
    for field in (F2, F5, F25):
        one = field.one
        for a in field.elements():
            if a == field.zero:
                continue
            assert field.mul(a, field.inv(a)) == one
            assert field.mul(field.frobenius(a), field.frobenius(a)) == field.frobenius(
                field.mul(a, a)
            )


def test_pg_point_counts():
    assert len(pg_points(3, F2)) == 7
    assert len(pg_points(3, F5)) == 31
    assert len(pg_points(2, F25)) == 26
