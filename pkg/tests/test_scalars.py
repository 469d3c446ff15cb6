"""Exact scalar arithmetic: frozen values, field axioms, parsing round trips."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tljones.scalars import (
    GOLDEN,
    Scalar,
    ScalarFieldError,
    eval_poly,
    parse_scalar,
    scalar_str,
    sqrt_exact,
)

R = Scalar.rational
Q = Scalar.quadratic


class TestArithmetic:
    def test_rational_add(self):
        assert R(1, 2) + R(1, 3) == R(5, 6)

    def test_conjugate_surds_multiply_to_norm(self):
        assert Q(1, 1, 2) * Q(1, -1, 2) == R(-1)

    def test_quadratic_product_frozen(self):
        # ((5+sqrt5)/2) * ((3+sqrt5)/2) = (20+8*sqrt5)/4 = 5+2*sqrt5
        lhs = Q(Fraction(5, 2), Fraction(1, 2), 5) * Q(Fraction(3, 2), Fraction(1, 2), 5)
        assert lhs == Q(5, 2, 5)

    def test_golden_satisfies_its_quadratic(self):
        assert GOLDEN * GOLDEN == GOLDEN + 1

    def test_quad_inverse(self):
        g = Q(3, 1, 2)  # 3 + sqrt2, norm 7
        assert g * g.inverse() == R(1)
        assert g.inverse() == Q(Fraction(3, 7), Fraction(-1, 7), 2)

    def test_integer_powers(self):
        assert Q(0, 1, 2) ** 4 == R(4)
        assert Q(0, 1, 2) ** -2 == R(1, 2)
        assert R(3) ** 0 == R(1)

    def test_mixing_fields_raises(self):
        with pytest.raises(ScalarFieldError):
            Q(0, 1, 2) + Q(0, 1, 3)
        with pytest.raises(ScalarFieldError):
            Q(0, 1, 2) * Q(0, 1, 3)

    def test_float_demotion_is_explicit_only_for_mixed_fields(self):
        v = Q(0, 1, 2).to_float() * Q(0, 1, 3).to_float()
        assert v == pytest.approx(6**0.5)

    def test_exact_float_promotion(self):
        assert (R(1, 2) + Scalar.flt(0.25)).kind == "float"
        assert (Q(0, 1, 2) * Scalar.flt(1.0)).kind == "float"

    def test_complex_promotion(self):
        z = Scalar.cplx(1j)
        assert (z * z) == Scalar.cplx(-1 + 0j)
        assert z.conj() == Scalar.cplx(-1j)

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            R(1) / R(0)

    def test_radicand_reduction(self):
        assert Q(0, 1, 8) == Q(0, 2, 2)
        assert Q(0, 1, 9) == R(3)


class TestSqrtExact:
    def test_perfect_square(self):
        assert sqrt_exact(4) == R(2)

    def test_surd(self):
        assert sqrt_exact(2) == Q(0, 1, 2)

    def test_square_factor_extraction(self):
        assert sqrt_exact(8) == Q(0, 2, 2)

    def test_fraction(self):
        # sqrt(2/3) = sqrt(6)/3
        assert sqrt_exact(Fraction(2, 3)) == Q(0, Fraction(1, 3), 6)

    def test_zero(self):
        assert sqrt_exact(0) == R(0)

    def test_negative_raises(self):
        with pytest.raises(ValueError):
            sqrt_exact(-2)

    def test_quadratic_input_same_field(self):
        assert sqrt_exact(GOLDEN + 1) == GOLDEN
        # sqrt(3 + 2*sqrt2) = 1 + sqrt2
        assert sqrt_exact(Q(3, 2, 2)) == Q(1, 1, 2)

    def test_quadratic_input_outside_field_raises(self):
        with pytest.raises(ValueError):
            sqrt_exact(Q(0, 1, 2))  # 2**(1/4) is quartic over Q


class TestOrderingAndSign:
    def test_surd_vs_rational(self):
        assert Q(0, 1, 2) < R(3, 2)
        assert Q(0, 1, 2) > R(7, 5)

    def test_signs(self):
        assert Q(1, -1, 2).sign() == -1  # 1 - sqrt2 < 0
        assert Q(-1, 1, 2).sign() == 1
        assert Q(-2, 1, 2).sign() == -1
        assert R(0).sign() == 0

    def test_abs(self):
        assert abs(Q(1, -1, 2)) == Q(-1, 1, 2)

    def test_close_to(self):
        assert Q(0, 1, 2).close_to(1.41421356237, tol=1e-9)
        assert not Q(0, 1, 2).close_to(1.41, tol=1e-9)


class TestEvalPoly:
    # t(t-1)(t-2) has ascending coefficients [0, 2, -3, 1]
    FALLING = [0, 2, -3, 1]

    def test_at_integers(self):
        assert eval_poly(self.FALLING, 3) == R(6)
        assert eval_poly(self.FALLING, 2) == R(0)

    def test_at_quadratic_point_frozen(self):
        # t = (5+sqrt5)/2: product is (15+7*sqrt5)/2
        t = Q(Fraction(5, 2), Fraction(1, 2), 5)
        assert eval_poly(self.FALLING, t) == Q(Fraction(15, 2), Fraction(7, 2), 5)

    def test_empty_poly(self):
        assert eval_poly([], 7) == R(0)


class TestParseFormat:
    @pytest.mark.parametrize(
        "text,value",
        [
            ("3", R(3)),
            ("-3", R(-3)),
            ("2/3", R(2, 3)),
            ("-2/3", R(-2, 3)),
            ("sqrt(2)", Q(0, 1, 2)),
            ("-sqrt(2)", Q(0, -1, 2)),
            ("sqrt(5/2)", sqrt_exact(Fraction(5, 2))),
            ("golden", GOLDEN),
            ("(1+sqrt(5))/2", GOLDEN),
            ("(1-2*sqrt(2))/3", Q(Fraction(1, 3), Fraction(-2, 3), 2)),
            ("(-3+sqrt(13))/2", Q(Fraction(-3, 2), Fraction(1, 2), 13)),
            ("4.7", Scalar.flt(4.7)),
            ("1e-3", Scalar.flt(0.001)),
        ],
    )
    def test_parse(self, text, value):
        assert parse_scalar(text) == value

    def test_parse_garbage_raises(self):
        with pytest.raises(ValueError):
            parse_scalar("sqrt(-1)")
        with pytest.raises(ValueError):
            parse_scalar("two")

    @pytest.mark.parametrize(
        "value",
        [R(5, 6), R(-7), Q(0, 1, 2), Q(Fraction(1, 2), Fraction(1, 2), 5), Q(3, -2, 7)],
    )
    def test_exact_round_trip(self, value):
        assert parse_scalar(scalar_str(value)) == value

    def test_float_round_trip(self):
        assert parse_scalar(scalar_str(Scalar.flt(4.7))) == Scalar.flt(4.7)


rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
quads = st.builds(
    lambda p, q: Q(p, q, 2),
    rationals,
    st.fractions(min_value=-60, max_value=60, max_denominator=9),
)


class TestFieldAxioms:
    @given(rationals, rationals, rationals)
    def test_rational_ring_axioms(self, a, b, c):
        x, y, z = R(a), R(b), R(c)
        assert (x + y) * z == x * z + y * z
        assert x * (y * z) == (x * y) * z
        assert x + y == y + x

    @given(quads, quads, quads)
    def test_quadratic_ring_axioms(self, x, y, z):
        assert (x + y) * z == x * z + y * z
        assert x * (y * z) == (x * y) * z
        assert x - x == R(0)

    @given(quads)
    def test_quadratic_inverse(self, x):
        if not x.is_zero():
            assert x * x.inverse() == R(1)

    @given(quads, quads)
    def test_order_translation_invariant(self, x, y):
        if x < y:
            assert x + 1 < y + 1
            assert -y < -x
