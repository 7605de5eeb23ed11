import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadfib.errors import (
    MixedFieldsError,
    NonPositiveIndexError,
    NotPositiveError,
    NotSquarefreeError,
    PerfectSquareError,
)
from quadfib.quadfield import (
    QuadElement,
    matrix_rep,
    power_coeffs_closed,
    validate_d,
)

D2, D3, D5, D10, D13, D17 = (validate_d(n) for n in (2, 3, 5, 10, 13, 17))
D_SAMPLES = (D2, D3, D5, D10, D13, D17)

# integral generators of interest: hand-checked units of small fields
UNITS = (
    QuadElement(D2, 1, 1),
    QuadElement(D3, 2, 1),
    QuadElement(D5, Fraction(1, 2), Fraction(1, 2)),
    QuadElement(D10, 3, 1),
    QuadElement(D13, Fraction(3, 2), Fraction(1, 2)),
    QuadElement(D17, 4, 1),
)

small_fractions = st.fractions(min_value=-8, max_value=8, max_denominator=6)


@st.composite
def quad_elements(draw):
    d = draw(st.sampled_from(D_SAMPLES))
    return QuadElement(d, draw(small_fractions), draw(small_fractions))


@st.composite
def integral_elements(draw):
    d = draw(st.sampled_from(D_SAMPLES))
    if d.is_one_mod_four:
        tx = draw(st.integers(-9, 9))
        ty = draw(st.integers(-9, 9).map(lambda t: t if (t - tx) % 2 == 0 else t + 1))
        return QuadElement(d, Fraction(tx, 2), Fraction(ty, 2))
    return QuadElement(d, draw(st.integers(-9, 9)), draw(st.integers(-9, 9)))


class TestValidateD:
    def test_one_mod_four_keeps_d_as_discriminant(self):
        fd = validate_d(5)
        assert (fd.d, fd.discriminant) == (5, 5)

    def test_two_mod_four_gets_discriminant_4d(self):
        fd = validate_d(2)
        assert (fd.d, fd.discriminant) == (2, 8)

    @pytest.mark.parametrize("n", [12, 8, 18, 50, 99999996])
    def test_square_divisible_rejected(self, n):
        with pytest.raises(NotSquarefreeError):
            validate_d(n)

    @pytest.mark.parametrize("n", [1, 0, -4])
    def test_small_rejected(self, n):
        with pytest.raises(NotPositiveError):
            validate_d(n)

    @pytest.mark.parametrize("n", [4, 9, 169])
    def test_perfect_square_rejected(self, n):
        with pytest.raises(PerfectSquareError):
            validate_d(n)


class TestArithmetic:
    def test_mul_hand_expansion(self):
        e = QuadElement(D2, 1, 1)
        assert e * e == QuadElement(D2, 3, 2)

    def test_element_times_conjugate_is_norm(self):
        e = QuadElement(D10, 3, 1)
        assert e * e.conj() == e.norm() == -1

    def test_inverse_of_golden_ratio(self):
        golden = QuadElement(D5, Fraction(1, 2), Fraction(1, 2))
        inv = golden.inverse()
        assert inv == QuadElement(D5, Fraction(-1, 2), Fraction(1, 2))
        assert golden * inv == 1

    @pytest.mark.parametrize(
        "e, expected",
        [
            (QuadElement(D2, 1, 1), -1),
            (QuadElement(D5, Fraction(1, 2), Fraction(1, 2)), -1),
            (QuadElement(D3, 2, 1), 1),
        ],
    )
    def test_norm_values(self, e, expected):
        assert e.norm() == expected

    def test_mixed_fields_rejected(self):
        with pytest.raises(MixedFieldsError):
            QuadElement(D2, 1, 1) * QuadElement(D3, 1, 1)

    def test_inverse_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            QuadElement.zero(D2).inverse()

    def test_division(self):
        e = QuadElement(D2, 3, 2)
        f = QuadElement(D2, 1, 1)
        assert e / f == f  # (3+2*sqrt2)/(1+sqrt2) = 1+sqrt2


class TestPow:
    def test_square(self):
        assert QuadElement(D2, 1, 1) ** 2 == QuadElement(D2, 3, 2)

    def test_zeroth_power_is_one(self):
        assert QuadElement(D13, Fraction(3, 2), Fraction(1, 2)) ** 0 == 1

    def test_golden_sixth_power_gives_classical_f6(self):
        golden = QuadElement(D5, Fraction(1, 2), Fraction(1, 2))
        p = golden**6
        assert p == QuadElement(D5, 9, 4)
        assert p.y / golden.y == 8

    def test_negative_power_of_zero_raises(self):
        with pytest.raises(ZeroDivisionError):
            QuadElement.zero(D2) ** -1

    @pytest.mark.parametrize("e", UNITS)
    def test_addition_law_on_units(self, e):
        powers = {n: e**n for n in range(-20, 21)}
        for m in range(-20, 21, 4):
            for n in range(-20, 21, 3):
                if -20 <= m + n <= 20:
                    assert powers[m] * powers[n] == powers[m + n]


class TestIsIntegral:
    def test_half_basis_element(self):
        assert QuadElement(D5, Fraction(1, 2), Fraction(1, 2)).is_integral()

    def test_halves_rejected_outside_one_mod_four(self):
        assert not QuadElement(D2, Fraction(1, 2), Fraction(1, 2)).is_integral()

    def test_mismatched_parity_rejected(self):
        assert not QuadElement(D5, Fraction(1, 2), 1).is_integral()

    def test_integer_coordinates(self):
        assert QuadElement(D17, 4, 1).is_integral()


class TestPowerCoeffsClosed:
    def test_fourth_power(self):
        assert power_coeffs_closed(QuadElement(D2, 1, 1), 4) == (17, 12)

    def test_first_power_is_identity(self):
        e = QuadElement(D3, Fraction(5, 3), Fraction(-2, 7))
        assert power_coeffs_closed(e, 1) == (e.x, e.y)

    def test_cross_check_with_lucas_table(self):
        # (3+sqrt10)^2 = 19+6*sqrt10, so L_2 = 19/3 for d = 10
        assert power_coeffs_closed(QuadElement(D10, 3, 1), 2) == (19, 6)

    def test_nonpositive_index_rejected(self):
        with pytest.raises(NonPositiveIndexError):
            power_coeffs_closed(QuadElement(D2, 1, 1), 0)

    @pytest.mark.parametrize("e", UNITS)
    def test_agrees_with_binary_exponentiation_to_60(self, e):
        power = e
        for n in range(1, 61):
            assert power_coeffs_closed(e, n) == (power.x, power.y)
            power = power * e

    @given(integral_elements(), st.integers(1, 12))
    @settings(max_examples=60)
    def test_agrees_with_pow_on_random_integral_elements(self, e, n):
        p = e**n
        assert power_coeffs_closed(e, n) == (p.x, p.y)


class TestAlgebraicProperties:
    @given(quad_elements())
    def test_conj_is_involution(self, e):
        assert e.conj().conj() == e

    @given(st.data())
    def test_conj_is_ring_homomorphism(self, data):
        d = data.draw(st.sampled_from(D_SAMPLES))
        e = QuadElement(d, data.draw(small_fractions), data.draw(small_fractions))
        f = QuadElement(d, data.draw(small_fractions), data.draw(small_fractions))
        assert (e * f).conj() == e.conj() * f.conj()
        assert (e + f).conj() == e.conj() + f.conj()

    @given(st.data())
    def test_norm_is_multiplicative(self, data):
        d = data.draw(st.sampled_from(D_SAMPLES))
        e = QuadElement(d, data.draw(small_fractions), data.draw(small_fractions))
        f = QuadElement(d, data.draw(small_fractions), data.draw(small_fractions))
        assert (e * f).norm() == e.norm() * f.norm()

    @given(st.data())
    def test_matrix_rep_is_multiplicative_with_matching_det(self, data):
        d = data.draw(st.sampled_from(D_SAMPLES))
        e = QuadElement(d, data.draw(small_fractions), data.draw(small_fractions))
        f = QuadElement(d, data.draw(small_fractions), data.draw(small_fractions))
        assert matrix_rep(e) * matrix_rep(f) == matrix_rep(e * f)
        assert matrix_rep(e).det() == e.norm()
        assert matrix_rep(e).to_element() == e


class TestExactOrder:
    def test_floor_of_golden_ratio(self):
        golden = QuadElement(D5, Fraction(1, 2), Fraction(1, 2))
        assert math.floor(golden) == 1
        assert math.ceil(golden) == 2
        assert math.floor(-golden) == -2

    def test_floor_matches_float_on_safe_cases(self):
        for e in UNITS:
            for n in range(1, 8):
                p = e**n
                assert math.floor(p) == math.floor(float(p))

    def test_comparisons_across_signs(self):
        e = QuadElement(D2, 3, -2)  # 3 - 2*sqrt(2) ~ 0.17
        assert 0 < e < 1
        assert QuadElement(D2, -3, 2) < 0
        assert QuadElement(D2, 1, 1) > 2

    def test_scaled_floor_used_by_fixed_point(self):
        golden = QuadElement(D5, Fraction(1, 2), Fraction(1, 2))
        assert math.floor(golden * 10**5) == 161803
