from fractions import Fraction
from math import comb, factorial, perm

import pytest
from hypothesis import given
from hypothesis import strategies as strat

from stirlingtools.arith import falling_factorial
from stirlingtools.polynomials import (
    IntPolynomial,
    RootKind,
    convolution_check,
    eval_definition,
    gould_expansion,
    kth_derivative,
    p_polynomial,
    real_roots,
    recenter_at_half_n,
    reconstruct_from_v,
    stirling_function_poly,
    taylor_coefficients,
    v_number,
)
from stirlingtools.stirling import stirling2

# grid shared by most identity checks: every pair with d > 0
GRID = [(n + d, n) for n in range(1, 9) for d in range(1, 9)]


def sample_points(n):
    return [
        Fraction(-2),
        Fraction(-1, 2),
        Fraction(0),
        Fraction(1, 3),
        Fraction(n, 2),
        Fraction(n - 1),
        Fraction(n),
        Fraction(n + 2),
    ]


# ---------------------------------------------------------------- polynomial type


coeff_lists = strat.lists(strat.integers(min_value=-50, max_value=50), max_size=8)


def test_canonical_form_strips_trailing_zeros():
    assert IntPolynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert IntPolynomial([0, 0]).coefficients == ()
    assert not IntPolynomial([])
    assert IntPolynomial([0, 1]).degree == 1
    assert IntPolynomial([]).degree == -1


@given(coeff_lists, coeff_lists, strat.fractions(max_numerator=100, max_denominator=20))
def test_ring_operations_commute_with_evaluation(a, b, z):
    pa, pb = IntPolynomial(a), IntPolynomial(b)
    assert (pa + pb)(z) == pa(z) + pb(z)
    assert (pa - pb)(z) == pa(z) - pb(z)
    assert (pa * pb)(z) == pa(z) * pb(z)


@given(coeff_lists, coeff_lists, strat.fractions(max_numerator=30, max_denominator=10))
def test_composition_commutes_with_evaluation(a, b, z):
    pa, pb = IntPolynomial(a), IntPolynomial(b)
    assert pa.compose(pb)(z) == pa(pb(z))


@given(coeff_lists)
def test_derivative_of_antiderivative_pattern(a):
    # derivative lowers each exponent: checked against the finite
    # difference-free closed form sum i*c_i*z^(i-1) at a few points
    poly = IntPolynomial(a)
    deriv = poly.derivative()
    for z in (Fraction(-1), Fraction(1, 2), Fraction(3)):
        direct = sum(
            i * c * z ** (i - 1) for i, c in enumerate(poly.coefficients) if i >= 1
        )
        assert deriv(z) == direct


def test_serialize():
    assert IntPolynomial([0, -12, 6]).serialize() == "0,-12,6"
    assert IntPolynomial([]).serialize() == ""


def test_taylor_coefficients_roundtrip():
    poly = IntPolynomial([7, -12, 6])
    coeffs = taylor_coefficients(poly, Fraction(1))
    for z in (Fraction(0), Fraction(5, 3), Fraction(-7, 2)):
        assert sum(c * (z - 1) ** k for k, c in enumerate(coeffs)) == poly(z)


# ---------------------------------------------------------------- P and S(m,n,z)


def test_p_polynomial_frozen_values():
    assert p_polynomial(4, 2) == IntPolynomial([0, -12, 6])
    assert p_polynomial(5, 2) == IntPolynomial([0, -35, 30, -10])
    assert p_polynomial(3, 5) == IntPolynomial([])


def test_p_polynomial_shape():
    for m, n in GRID:
        poly = p_polynomial(m, n)
        assert poly.degree == m - n
        assert poly.coefficient(0) == 0  # z = 0 is always a root


def test_stirling_function_poly_frozen_values():
    assert stirling_function_poly(4, 2) == IntPolynomial([7, -12, 6])
    assert stirling_function_poly(5, 2) == IntPolynomial([15, -35, 30, -10])
    for n in range(1, 9):
        assert stirling_function_poly(n, n) == IntPolynomial([1])
    assert stirling_function_poly(2, 5) == IntPolynomial([])


def test_constant_shift_is_stirling_number():
    for m, n in GRID:
        diff = stirling_function_poly(m, n) - p_polynomial(m, n)
        assert diff == IntPolynomial([stirling2(m, n)])


def test_eval_definition_examples():
    assert eval_definition(4, 2, 1) == 1
    assert eval_definition(4, 2, Fraction(1, 2)) == Fraction(5, 2)
    # at z = n with even d the value is S(m, n) itself
    assert eval_definition(6, 4, 4) == 65
    assert eval_definition(6, 4, 3) == 20  # generic interior point


def test_eval_definition_at_zero_is_stirling_number():
    for m in range(1, 13):
        for n in range(1, 13):
            assert eval_definition(m, n, 0) == stirling2(m, n)


def test_polynomial_path_matches_definition_oracle():
    for m, n in GRID:
        poly = stirling_function_poly(m, n)
        for z in sample_points(n):
            assert Fraction(poly(z)) == eval_definition(m, n, z)


def test_definition_is_constant_when_d_nonpositive():
    for n in range(1, 11):
        for m in range(1, n + 1):
            expected = stirling2(m, n)
            for z in sample_points(n):
                assert eval_definition(m, n, z) == expected


# ---------------------------------------------------------------- derivatives


def test_kth_derivative_frozen_values():
    assert kth_derivative(4, 2, 1) == IntPolynomial([-12, 12])
    assert kth_derivative(4, 2, 1)(0) == -12 == -4 * stirling2(3, 2)
    assert kth_derivative(4, 2, 2) == IntPolynomial([12])
    assert kth_derivative(4, 2, 2)(2) == perm(4, 2) * stirling2(2, 2)


def test_kth_derivative_beyond_degree_is_zero():
    assert kth_derivative(4, 2, 3) == IntPolynomial([])
    assert kth_derivative(3, 3, 1) == IntPolynomial([])
    with pytest.raises(ValueError):
        kth_derivative(4, 2, 0)


def test_derivative_values_at_endpoints():
    # P^(j)(0) = (-1)^j (m)_j S(m-j, n);  P^(j)(n) = (-1)^d (m)_j S(m-j, n)
    for m, n in GRID:
        d = m - n
        for j in range(1, d + 1):
            deriv = kth_derivative(m, n, j)
            expected = perm(m, j) * stirling2(m - j, n)
            assert deriv(0) == (-1) ** j * expected
            assert deriv(n) == (-1) ** d * expected


def test_symmetry_about_half_n():
    # k-th derivative at z equals (-1)^(d-k) times the value at n - z
    for m, n in GRID:
        d = m - n
        for k in range(1, d + 1):
            deriv = kth_derivative(m, n, k)
            reflected = deriv.compose(IntPolynomial([n, -1]))
            assert deriv == (-1) ** (d - k) * reflected


def test_one_step_recurrence_as_polynomials():
    # S(m,n,z) = S(m-1,n-1,z-1) - z * S(m-1,n,z)
    shift = IntPolynomial([-1, 1])
    z_poly = IntPolynomial([0, 1])
    for m, n in GRID:
        if m < 2 or n < 2:
            continue
        lhs = stirling_function_poly(m, n)
        rhs = stirling_function_poly(m - 1, n - 1).compose(shift) - z_poly * (
            stirling_function_poly(m - 1, n)
        )
        assert lhs == rhs


def test_derivative_reduces_row_index():
    # S^(k)(m,n,z) = (-1)^k (m)_k S(m-k,n,z)
    for m, n in GRID:
        d = m - n
        for k in range(1, d + 1):
            lhs = kth_derivative(m, n, k)
            rhs = (-1) ** k * perm(m, k) * stirling_function_poly(m - k, n)
            assert lhs == rhs


def test_odd_gap_derivatives_vanish_at_half_n():
    for m, n in GRID:
        d = m - n
        for k in range(1, d + 1):
            if (d - k) % 2 == 1:
                assert kth_derivative(m, n, k)(Fraction(n, 2)) == 0


def test_even_gap_derivatives_have_no_real_roots():
    # for (d - k) even the k-th derivative is +/- (m)_k S(m-k, n, z), whose
    # recentred form has positive even coefficients only
    for m, n in GRID:
        d = m - n
        for k in range(1, d + 1):
            if (d - k) % 2 or d == k:
                continue
            coeffs = recenter_at_half_n(m - k, n)
            assert all(c > 0 for i, c in enumerate(coeffs) if i % 2 == 0)
            assert all(c == 0 for i, c in enumerate(coeffs) if i % 2 == 1)


# ---------------------------------------------------------------- expansions


def test_gould_expansion_values():
    assert gould_expansion(4, 2) == [14, 36, 24]
    for n in range(1, 8):
        assert gould_expansion(n, n) == [factorial(n)]


def test_gould_identity_at_rational_points():
    # sum_k C(n,k)(-1)^k (z-k)^m  ==  sum_j C(z-n, j) B(m, n+j)
    for m, n in GRID[:32] + [(5, 2)]:
        coeffs = gould_expansion(m, n)
        for z in (Fraction(7, 2), Fraction(-1, 3), Fraction(0), Fraction(n), Fraction(5, 7)):
            lhs = sum(comb(n, k) * (-1) ** k * (z - k) ** m for k in range(n + 1))
            rhs = sum(
                falling_factorial(z - n, j) / factorial(j) * coeffs[j]
                for j in range(len(coeffs))
            )
            assert lhs == rhs


def test_convolution_identity():
    lhs, rhs = convolution_check(4, 2, 2)
    assert lhs == rhs == 6
    lhs, rhs = convolution_check(5, 2, 1)
    assert lhs == rhs
    for m, n in GRID:
        d = m - n
        for j in range(1, d + 1):
            lhs, rhs = convolution_check(m, n, j)
            assert lhs == rhs
        # the j = d instance is forced by s(d,d) = S(m,m) = 1
        assert convolution_check(m, n, d) == (comb(m, d), comb(m, d))


def test_recenter_at_half_n_parity_split():
    # frozen by shifting 6z^2 - 12z + 7 to w = z - 1 by hand: 6w^2 + 1
    assert recenter_at_half_n(4, 2) == [1, 0, 6]
    assert recenter_at_half_n(5, 2) == [0, -5, 0, -10]
    for m, n in GRID:
        d = m - n
        coeffs = recenter_at_half_n(m, n)
        assert len(coeffs) == d + 1
        if d % 2 == 0:
            assert all(c == 0 for i, c in enumerate(coeffs) if i % 2 == 1)
            assert all(c > 0 for i, c in enumerate(coeffs) if i % 2 == 0)
        else:
            assert all(c == 0 for i, c in enumerate(coeffs) if i % 2 == 0)


def test_recentred_series_reproduces_polynomial():
    for m, n in [(6, 2), (7, 3), (9, 4)]:
        poly = stirling_function_poly(m, n)
        coeffs = recenter_at_half_n(m, n)
        for z in sample_points(n):
            total = sum(c * (z - Fraction(n, 2)) ** k for k, c in enumerate(coeffs))
            assert total == poly(z)


# ---------------------------------------------------------------- minima


def test_v_number_examples():
    assert v_number(4, 2) == 1
    assert v_number(5, 2) == 0  # odd d vanishes at n/2
    for n in range(1, 9):
        assert v_number(n, n) == 1
    assert v_number(2, 5) == 0  # identically zero function
    assert v_number(3, 1) == Fraction(1, 4)  # frozen from the defining sum
    assert v_number(6, 4) == 5
    assert v_number(8, 4) == 21


def test_v_number_is_integral_for_even_n():
    for n in range(2, 11, 2):
        for d in range(1, 13):
            assert v_number(n + d, n).denominator == 1


def test_v_number_is_the_global_minimum_on_a_grid():
    # redundant sanity check of the structural argument: sample |S(m,n,z)|
    for m, n in [(6, 2), (8, 4), (7, 3)]:
        v = v_number(m, n)
        poly = stirling_function_poly(m, n)
        for num in range(-8, 8 * n + 1):
            z = Fraction(num, 8)
            assert abs(Fraction(poly(z))) >= v


def test_reconstruct_from_v():
    assert reconstruct_from_v(4, 2) == 7
    assert reconstruct_from_v(3, 2) == 3
    for n in range(1, 11):
        for d in range(1, 13):
            assert reconstruct_from_v(n + d, n) == stirling2(n + d, n)
    with pytest.raises(ValueError):
        reconstruct_from_v(3, 3)


# ---------------------------------------------------------------- real roots


def test_real_roots_classification():
    assert real_roots(4, 2).kind is RootKind.ZERO_AND_N
    assert real_roots(4, 2).simple_certified
    assert real_roots(5, 2).kind is RootKind.ZERO_ONLY
    assert real_roots(5, 2).simple_certified
    assert real_roots(2, 5).kind is RootKind.ALL_REALS
    for m, n in GRID:
        d = m - n
        classification = real_roots(m, n)
        if d % 2 == 1:
            assert classification.kind is RootKind.ZERO_ONLY
        else:
            assert classification.kind is RootKind.ZERO_AND_N
        assert classification.simple_certified


def test_nonreal_roots_exist_for_large_d():
    for m, n in GRID:
        d = m - n
        if d > 2:
            classification = real_roots(m, n)
            gap = p_polynomial(m, n).degree - classification.certified_real_root_count
            assert gap >= 1
