import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from signed_chroma.errors import InexactDivision, InterpolationError
from signed_chroma.polynomials import (IntPolynomial, as_linear_power, exact_divide, falling_factorial,
                                       from_two_k_basis, from_two_k_minus_one_basis, interpolate)

LAM = IntPolynomial((0, 1))
X = IntPolynomial((-1, 1))

int_coeffs = st.lists(st.integers(-50, 50), max_size=9)


def test_ring_operations():
    assert X * X == IntPolynomial((1, -2, 1))
    assert (X * X).evaluate(3) == 4
    p = IntPolynomial((3, 0, 2))
    assert p + IntPolynomial(()) == p
    assert p - p == IntPolynomial(())
    assert (p - p).degree == -1


def test_canonical_form_trims_zeros():
    assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
    assert IntPolynomial((0, 0)).coefficients == ()


def test_parity_checked_evaluation():
    odd = X.with_parity("odd")
    assert odd(3) == 2
    with pytest.raises(ValueError):
        odd(2)
    with pytest.raises(ValueError):
        LAM.with_parity("even")(3)


def test_mixing_parities_is_rejected():
    with pytest.raises(ValueError):
        X.with_parity("odd") + X.with_parity("even")


def test_two_k_basis():
    # (2k)^2 at lambda = 2k+1
    assert from_two_k_basis([0, 0, 1]) == X ** 2
    assert from_two_k_basis([0, 0, 1]).parity == "odd"
    assert from_two_k_minus_one_basis([0, 1]) == X
    assert from_two_k_minus_one_basis([0, 1]).parity == "even"
    # (2k)^3 - (2k)^2, expanded by hand: lambda^3 - 4 lambda^2 + 5 lambda - 2
    assert from_two_k_basis([0, 0, -1, 1]).coefficients == (-2, 5, -4, 1)


@given(int_coeffs)
def test_two_k_basis_commutes_with_evaluation(coeffs):
    p = from_two_k_basis(coeffs)
    q = from_two_k_minus_one_basis(coeffs)
    for k in range(6):
        assert p(2 * k + 1) == sum(c * (2 * k) ** i for i, c in enumerate(coeffs))
        if k:
            assert q(2 * k) == sum(c * (2 * k - 1) ** i for i, c in enumerate(coeffs))


def test_exact_divide_examples():
    assert exact_divide(LAM * LAM - 1, X) == LAM + 1
    cycle3 = X ** 3 - X
    assert exact_divide(cycle3 ** 2, LAM * X).coefficients == (0, -4, 8, -5, 1)
    with pytest.raises(InexactDivision):
        exact_divide(LAM * LAM + 1, LAM)
    with pytest.raises(ZeroDivisionError):
        exact_divide(LAM, IntPolynomial(()))


@given(int_coeffs, int_coeffs.filter(lambda c: any(c)))
def test_exact_divide_round_trip(a, b):
    pa, pb = IntPolynomial(a), IntPolynomial(b)
    if pb.is_zero():
        return
    assert exact_divide(pa * pb, pb) == pa


def test_interpolate_examples():
    assert interpolate([(1, 0), (3, 4), (5, 16)], 2) == X ** 2
    assert interpolate([(0, 1), (1, 1)], 0) == IntPolynomial((1,))
    with pytest.raises(InterpolationError):
        interpolate([(0, 0), (1, 1), (2, 3)], 2, monic=True)
    with pytest.raises(InterpolationError):
        interpolate([(0, 0), (0, 1)], 1)


@settings(max_examples=60)
@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=9))
def test_interpolate_round_trip(coeffs):
    p = IntPolynomial(coeffs)
    deg = max(p.degree, 0)
    pts = [(x, p.evaluate(x)) for x in range(-3, deg - 2)]
    assert interpolate(pts, deg) == p


def test_falling_factorial():
    assert falling_factorial(0) == IntPolynomial((1,))
    assert falling_factorial(3) == LAM * (LAM - 1) * (LAM - 2)


def test_json_round_trip_uses_decimal_strings():
    p = IntPolynomial((-(10**30), 0, 7), "even")
    data = p.to_json()
    assert data == {"variable": "lambda", "parity": "even",
                    "coefficients": ["-1000000000000000000000000000000", "0", "7"]}
    back = IntPolynomial.from_json(json.dumps(data))
    assert back == p and back.parity == "even"


def test_latex_descending_powers():
    assert (LAM ** 3 - 3 * LAM ** 2 + 3 * LAM).latex() == r"\lambda^{3}-3\lambda^{2}+3\lambda"
    assert IntPolynomial(()).latex() == "0"
    assert (-LAM + 1).latex() == r"-\lambda+1"


def test_half_basis():
    assert (X ** 3).with_parity("odd").in_half_basis() == [0, 0, 0, Fraction(8)]
    assert (LAM ** 2 - 2 * LAM).with_parity("even").in_half_basis() == [0, -4, 4]


def test_linear_power_detection():
    assert as_linear_power(X ** 3) == (1, 3)
    assert as_linear_power(LAM ** 2 - 2 * LAM) is None
