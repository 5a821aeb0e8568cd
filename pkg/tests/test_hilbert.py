"""Hilbert series, Hilbert polynomials, and the resolution numerator identity."""

import random

import pytest

from helpers import count_monomials, random_complex
from srbetti import (
    HVector,
    IntPolynomial,
    complex_from_facets,
    f_vector,
    h_vector,
    hilbert_polynomial,
    multiplicity,
    numerator_from_resolution,
    series_from_f,
    verify_series_identity,
)
from srbetti.hilbert import binom_int, divide_by_one_minus_z, one_minus_z_pow

C4 = complex_from_facets([["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]])
TRI = complex_from_facets([["1", "2"], ["1", "3"], ["2", "3"]])
TWO_POINTS = complex_from_facets([["a"], ["b"]])


def test_polynomial_basics():
    p = IntPolynomial((1, 2, 0, 0))
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    z = IntPolynomial(())
    assert z.is_zero and z.degree == float("-inf")
    q = IntPolynomial((0, 1))
    assert (p * q).coeffs == (0, 1, 2)
    assert (p - p).is_zero
    assert p.evaluate(3) == 7
    assert str(IntPolynomial((1, 2, 1))) == "1 + 2z + z^2"
    assert str(IntPolynomial((1, 0, -2, 1))) == "1 - 2z^2 + z^3"


def test_one_minus_z_powers_and_division():
    assert one_minus_z_pow(0).coeffs == (1,)
    assert one_minus_z_pow(2).coeffs == (1, -2, 1)
    for k in range(1, 6):
        p = one_minus_z_pow(k)
        assert divide_by_one_minus_z(p) == one_minus_z_pow(k - 1)
    with pytest.raises(ValueError):
        divide_by_one_minus_z(IntPolynomial((1, 1)))


def test_binom_int_negative_arguments():
    assert binom_int(5, 2) == 10
    assert binom_int(-1, 2) == 1
    assert binom_int(-2, 3) == -4
    assert binom_int(0, 0) == 1


def test_series_examples():
    s = series_from_f(f_vector(TWO_POINTS))
    assert s.numerator.coeffs == (1, 1) and s.pole_order == 1
    s = series_from_f(f_vector(C4))
    assert s.numerator.coeffs == (1, 2, 1) and s.pole_order == 2
    s = series_from_f(f_vector(complex_from_facets([["x", "y", "z"]])))
    assert s.numerator.coeffs == (1,) and s.pole_order == 3
    assert str(s) == "1 / (1-z)^3"


def test_series_numerator_is_h_vector():
    # two independent computation paths: rational-function summation vs the
    # alternating binomial transform
    rnd = random.Random(5001)
    for _ in range(120):
        f = f_vector(random_complex(rnd))
        s = series_from_f(f)
        h = h_vector(f)
        trimmed = list(h.entries)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        assert list(s.numerator.coeffs) == trimmed
        assert s.pole_order == f.d


def test_multiplicity_examples():
    assert multiplicity(HVector((1, 2, 1))) == 4
    assert multiplicity(HVector((1, 0, 0, 0))) == 1
    assert multiplicity(HVector((1, 1, 1))) == 3


def test_multiplicity_equals_top_f():
    rnd = random.Random(5002)
    for _ in range(120):
        f = f_vector(random_complex(rnd))
        assert multiplicity(h_vector(f)) == f.entries[-1]


def test_hilbert_polynomial_examples():
    hp = hilbert_polynomial(HVector((1, 2, 1)), 2)
    assert hp.binom_coeffs == (4, 0)
    assert [hp.evaluate(s) for s in (1, 2, 3)] == [4, 8, 12]
    assert hilbert_polynomial(HVector((1,)), 1).binom_coeffs == (1,)
    assert hilbert_polynomial(HVector((1, 1)), 1).binom_coeffs == (2,)
    assert hilbert_polynomial(HVector((1,)), 0).binom_coeffs == ()


def test_hilbert_polynomial_leading_is_multiplicity():
    rnd = random.Random(5003)
    for _ in range(60):
        f = f_vector(random_complex(rnd))
        if f.d == 0:
            continue
        hp = hilbert_polynomial(h_vector(f), f.d)
        assert hp.leading == multiplicity(h_vector(f))


def test_hilbert_polynomial_counts_monomials():
    # agreement with brute-force enumeration of monomials supported on faces
    rnd = random.Random(5004)
    cases = [C4, TRI, TWO_POINTS, complex_from_facets([["a", "b", "c"], ["c", "d"]])]
    cases += [random_complex(rnd, max_n=5) for _ in range(10)]
    for c in cases:
        f = f_vector(c)
        hp = hilbert_polynomial(h_vector(f), f.d)
        for s in range(1, 5):
            assert hp.evaluate(s) == count_monomials(c, s), (c.facets, s)


def test_numerator_from_resolution_examples():
    assert numerator_from_resolution(0, (2,), (1,)).coeffs == (1, 0, -1)
    assert numerator_from_resolution(1, (2, 4), (2, 1)).coeffs == (1, 0, -2, 0, 1)
    assert numerator_from_resolution(0, (3,), (1,)).coeffs == (1, 0, 0, -1)
    with pytest.raises(ValueError):
        numerator_from_resolution(1, (2, 2), (1, 1))
    with pytest.raises(ValueError):
        numerator_from_resolution(0, (2,), (0,))


def test_series_identity_examples():
    assert verify_series_identity(HVector((1, 2, 1)), 4, 2, 1, (2, 4), (2, 1)).is_zero
    assert verify_series_identity(HVector((1, 1)), 2, 1, 0, (2,), (1,)).is_zero
    corrupted = verify_series_identity(HVector((1, 2, 1)), 4, 2, 1, (2, 4), (3, 1))
    assert not corrupted.is_zero


def test_series_identity_perturbations():
    # flipping any single Betti number must leave a nonzero residual
    for k in range(2):
        betti = [2, 1]
        betti[k] += 1
        assert not verify_series_identity(HVector((1, 2, 1)), 4, 2, 1, (2, 4), tuple(betti)).is_zero
