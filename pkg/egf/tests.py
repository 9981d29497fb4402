from fractions import Fraction
from itertools import combinations_with_replacement

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from counting.polynomials import boundary, flag_polynomial
from exactmath.numbers import bell, binomial, factorial, stirling2
from faces.lattice import count_flags
from .flags import (
    alpha_q_series, alpha_series, coefficient_rows, extract_flag_count,
    g_component_derivative_target, g_component_direct, g_component_series,
    permutahedra_series, xi_series,
)
from .series import (
    BiSeries, Caps, SeriesCapError, SeriesDivisionError, SeriesError, exp_tail,
    series_add, series_divide_exact, series_exp, series_mul, series_pow, series_scale,
    touchard_series, truncated_exp,
)

CAPS = Caps(6, 2, 6)


def _u(caps=CAPS):
    return BiSeries.monomial(caps, a=1, c=1)


def _y(caps=CAPS):
    return BiSeries.monomial(caps, c=1)


def _standard_family_coefficients(ell, caps):
    """
    (e^{S (e^{xy} - 1)/x} - 1)/S coefficient by coefficient.

    The m-th power contributes S(n, m) x^{n-m} y^n / n! times S^{m-1},
    with S = 1 + s, or S = 1 when ell = 1.
    """
    terms = {}
    for n in range(1, caps.dy + 1):
        for a in range(min(n - 1, caps.dx) + 1):
            m = n - a
            for b in range(caps.ds + 1 if ell > 1 else 1):
                terms[(a, b, n)] = Fraction(stirling2(n, m) * binomial(m - 1, b), factorial(n))
    return BiSeries(terms, caps)


class BiSeriesArithmeticTest(SimpleTestCase):
    """Tests for the truncated series ring."""

    def test_product_and_sum(self):
        """Test (1 + xy)(1 - xy) = 1 - x^2 y^2 and a + 0 = a."""
        one = BiSeries.one(CAPS)
        product = series_mul(one + _u(), one - _u())
        self.assertEqual(product, BiSeries({(0, 0, 0): 1, (2, 0, 2): -1}, CAPS))
        self.assertEqual(series_add(product, BiSeries.zero(CAPS)), product)

    def test_square_of_exponential(self):
        """Test that (e^{xy})^2 has coefficient 2 at x^2 y^2."""
        e = series_exp(_u())
        self.assertEqual((e * e).coefficient(2, 0, 2), 2)

    def test_truncation_at_caps(self):
        """Test that products drop terms beyond the caps."""
        self.assertFalse(series_pow(_u(), 7))
        self.assertEqual(series_scale(_u(), Fraction(1, 2)).coefficient(1, 0, 1), Fraction(1, 2))

    def test_cap_mismatch(self):
        """Test that operands with different caps are rejected."""
        with self.assertRaises(SeriesCapError):
            _u() + _u(Caps(5, 2, 6))
        with self.assertRaises(SeriesCapError):
            _u() * _u(Caps(5, 2, 6))
        with self.assertRaises(SeriesCapError):
            _u().coefficient(7, 0, 0)
        with self.assertRaises(SeriesCapError):
            _u().truncate((7, 2, 6))

    def test_exp(self):
        """Test exp(0) = 1 and the constant term guard."""
        self.assertEqual(series_exp(BiSeries.zero(CAPS)), BiSeries.one(CAPS))
        with self.assertRaises(SeriesError):
            series_exp(BiSeries.one(CAPS))

    def test_truncated_exp_and_tail(self):
        """Test E_m(a) + (e^a - E_m(a)) = e^a."""
        a = _u() + _y()
        for m in range(4):
            self.assertEqual(truncated_exp(m, a) + exp_tail(a, m), series_exp(a))
        self.assertEqual(truncated_exp(1, a), BiSeries.one(CAPS) + a)

    @settings(max_examples=100)
    @given(st.dictionaries(
        st.tuples(st.integers(0, 4), st.integers(0, 2), st.integers(0, 4)),
        st.fractions(max_denominator=12),
        max_size=12,
    ))
    def test_derivative_and_integral(self, terms):
        """Test that d/dx inverts the integral and the integral restores all but x^0 terms."""
        caps = Caps(4, 2, 4)
        series = BiSeries(terms, caps)
        self.assertEqual(series.integrate_x().derivative_x(), series)
        without_constant = BiSeries({e: v for e, v in terms.items() if e[0] > 0}, caps)
        self.assertEqual(series.derivative_x().integrate_x(), without_constant)


class DivisionTest(SimpleTestCase):
    """Tests for series_divide_exact."""

    def test_self_division(self):
        """Test (e^{xy} - 1) / (e^{xy} - 1) = 1 at reduced caps."""
        t = exp_tail(_u(), 0)
        quotient = series_divide_exact(t, t, (1, 0, 1))
        self.assertEqual(quotient, BiSeries.one(Caps(5, 2, 5)))

    def test_square_over_base(self):
        """Test (e^y - 1)^2 / (e^y - 1) = e^y - 1."""
        t = exp_tail(_y(), 0)
        quotient = series_divide_exact(t * t, t, (0, 0, 1))
        self.assertEqual(quotient, t.truncate(Caps(6, 2, 5)))

    def test_leading_ratio(self):
        """Test that (e^y - E_1(y)) / (e^y - 1)^2 starts with 1/2."""
        t = exp_tail(_y(), 0)
        quotient = series_divide_exact(exp_tail(_y(), 1), t * t, (0, 0, 2))
        self.assertEqual(quotient.coefficient(0, 0, 0), Fraction(1, 2))

    def test_unit_division(self):
        """Test division by 1 + s."""
        block = BiSeries({(0, 0, 0): 1, (0, 1, 0): 1}, CAPS)
        self.assertEqual(series_divide_exact(block * _u(), block), _u())

    def test_non_dividing_monomial(self):
        """Test that a monomial not dividing the numerator is reported."""
        num = BiSeries.one(CAPS) + _y()
        with self.assertRaises(SeriesDivisionError):
            series_divide_exact(num, _y(), (0, 0, 1))
        with self.assertRaises(SeriesDivisionError):
            series_divide_exact(_y(), _y())


class TouchardTest(SimpleTestCase):
    """Tests for the Touchard series e^{x(e^y - 1)}."""

    def test_coefficients_are_stirling(self):
        """Test [x^k y^n] = S(n, k) / n!."""
        series = touchard_series(6, 6)
        self.assertEqual(series.coefficient(2, 0, 3), Fraction(1, 2))
        self.assertEqual(series.coefficient(2, 0, 4), Fraction(7, 24))
        self.assertEqual(series.coefficient(0, 0, 0), 1)
        for n in range(7):
            for k in range(7):
                self.assertEqual(series.coefficient(k, 0, n), Fraction(stirling2(n, k), factorial(n)))

    def test_row_sums_are_bell_numbers(self):
        """Test that n! times a y^n row sums to the Bell number."""
        series = touchard_series(6, 6)
        for n in range(7):
            row = sum(series.coefficient(k, 0, n) for k in range(7))
            self.assertEqual(row * factorial(n), bell(n))
        self.assertEqual(bell(3), 5)


class FlagSeriesTest(SimpleTestCase):
    """Tests for xi_series and extract_flag_count."""

    def test_examples(self):
        """Test the worked coefficients."""
        self.assertEqual(xi_series(2, 1).coefficient(0, 0, 3), Fraction(1, 6))
        for n in range(2, 7):
            series = xi_series(n, 1, dx=n, ds=0, dy=n)
            self.assertEqual(series.coefficient(n - 1, 0, n), Fraction(1, factorial(n)))

    def test_extraction_examples(self):
        """Test the worked extractions."""
        self.assertEqual(extract_flag_count(xi_series(2, 2), 3, (0, 1), 2), 12)
        self.assertEqual(extract_flag_count(xi_series(3, 1), 4, (0,), 1), 12)
        self.assertEqual(extract_flag_count(xi_series(3, 1, dx=3, ds=0, dy=3), 3, (2,), 1), 1)

    def test_extraction_identity(self):
        """Test that extracted counts match the flag polynomial and the face lattice."""
        for k in range(2, 5):
            for ell in (1, 2):
                series = xi_series(k, ell, dx=7, ds=6, dy=7)
                for n in range(k, 8):
                    poly = flag_polynomial(n, k, ell)
                    for s in combinations_with_replacement(range(n), ell):
                        extracted = extract_flag_count(series, n, s, ell)
                        self.assertEqual(extracted, poly.coefficient(boundary(s)))
                        if n <= 5:
                            self.assertEqual(extracted, count_flags(n, k, s, method='enumerate'))

    def test_longer_flags(self):
        """Test that the multinomial spreads s^m over x_2..x_ell."""
        series = xi_series(3, 3, dx=6, ds=5, dy=6)
        for n in range(3, 7):
            poly = flag_polynomial(n, 3, 3)
            for s in combinations_with_replacement(range(n), 3):
                self.assertEqual(extract_flag_count(series, n, s, 3), poly.coefficient(boundary(s)))

    def test_standard_family(self):
        """Test that k=2 plus the Pi_0 term y is the standard permutahedra series."""
        caps = Caps(8, 6, 8)
        y = BiSeries.monomial(caps, c=1)
        for ell in (1, 2, 3):
            expected = _standard_family_coefficients(ell, caps)
            self.assertEqual(permutahedra_series(ell, *caps), expected)
            self.assertEqual(xi_series(2, ell, *caps) + y, expected)
        caps = Caps(6, 0, 6)
        v = BiSeries({(j - 1, 0, j): Fraction(1, factorial(j)) for j in range(1, 7)}, caps)
        self.assertEqual(permutahedra_series(1, *caps), exp_tail(v, 0))
        self.assertEqual(xi_series(1, 2, 6, 4, 6), permutahedra_series(2, 6, 4, 6))

    def test_cap_errors(self):
        """Test that requests beyond the caps are refused."""
        with self.assertRaises(SeriesCapError):
            xi_series(4, 1, dx=3, ds=0, dy=3)
        series = xi_series(2, 2, dx=4, ds=2, dy=4)
        with self.assertRaises(SeriesCapError):
            extract_flag_count(series, 5, (0, 1), 2)
        with self.assertRaises(SeriesCapError):
            extract_flag_count(series, 4, (0, 3), 2)
        with self.assertRaises(SeriesError):
            extract_flag_count(series, 4, (0, 1), 1)

    def test_coefficient_rows(self):
        """Test the CSV rows of a series."""
        rows = coefficient_rows(xi_series(2, 1, dx=2, ds=0, dy=2), 2, 1)
        self.assertEqual(rows, [(2, 1, 0, 0, 2, 1, 2), (2, 1, 1, 0, 2, 1, 2)])


class ComponentTest(SimpleTestCase):
    """Tests for the per-i summands in the (x, y) plane."""

    def test_closed_form_matches_sum(self):
        """Test the closed form of g_i against its combinatorial sum."""
        for k in range(1, 5):
            for i in range(k):
                self.assertEqual(g_component_series(k, i, 7, 7), g_component_direct(k, i, 7, 7))

    def test_low_x_derivatives_vanish(self):
        """Test that g_i and its first i x-derivatives vanish at x = 0."""
        for k in range(1, 5):
            for i in range(k):
                g = g_component_series(k, i, 7, 7)
                for a in range(i + 1):
                    for c in range(8):
                        self.assertEqual(g.coefficient(a, 0, c), 0)

    def test_derivative_identity(self):
        """Test that the (i+1)-th x-derivative of g_i is the alpha combination."""
        dx, dy = 7, 7
        for k in range(1, 5):
            for i in range(k):
                g = g_component_series(k, i, dx, dy)
                for _ in range(i + 1):
                    g = g.derivative_x()
                target = g_component_derivative_target(k, i, dx - i - 1, dy)
                self.assertEqual(g, target)
                combination = BiSeries.zero(target.caps)
                for q in range(k, dy + 1):
                    combination = combination + alpha_q_series(q, dx - i - 1, dy).scale(binomial(q, i))
                self.assertEqual(target, combination)

    def test_alpha_is_touchard_derivative(self):
        """Test alpha = d/dx e^{x(e^y - 1)}."""
        self.assertEqual(alpha_series(5, 6), touchard_series(6, 6).derivative_x())

    def test_bad_index(self):
        """Test that i must lie below k."""
        with self.assertRaises(SeriesError):
            g_component_series(2, 2)
        with self.assertRaises(SeriesError):
            g_component_direct(2, -1)
