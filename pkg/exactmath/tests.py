from fractions import Fraction
from itertools import product

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .numbers import (
    ExactMathError, InvalidChainError, bell, binomial, factorial, format_rational,
    fubini, multinomial, ordered_partition_count, parse_rational, parse_rational_list,
    stirling2, validate_chain,
)


def _set_partition_count(n, m):
    """Count partitions of range(n) into m blocks by labelling elements."""
    seen = set()
    for labels in product(range(m), repeat=n):
        if len(set(labels)) != m:
            continue
        blocks = {}
        for element, label in enumerate(labels):
            blocks.setdefault(label, []).append(element)
        seen.add(frozenset(frozenset(block) for block in blocks.values()))
    return len(seen)


class BinomialTest(SimpleTestCase):
    """Tests for binomial and multinomial coefficients."""

    def test_small_values(self):
        """Test small Pascal entries."""
        self.assertEqual(binomial(4, 2), 6)
        self.assertEqual(binomial(10, 5), 252)
        self.assertEqual(binomial(0, 0), 1)

    def test_k_larger_than_n_is_zero(self):
        """Test that k > n yields 0 instead of an error."""
        self.assertEqual(binomial(3, 5), 0)

    def test_pascal_recurrence(self):
        """Test C(n,k) = C(n-1,k-1) + C(n-1,k) for 1 <= k <= n <= 20."""
        for n in range(1, 21):
            for k in range(1, n + 1):
                self.assertEqual(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k))

    def test_negative_argument_rejected(self):
        """Test that negative arguments raise ExactMathError."""
        with self.assertRaises(ExactMathError):
            binomial(-1, 0)

    def test_multinomial(self):
        """Test multinomial coefficients with an implicit last part."""
        self.assertEqual(multinomial(3, [1, 1]), 6)
        self.assertEqual(multinomial(5, []), 1)
        self.assertEqual(multinomial(6, [2, 2]), factorial(6) // (2 * 2 * 2))

    def test_multinomial_rejects_oversized_parts(self):
        """Test that parts summing past n are rejected."""
        with self.assertRaises(ExactMathError):
            multinomial(3, [2, 2])


class StirlingTest(SimpleTestCase):
    """Tests for Stirling numbers of the second kind."""

    def test_examples(self):
        """Test S(4,2), S(n,n), S(3,1) and the boundary values."""
        self.assertEqual(stirling2(4, 2), 7)
        self.assertEqual(stirling2(3, 1), 1)
        self.assertEqual(stirling2(0, 0), 1)
        self.assertEqual(stirling2(5, 0), 0)
        self.assertEqual(stirling2(2, 4), 0)
        for n in range(8):
            self.assertEqual(stirling2(n, n), 1)

    def test_matches_enumeration(self):
        """Test S(n,m) against brute-force set partition counts."""
        for n in range(1, 6):
            for m in range(1, n + 1):
                self.assertEqual(stirling2(n, m), _set_partition_count(n, m))

    def test_recurrence(self):
        """Test S(n,m) = m S(n-1,m) + S(n-1,m-1) for 1 <= m <= n <= 15."""
        for n in range(1, 16):
            for m in range(1, n + 1):
                self.assertEqual(stirling2(n, m), m * stirling2(n - 1, m) + stirling2(n - 1, m - 1))

    def test_rooted_partition_identity(self):
        """Test sum_i C(N,i) S(N-i,m-1) = m S(N,m) for 1 <= m <= N <= 12."""
        for big_n in range(1, 13):
            for m in range(1, big_n + 1):
                total = sum(
                    binomial(big_n, i) * stirling2(big_n - i, m - 1)
                    for i in range(1, big_n - m + 2)
                )
                self.assertEqual(total, m * stirling2(big_n, m))

    def test_ordered_partition_count(self):
        """Test ordered partition counts S(n,m) m!."""
        self.assertEqual(ordered_partition_count(3, 2), 6)
        self.assertEqual(ordered_partition_count(3, 3), 6)
        self.assertEqual(ordered_partition_count(4, 1), 1)

    def test_fubini_and_bell(self):
        """Test Fubini and Bell numbers."""
        self.assertEqual([fubini(n) for n in range(6)], [1, 1, 3, 13, 75, 541])
        self.assertEqual([bell(n) for n in range(6)], [1, 1, 2, 5, 15, 52])


class RationalTest(SimpleTestCase):
    """Tests for rational parsing and formatting."""

    def test_parse(self):
        """Test integers and p/q strings."""
        self.assertEqual(parse_rational('3'), Fraction(3))
        self.assertEqual(parse_rational('-6/4'), Fraction(-3, 2))
        self.assertEqual(parse_rational_list('0,1/2, 2'), [0, Fraction(1, 2), 2])

    def test_parse_rejects_decimals_and_zero_denominator(self):
        """Test that inexact or malformed input is rejected."""
        for text in ('0.5', '1/0', 'abc', ''):
            with self.assertRaises(ExactMathError):
                parse_rational(text)

    def test_format(self):
        """Test canonical rendering."""
        self.assertEqual(format_rational(Fraction(6, 4)), '3/2')
        self.assertEqual(format_rational(Fraction(-4, 2)), '-2')
        self.assertEqual(format_rational(0), '0')

    @settings(max_examples=200)
    @given(
        st.fractions().filter(lambda q: q != 0),
    )
    def test_reciprocal_product_is_one(self, value):
        """Test (a/b)(b/a) = 1 and lowest terms."""
        product_ = value * (1 / value)
        self.assertEqual(product_, 1)
        self.assertEqual(parse_rational(format_rational(value)), value)
        self.assertGreater(value.denominator, 0)


class ChainTest(SimpleTestCase):
    """Tests for chain validation."""

    def test_valid_chain(self):
        """Test that a monotone chain is returned as a tuple."""
        self.assertEqual(validate_chain([0, 1, 1, 3], 3), (0, 1, 1, 3))

    def test_invalid_chains(self):
        """Test non-monotone, empty and out-of-range chains."""
        for chain in ([2, 1], [], [0, 4], [-1]):
            with self.assertRaises(InvalidChainError):
                validate_chain(chain, 3)
