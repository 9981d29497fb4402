from itertools import combinations_with_replacement

from django.test import SimpleTestCase

from exactmath.numbers import factorial, stirling2
from .polynomials import (
    CountingError, IntPolynomial, boundary, edge_counts, euler_characteristic,
    f_polynomial, flag_count, flag_count_simple, flag_polynomial, perm_flag_count,
    simplex_f_polynomial, vertex_count,
)


def _chains(top, ell):
    return combinations_with_replacement(range(top + 1), ell)


def _simplex_flag_count(n, s):
    """Count chains of nonempty subsets of [n] with |A_i| = s_i + 1 by brute force."""
    masks = range(1, 1 << n)
    by_dim = {}
    for mask in masks:
        by_dim.setdefault(bin(mask).count('1') - 1, []).append(mask)
    counts = {mask: 1 for mask in by_dim.get(s[0], [])}
    for dim in s[1:]:
        counts = {
            upper: sum(c for lower, c in counts.items() if lower & upper == lower)
            for upper in by_dim.get(dim, [])
        }
    return sum(counts.values())


class IntPolynomialTest(SimpleTestCase):
    """Tests for the one-variable integer polynomial."""

    def test_trailing_zeros_are_trimmed(self):
        """Test that trailing zero coefficients are dropped."""
        self.assertEqual(IntPolynomial((1, 2, 0, 0)).coefficients, (1, 2))
        self.assertEqual(IntPolynomial((1, 2, 0)), IntPolynomial((1, 2)))

    def test_str(self):
        """Test the human readable rendering."""
        self.assertEqual(str(f_polynomial(4, 3)), 'x^3 + 8x^2 + 18x + 12')


class FPolynomialTest(SimpleTestCase):
    """Tests for f_polynomial and the vertex and edge counts."""

    def test_known_values(self):
        """Test the f-vectors of the hexagon and of Pi_3(2)."""
        self.assertEqual(f_polynomial(3, 2).to_list(), [6, 6, 1])
        self.assertEqual(f_polynomial(4, 3).to_list(), [12, 18, 8, 1])

    def test_standard_permutahedron(self):
        """Test that k=2 counts ordered partitions: f_d = S(n, n-d)(n-d)!."""
        for n in range(2, 8):
            expected = [stirling2(n, n - d) * factorial(n - d) for d in range(n)]
            self.assertEqual(f_polynomial(n, 2).to_list(), expected)

    def test_simplex_case(self):
        """Test that k=n gives ((x+1)^n - 1)/x."""
        for n in range(2, 9):
            self.assertEqual(f_polynomial(n, n), simplex_f_polynomial(n))

    def test_vertices_and_edges_agree(self):
        """Test [x^0] = vertex_count and [x^1] = e1 + e2."""
        for n in range(2, 9):
            for k in range(2, n + 1):
                poly = f_polynomial(n, k)
                e1, e2 = edge_counts(n, k)
                self.assertEqual(poly.coefficient(0), vertex_count(n, k))
                self.assertEqual(poly.coefficient(1), e1 + e2)
                self.assertEqual(e1 + e2, (n - 1) * factorial(n) // (2 * factorial(k - 1)))

    def test_edge_counts_examples(self):
        """Test the worked edge counts."""
        self.assertEqual(edge_counts(4, 3), (6, 12))
        self.assertEqual(sum(edge_counts(3, 2)), 6)
        for k in range(2, 7):
            self.assertEqual(edge_counts(k, k)[0], 0)

    def test_euler_relation(self):
        """Test that the alternating f-vector sum is 1 with the improper face included."""
        for n in range(2, 9):
            for k in range(2, n + 1):
                self.assertEqual(euler_characteristic(f_polynomial(n, k)), 1)

    def test_top_coefficient_is_one(self):
        """Test that there is a single (n-1)-face."""
        for n in range(2, 8):
            for k in range(2, n + 1):
                self.assertEqual(f_polynomial(n, k).coefficient(n - 1), 1)

    def test_out_of_range_k(self):
        """Test that k outside 2..n is rejected."""
        for n, k in [(4, 1), (4, 5), (3, 0)]:
            with self.assertRaises(CountingError):
                f_polynomial(n, k)


class FlagCountTest(SimpleTestCase):
    """Tests for the simple-polytope flag reduction."""

    def test_examples(self):
        """Test the worked flag counts."""
        self.assertEqual(flag_count_simple(f_polynomial(3, 2), 2, (0, 1)), 12)
        self.assertEqual(flag_count_simple(f_polynomial(4, 3), 3, (0, 1, 2)), 72)
        self.assertEqual(flag_count_simple(f_polynomial(4, 3), 3, (3,)), 1)
        self.assertEqual(flag_count(4, 3, (0, 2)), 36)

    def test_perm_flag_count_examples(self):
        """Test the standard permutahedron flag counts."""
        self.assertEqual(perm_flag_count(3, (0, 1)), 12)
        self.assertEqual(perm_flag_count(3, (2,)), 1)
        self.assertEqual(perm_flag_count(4, (1, 2)), 72)

    def test_perm_flag_count_matches_reduction(self):
        """Test that the standard permutahedron formula agrees with flag_count_simple at k=2."""
        for n in range(2, 7):
            fvec = f_polynomial(n, 2)
            for ell in range(1, 4):
                for s in _chains(n - 1, ell):
                    self.assertEqual(perm_flag_count(n, s), flag_count_simple(fvec, n - 1, s))

    def test_non_monotone_chain_rejected(self):
        """Test that decreasing or out-of-range chains raise CountingError."""
        with self.assertRaises(CountingError):
            flag_count_simple(f_polynomial(3, 2), 2, (1, 0))
        with self.assertRaises(CountingError):
            perm_flag_count(3, (0, 3))


class FlagPolynomialTest(SimpleTestCase):
    """Tests for flag_polynomial."""

    def test_ell_one_is_f_polynomial(self):
        """Test that the 1-flag polynomial is the f-polynomial."""
        for n in range(2, 7):
            for k in range(2, n + 1):
                fpoly = flag_polynomial(n, k, 1)
                expected = {(d,): c for d, c in enumerate(f_polynomial(n, k).coefficients)}
                self.assertEqual(fpoly.terms, expected)

    def test_examples(self):
        """Test the worked coefficients."""
        self.assertEqual(flag_polynomial(3, 2, 2).coefficient((0, 1)), 12)
        self.assertEqual(flag_polynomial(4, 3, 2).coefficient((3, 0)), 1)

    def test_coefficients_are_flag_counts(self):
        """Test that [x^boundary(s)] equals flag_count for every chain."""
        for n in range(2, 6):
            for k in range(2, n + 1):
                for ell in range(1, 4):
                    poly = flag_polynomial(n, k, ell)
                    for s in _chains(n - 1, ell):
                        self.assertEqual(poly.coefficient(boundary(s)), flag_count(n, k, s))
                    self.assertEqual(
                        sum(poly.terms.values()),
                        sum(flag_count(n, k, s) for s in _chains(n - 1, ell)),
                    )

    def test_simplex_flags_by_subset_chains(self):
        """Test k=n against chains of subsets counted by brute force."""
        for n in range(2, 6):
            for ell in range(1, 4):
                poly = flag_polynomial(n, n, ell)
                for s in _chains(n - 1, ell):
                    self.assertEqual(poly.coefficient(boundary(s)), _simplex_flag_count(n, s))

    def test_bad_ell(self):
        """Test that ell < 1 is rejected."""
        with self.assertRaises(CountingError):
            flag_polynomial(3, 2, 0)
