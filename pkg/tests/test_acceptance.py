"""
Cross-module acceptance checks: closed formulas against the OPP enumeration,
the generating function and the brute-force oracle.
"""
import json
from io import StringIO
from itertools import combinations_with_replacement

from django.core.management import call_command
from django.test import SimpleTestCase

from counting.polynomials import (
    edge_counts, f_polynomial, flag_count, simplex_f_polynomial, vertex_count,
)
from egf.flags import extract_flag_count, xi_series
from exactmath.numbers import factorial
from faces.lattice import count_flags, enumerate_faces
from faces.opp import face_dim, vertices
from oracle.decompositions import (
    edge_kinds, f_vector_oracle, flag_count_oracle, oracle_vertices, permutahedron_family,
    vertex_degrees,
)


def grid(max_n):
    for n in range(2, max_n + 1):
        for k in range(2, n + 1):
            yield n, k


def chains(top, max_ell):
    for ell in range(1, max_ell + 1):
        yield from combinations_with_replacement(range(top + 1), ell)


class VertexAcceptanceTest(SimpleTestCase):
    """Vertices from the closed form against the oracle sweep."""

    def test_vertex_sets(self):
        """Test vertex sets and counts for n <= 7."""
        for n, k in grid(7):
            with self.subTest(n=n, k=k):
                points = vertices(n, k)
                self.assertEqual(len(points), factorial(n) // factorial(k - 1))
                self.assertEqual(len(points), vertex_count(n, k))
                self.assertEqual(points, oracle_vertices(permutahedron_family(n, k)))

    def test_vertex_faces(self):
        """Test the oracle's 0-faces for n <= 7."""
        for n, k in grid(7):
            with self.subTest(n=n, k=k):
                self.assertEqual(f_vector_oracle(permutahedron_family(n, k))[0], vertex_count(n, k))


class EdgeAcceptanceTest(SimpleTestCase):
    """Edge counts by kind and simplicity."""

    def test_edge_kinds(self):
        """Test (e1, e2) against edges split by zero pattern."""
        for n, k in grid(6):
            with self.subTest(n=n, k=k):
                e1, e2 = edge_counts(n, k)
                expected = {zeros: count for zeros, count in ((k - 1, e1), (k - 2, e2)) if count}
                self.assertEqual(edge_kinds(permutahedron_family(n, k)), expected)
                self.assertEqual(e1 + e2, (n - 1) * factorial(n) // (2 * factorial(k - 1)))

    def test_simple(self):
        """Test that every vertex meets n - 1 edges."""
        for n, k in grid(6):
            with self.subTest(n=n, k=k):
                self.assertEqual(vertex_degrees(permutahedron_family(n, k)), {n - 1: vertex_count(n, k)})


class FVectorAcceptanceTest(SimpleTestCase):
    """The f-polynomial against the oracle and the OPP enumeration."""

    def test_formula_matches_oracle(self):
        """Test f-vectors for n <= 6."""
        for n, k in grid(6):
            with self.subTest(n=n, k=k):
                self.assertEqual(f_polynomial(n, k).to_list(), f_vector_oracle(permutahedron_family(n, k)))

    def test_simplex(self):
        """Test that k = n gives the simplex for n <= 8."""
        for n in range(2, 9):
            with self.subTest(n=n):
                self.assertEqual(f_polynomial(n, n), simplex_f_polynomial(n))

    def test_worked_instance(self):
        """Test f(Pi_3(2))."""
        self.assertEqual(str(f_polynomial(4, 3)), 'x^3 + 8x^2 + 18x + 12')

    def test_opp_counts(self):
        """Test that valid OPPs of each dimension match the f-vector for n <= 7."""
        for n, k in grid(7):
            with self.subTest(n=n, k=k):
                counts = [0] * n
                for face in enumerate_faces(n, k):
                    counts[face_dim(face)] += 1
                self.assertEqual(counts, f_polynomial(n, k).to_list())

    def test_cli_oracle_compare(self):
        """Test that fvector --oracle compare reports a match on the grid."""
        for n, k in grid(6):
            with self.subTest(n=n, k=k):
                out = StringIO()
                call_command('fvector', '-n', str(n), '-k', str(k), '--oracle', 'compare', stdout=out)
                self.assertTrue(json.loads(out.getvalue())['match'])


class FlagAcceptanceTest(SimpleTestCase):
    """Flag counts from three independent routes."""

    def test_formula_enumeration_oracle(self):
        """Test every chain with ell <= 3 for n <= 5."""
        for n, k in grid(5):
            fam = permutahedron_family(n, k)
            for s in chains(n - 1, 3):
                with self.subTest(n=n, k=k, s=s):
                    expected = flag_count(n, k, s)
                    self.assertEqual(count_flags(n, k, s, method='enumerate'), expected)
                    self.assertEqual(flag_count_oracle(fam, s), expected)

    def test_series_extraction(self):
        """Test the generating function against the oracle for n <= 5, ell <= 2."""
        for k in range(2, 5):
            for ell in (1, 2):
                series = xi_series(k, ell, dx=5, ds=4, dy=5)
                for n in range(k, 6):
                    fam = permutahedron_family(n, k)
                    for s in chains(n - 1, ell):
                        if len(s) != ell:
                            continue
                        with self.subTest(k=k, ell=ell, n=n, s=s):
                            self.assertEqual(extract_flag_count(series, n, s, ell=ell), flag_count_oracle(fam, s))
