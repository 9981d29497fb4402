from fractions import Fraction
from itertools import permutations

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from exactmath.numbers import binomial, fubini
from .decompositions import (
    OracleError, OracleSizeError, SimplexFamily, contains, edge_kinds, f_vector_oracle,
    face_dim_oracle, face_from_ordertype, face_points, flag_count_oracle, oracle_lattice,
    oracle_vertices, order_types, permutahedron_family, vertex_degrees,
)
from .rank import direction_rank, integer_rank


def _fraction_rank(rows):
    """Plain Gaussian elimination over Fractions."""
    matrix = [[Fraction(x) for x in row] for row in rows]
    rank = 0
    width = len(matrix[0]) if matrix else 0
    for column in range(width):
        pivot = next((r for r in range(rank, len(matrix)) if matrix[r][column]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        for r in range(len(matrix)):
            if r != rank and matrix[r][column]:
                ratio = matrix[r][column] / matrix[rank][column]
                matrix[r] = [a - ratio * b for a, b in zip(matrix[r], matrix[rank])]
        rank += 1
    return rank


class RankTest(SimpleTestCase):
    """Tests for the fraction-free rank."""

    def test_examples(self):
        """Test small direction sets."""
        self.assertEqual(integer_rank([]), 0)
        self.assertEqual(integer_rank([[0, 0], [0, 0]]), 0)
        self.assertEqual(direction_rank(3, [(2, 1), (3, 1)]), 2)
        self.assertEqual(direction_rank(3, [(2, 1), (3, 1), (3, 2)]), 2)
        self.assertEqual(direction_rank(4, [(3, 2)]), 1)

    @settings(max_examples=200)
    @given(st.integers(1, 6).flatmap(lambda width: st.lists(
        st.lists(st.integers(-4, 4), min_size=width, max_size=width), max_size=7,
    )))
    def test_matches_rational_elimination(self, rows):
        """Test integer_rank against elimination over Fractions."""
        self.assertEqual(integer_rank(rows), _fraction_rank(rows))


class OrderTypeTest(SimpleTestCase):
    """Tests for order_types."""

    def test_counts(self):
        """Test the Fubini counts and the n=2 listing."""
        self.assertEqual(list(order_types(1)), [((1,),)])
        self.assertEqual(set(order_types(2)), {((1,), (2,)), ((2,), (1,)), ((1, 2),)})
        for n in range(1, 7):
            types = list(order_types(n))
            self.assertEqual(len(types), fubini(n))
            self.assertEqual(len(set(types)), len(types))

    def test_size_guard(self):
        """Test that n above the guard is refused."""
        with self.assertRaises(OracleSizeError):
            order_types(9)


class DecompositionTest(SimpleTestCase):
    """Tests for face_from_ordertype and face_dim_oracle."""

    def test_whole_polytope(self):
        """Test that the single block picks every support entirely."""
        fam = permutahedron_family(4, 3)
        face = face_from_ordertype(((1, 2, 3, 4),), fam)
        self.assertEqual(face.subsets(), [tuple(f) for f in fam.supports])
        self.assertEqual(face_dim_oracle(face), 3)
        self.assertEqual(face_dim_oracle(face_from_ordertype(((1, 2, 3),), permutahedron_family(3, 2))), 2)

    def test_total_order(self):
        """Test that a total order picks the maximum of each support."""
        fam = permutahedron_family(4, 3)
        face = face_from_ordertype(((1,), (2,), (3,), (4,)), fam)
        self.assertEqual(face.subsets(), [(max(f),) for f in fam.supports])
        self.assertEqual(face_dim_oracle(face), 0)
        self.assertEqual(face_points(face), {(0, 0, 1, 3)})

    def test_blockwise_intersection(self):
        """Test the edge ({1} < {2,3} < {4}) of Pi_3(2)."""
        fam = permutahedron_family(4, 3)
        face = face_from_ordertype(((1,), (2, 3), (4,)), fam)
        picked = dict(zip(fam.supports, face.subsets()))
        self.assertEqual(picked[(2, 3, 4)], (4,))
        self.assertEqual(picked[(1, 2, 3)], (2, 3))
        self.assertEqual(picked[(1, 2, 4)], (4,))
        self.assertEqual(face_dim_oracle(face), 1)
        self.assertEqual(face_points(face), {(0, 1, 0, 3), (0, 0, 1, 3)})

    def test_bad_inputs(self):
        """Test malformed order types and families."""
        with self.assertRaises(OracleError):
            face_from_ordertype(((1, 2),), permutahedron_family(3, 2))
        with self.assertRaises(OracleError):
            SimplexFamily(3, ((),))
        with self.assertRaises(OracleError):
            permutahedron_family(3, 4)

    def test_whole_polytope_is_full_dimensional(self):
        """Test dim n-1 for nonconstant families and 0 for the point."""
        for n in range(1, 7):
            for k in range(1, n + 1):
                fam = permutahedron_family(n, k)
                whole = face_from_ordertype((tuple(range(1, n + 1)),), fam)
                self.assertEqual(face_dim_oracle(whole), n - 1 if k >= 2 else 0)

    def test_containment_is_point_nesting(self):
        """Test componentwise containment against nesting of face point sets."""
        for n in range(2, 5):
            for k in range(1, n + 1):
                lattice = oracle_lattice(permutahedron_family(n, k))
                faces = [f for dim in range(lattice.top + 1) for f in lattice.faces(dim)]
                points = {face: face_points(face) for face in faces}
                for a in faces:
                    for c in faces:
                        self.assertEqual(contains(a, c), points[a] <= points[c])


class OracleCountTest(SimpleTestCase):
    """Tests for the oracle face and flag counts."""

    def test_f_vectors(self):
        """Test the hexagon, Pi_3(2) and simplices."""
        self.assertEqual(f_vector_oracle(permutahedron_family(3, 2)), [6, 6, 1])
        self.assertEqual(f_vector_oracle(permutahedron_family(4, 3)), [12, 18, 8, 1])
        for n in range(2, 6):
            expected = [binomial(n, d + 1) for d in range(n)]
            self.assertEqual(f_vector_oracle(permutahedron_family(n, n)), expected)

    def test_flag_counts(self):
        """Test the worked chain counts."""
        self.assertEqual(flag_count_oracle(permutahedron_family(3, 2), (0, 1)), 12)
        self.assertEqual(flag_count_oracle(permutahedron_family(4, 3), (0, 3)), 12)
        for n in range(2, 5):
            self.assertEqual(flag_count_oracle(permutahedron_family(n, 2), (n - 1,)), 1)

    def test_flag_guards(self):
        """Test the size guard and chain validation."""
        with self.assertRaises(OracleSizeError):
            flag_count_oracle(permutahedron_family(7, 2), (0,))
        with self.assertRaises(OracleError):
            flag_count_oracle(permutahedron_family(3, 2), (1, 0))

    def test_vertices(self):
        """Test the vertex points of Pi_3(2)."""
        self.assertEqual(oracle_vertices(permutahedron_family(4, 3)), set(permutations((0, 0, 1, 3))))
        self.assertEqual(oracle_vertices(permutahedron_family(3, 1)), {(1, 1, 1)})

    def test_edges_and_degrees(self):
        """Test the edge kinds and vertex degrees of Pi_3(2)."""
        fam = permutahedron_family(4, 3)
        self.assertEqual(edge_kinds(fam), {2: 6, 1: 12})
        self.assertEqual(vertex_degrees(fam), {3: 12})
