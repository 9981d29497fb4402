from fractions import Fraction
from itertools import combinations_with_replacement, permutations

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from counting.polynomials import f_polynomial
from .lattice import count_flags, enumerate_faces, face_lattice, ordered_partitions
from .opp import (
    OPP, OPPError, OrderType, canonical_functional, coarsenings, face_contains,
    face_dim, face_vertices, is_improper, is_valid_opp, opp_from_functional,
    v_reduce, vertex_of_functional, vertices,
)


def _opp(n, k, zero, *parts):
    return OPP.build(n, k, zero, parts)


class OPPTest(SimpleTestCase):
    """Tests for the OPP normal form and its validation."""

    def test_build_sorts_blocks(self):
        """Test that blocks are stored sorted so equal faces compare equal."""
        self.assertEqual(_opp(4, 3, (1,), (3, 2), (4,)), _opp(4, 3, [1], [2, 3], [4]))

    def test_invalid_opps_rejected(self):
        """Test the face conditions on Z and X_0."""
        with self.assertRaises(OPPError):
            _opp(4, 3, (1, 2, 3), (4,))
        with self.assertRaises(OPPError):
            _opp(4, 3, (), (1,), (2, 3, 4))
        with self.assertRaises(OPPError):
            _opp(4, 3, (1,), (2, 3))
        with self.assertRaises(OPPError):
            _opp(4, 3, (1,), (2, 3), ())
        self.assertFalse(is_valid_opp(OPP(4, 3, (1,), ((2,), (3, 4)))))
        self.assertTrue(is_valid_opp(OPP(4, 3, (1,), ((2, 3), (4,)))))

    def test_k_one_rejected(self):
        """Test that the point polytope has no OPP encoding."""
        with self.assertRaises(OPPError):
            _opp(3, 1, (), (1, 2, 3))

    def test_dimension(self):
        """Test face_dim on the worked faces."""
        self.assertEqual(face_dim(_opp(4, 3, (1,), (2, 3), (4,))), 1)
        for n in range(2, 7):
            for k in range(2, n + 1):
                whole = _opp(n, k, (), tuple(range(1, n + 1)))
                self.assertEqual(face_dim(whole), n - 1)
                self.assertTrue(is_improper(whole))

    def test_order_type(self):
        """Test grouping of equal functional values."""
        order = OrderType.from_functional([0, 5, 5, 9])
        self.assertEqual(order.blocks, ((1,), (2, 3), (4,)))
        self.assertEqual(order.n, 4)
        self.assertEqual(str(order), '{1}<{2,3}<{4}')


class VertexTest(SimpleTestCase):
    """Tests for vertices and vertex_of_functional."""

    def test_counts_and_examples(self):
        """Test the n!/(k-1)! count and the worked vertex sets."""
        self.assertEqual(len(vertices(4, 3)), 12)
        self.assertIn((0, 0, 1, 3), vertices(4, 3))
        self.assertEqual(vertices(3, 2), set(permutations((0, 1, 2))))
        self.assertEqual(vertices(4, 4), set(permutations((0, 0, 0, 1))))

    def test_point_polytope(self):
        """Test that k=1 collapses to the all-ones point."""
        self.assertEqual(vertices(3, 1), {(1, 1, 1)})

    def test_bad_arguments(self):
        """Test that k outside 1..n is rejected."""
        with self.assertRaises(OPPError):
            vertices(3, 0)
        with self.assertRaises(OPPError):
            vertices(3, 4)

    def test_vertex_of_functional(self):
        """Test that a generic functional picks the vertex of its OPP."""
        self.assertEqual(vertex_of_functional([1, 2, 3], 3, 2), (0, 1, 2))
        for c in permutations([Fraction(1, 2), 2, 7, 11, 13]):
            (expected,) = face_vertices(opp_from_functional(c, 5, 3))
            self.assertEqual(vertex_of_functional(c, 5, 3), expected)
        with self.assertRaises(OPPError):
            vertex_of_functional([1, 1, 2], 3, 2)


class FunctionalTest(SimpleTestCase):
    """Tests for opp_from_functional, canonical_functional and v_reduce."""

    def test_examples(self):
        """Test the worked functional to OPP conversions."""
        self.assertEqual(opp_from_functional([1, 1, 1, 1], 4, 3), _opp(4, 3, (), (1, 2, 3, 4)))
        self.assertEqual(opp_from_functional([0, 5, 5, 9], 4, 3), _opp(4, 3, (1,), (2, 3), (4,)))
        self.assertEqual(opp_from_functional([1, 2, 3], 3, 2), _opp(3, 2, (1,), (2,), (3,)))

    def test_length_mismatch(self):
        """Test that a functional of the wrong length is rejected."""
        with self.assertRaises(OPPError):
            opp_from_functional([1, 2], 3, 2)

    def test_round_trip(self):
        """Test that the canonical functional of every face maps back to it."""
        for n in range(2, 6):
            for k in range(2, n + 1):
                for face in enumerate_faces(n, k):
                    self.assertEqual(opp_from_functional(canonical_functional(face), n, k), face)

    @settings(max_examples=200)
    @given(st.lists(st.integers(-3, 3), min_size=5, max_size=5), st.integers(2, 5))
    def test_order_type_invariance(self, c, k):
        """Test that functionals with equal order type give the same face."""
        shifted = [Fraction(3 * value + 1, 2) for value in c]
        self.assertEqual(opp_from_functional(c, 5, k), opp_from_functional(shifted, 5, k))

    def test_v_reduce_examples(self):
        """Test the worked merges."""
        self.assertEqual(
            v_reduce([1, 2, 3, 4], (0, 0, 1, 3)),
            [Fraction(3, 2), Fraction(3, 2), Fraction(3), Fraction(4)],
        )
        self.assertEqual(v_reduce([5, 5, 5], (1, 1, 1)), [5, 5, 5])
        self.assertEqual(v_reduce([1, 2], (0, 3)), [1, 2])

    def test_v_reduce_keeps_face(self):
        """Test that reduction never changes the face of the functional."""
        for c in permutations([1, 2, 3, 4, 5]):
            face = opp_from_functional(c, 5, 3)
            (vertex,) = face_vertices(face)
            self.assertEqual(opp_from_functional(v_reduce(c, vertex), 5, 3), face)

    def test_v_reduce_errors(self):
        """Test length mismatch and off-face vertices."""
        with self.assertRaises(OPPError):
            v_reduce([1, 2, 3], (0, 1))
        with self.assertRaises(OPPError):
            v_reduce([1, 2, 3], (2, 1, 0))


class FaceVerticesTest(SimpleTestCase):
    """Tests for face_vertices."""

    def test_examples(self):
        """Test the worked vertex sets."""
        edge = _opp(4, 3, (1,), (2, 3), (4,))
        self.assertEqual(face_vertices(edge), {(0, 1, 0, 3), (0, 0, 1, 3)})
        self.assertEqual(face_vertices(_opp(4, 3, (), (1, 2, 3, 4))), vertices(4, 3))

    def test_matches_sorting_condition(self):
        """Test against filtering all vertices by the block order of the face."""
        for n in range(2, 6):
            for k in range(2, n + 1):
                every = vertices(n, k)
                for face in enumerate_faces(n, k):
                    levels = face.levels()
                    expected = {
                        u for u in every
                        if all(u[e - 1] == 0 for e in face.zero)
                        and all(
                            max(u[e - 1] for e in low) <= min(u[e - 1] for e in high)
                            for low, high in zip(levels, levels[1:])
                        )
                    }
                    self.assertEqual(face_vertices(face), expected)

    def test_vertex_faces_have_one_vertex(self):
        """Test that every 0-face has exactly one vertex and they are all distinct."""
        for n in range(2, 6):
            for k in range(2, n + 1):
                found = [face_vertices(face) for face in enumerate_faces(n, k, 0)]
                self.assertTrue(all(len(vs) == 1 for vs in found))
                self.assertEqual(set().union(*found), vertices(n, k))


class ContainmentTest(SimpleTestCase):
    """Tests for face_contains and coarsenings."""

    def test_examples(self):
        """Test reflexivity, distinct vertices and a hexagon incidence."""
        vertex = _opp(3, 2, (1,), (2,), (3,))
        edge = _opp(3, 2, (1,), (2, 3))
        self.assertTrue(face_contains(vertex, edge))
        self.assertFalse(face_contains(edge, vertex))
        self.assertTrue(face_contains(edge, edge))
        other = _opp(3, 2, (1,), (3,), (2,))
        self.assertFalse(face_contains(vertex, other))
        inner = _opp(4, 3, (1, 2), (3,), (4,))
        self.assertTrue(face_contains(inner, _opp(4, 3, (1,), (2, 3), (4,))))

    def test_mismatched_polytopes(self):
        """Test that faces of different polytopes are not compared."""
        with self.assertRaises(OPPError):
            face_contains(_opp(3, 2, (1,), (2, 3)), _opp(3, 3, (1,), (2, 3)))

    def test_containment_is_vertex_subset(self):
        """Test face_contains against inclusion of vertex sets."""
        for n in range(2, 6):
            for k in range(2, n + 1):
                faces = list(enumerate_faces(n, k))
                vertex_sets = {face: face_vertices(face) for face in faces}
                for a in faces:
                    for c in faces:
                        self.assertEqual(
                            face_contains(a, c), vertex_sets[a] <= vertex_sets[c],
                            msg=f"{a} in {c}",
                        )

    def test_coarsenings_are_the_up_set(self):
        """Test that coarsenings lists exactly the faces containing a face."""
        for n in range(2, 5):
            for k in range(2, n + 1):
                faces = list(enumerate_faces(n, k))
                for a in faces:
                    expected = {c for c in faces if face_contains(a, c)}
                    self.assertEqual(set(coarsenings(a)), expected)

    def test_simplicity(self):
        """Test that every vertex lies on exactly n-1 edges."""
        for n in range(2, 7):
            for k in range(2, n + 1):
                lattice = face_lattice(n, k)
                for vertex in lattice.faces(0):
                    self.assertEqual(len(lattice.faces_containing(vertex, 1)), n - 1)


class EnumerationTest(SimpleTestCase):
    """Tests for enumerate_faces and count_flags."""

    def test_examples(self):
        """Test the worked face counts."""
        self.assertEqual(len(list(enumerate_faces(3, 2, 1))), 6)
        self.assertEqual(len(list(enumerate_faces(4, 3, 0))), 12)
        self.assertEqual(len(list(enumerate_faces(4, 3, 2))), 8)

    def test_counts_match_f_polynomial(self):
        """Test that faces per dimension match the f-polynomial."""
        for n in range(2, 7):
            for k in range(2, n + 1):
                self.assertEqual(face_lattice(n, k).f_vector(), f_polynomial(n, k).to_list())

    def test_order_is_deterministic(self):
        """Test that streams restart identically and are sorted by dimension."""
        first = list(enumerate_faces(4, 3))
        self.assertEqual(first, list(enumerate_faces(4, 3)))
        self.assertEqual(len(first), len(set(first)))
        self.assertEqual([face_dim(f) for f in first], sorted(face_dim(f) for f in first))

    def test_ordered_partitions(self):
        """Test the Fubini count of ordered partitions."""
        self.assertEqual(len(list(ordered_partitions((1, 2, 3)))), 13)
        self.assertEqual(list(ordered_partitions(())), [()])

    def test_count_flags_examples(self):
        """Test the worked flag counts by both methods."""
        self.assertEqual(count_flags(3, 2, (0, 1), method='both'), 12)
        self.assertEqual(count_flags(4, 3, (3,), method='both'), 1)
        self.assertEqual(count_flags(4, 3, (0, 2), method='both'), 36)

    def test_methods_agree(self):
        """Test that enumeration and formula agree on every short chain."""
        for n in range(2, 6):
            for k in range(2, n + 1):
                for ell in range(1, 4):
                    for s in combinations_with_replacement(range(n), ell):
                        self.assertEqual(
                            count_flags(n, k, s, method='enumerate'),
                            count_flags(n, k, s, method='formula'),
                        )

    def test_bad_chain_and_method(self):
        """Test that bad chains and unknown methods raise OPPError."""
        with self.assertRaises(OPPError):
            count_flags(3, 2, (1, 0))
        with self.assertRaises(OPPError):
            count_flags(3, 2, (0, 1), method='guess')
