import random
from fractions import Fraction
from itertools import permutations

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from .basis import (
    BasisCoefficients, Infeasible, MinkowskiError, all_diffs_nonneg, basis_vector,
    compose, decompose, diff, difference_table,
)
from .rado import dim_p_v, is_vertex_certified, p_v_vertices, rado_membership
from .subsets import (
    SubsetCollection, is_symmetric, mask_of, mobius, subset_of, symmetric_collection,
    values_by_size, weight_vector_from_symmetric, zeta,
)

F = Fraction

small_fractions = st.fractions(min_value=0, max_value=10, max_denominator=6)


@st.composite
def collections(draw, max_n=6, signed=False):
    n = draw(st.integers(1, max_n))
    values = st.fractions(min_value=-5, max_value=5, max_denominator=4) if signed else small_fractions
    entries = draw(st.dictionaries(st.integers(1, (1 << n) - 1), values, max_size=12))
    return SubsetCollection(n, entries)


@st.composite
def weight_vectors(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    return sorted(draw(st.lists(st.integers(0, 6), min_size=n, max_size=n)))


@st.composite
def level_points(draw, v):
    """Points with the same coordinate sum as v."""
    t = draw(st.lists(st.fractions(min_value=-1, max_value=7, max_denominator=3),
                      min_size=len(v), max_size=len(v)))
    t[-1] = sum(v) - sum(t[:-1])
    return t


def _rado_weights(count=10, seed=2024):
    rng = random.Random(seed)
    weights = []
    for _ in range(count):
        n = rng.randint(2, 6)
        weights.append(tuple(sorted(rng.randint(0, 6) for _ in range(n))))
    return weights


RADO_WEIGHTS = _rado_weights()


class DifferenceTest(SimpleTestCase):
    """Tests for diff, difference_table and all_diffs_nonneg."""

    def test_diff(self):
        """Test the worked backward differences."""
        self.assertEqual(diff((0, 1, 2, 2)), (1, 1, 0))
        self.assertEqual(diff((1, 2, 4, 8)), (1, 2, 4))
        self.assertEqual(diff((3, 3, 3)), (0, 0))
        with self.assertRaises(MinkowskiError):
            diff((1,))

    def test_difference_table(self):
        """Test the rows of the difference table."""
        self.assertEqual(difference_table((0, 1, 2, 2)), [(0, 1, 2, 2), (1, 1, 0), (0, -1), (-1,)])

    def test_all_diffs_nonneg(self):
        """Test the worked feasibility verdicts."""
        self.assertFalse(all_diffs_nonneg((0, 1, 2, 2)))
        self.assertTrue(all_diffs_nonneg((1, 2, 4, 8)))
        self.assertTrue(all_diffs_nonneg((0, 0, 0, 0)))


class DecomposeTest(SimpleTestCase):
    """Tests for basis_vector, compose and decompose."""

    def test_basis_vector(self):
        """Test the sorted basis vertices."""
        self.assertEqual(basis_vector(4, 3), (0, 0, 1, 3))
        self.assertEqual(basis_vector(4, 1), (1, 1, 1, 1))
        self.assertEqual(basis_vector(4, 2), (0, 1, 2, 3))
        with self.assertRaises(MinkowskiError):
            basis_vector(3, 4)

    def test_examples(self):
        """Test the worked decompositions."""
        self.assertEqual(decompose((1, 2, 4, 8)), BasisCoefficients((1, 1, 1, 1)))
        self.assertEqual(decompose((0, 1, 2, 3)), BasisCoefficients((0, 1, 0, 0)))
        self.assertEqual(decompose((0, 1, 2, 2)), Infeasible(order=2, index=1, value=F(-1)))

    def test_unsorted_input_rejected(self):
        """Test that decompose insists on ascending order."""
        with self.assertRaises(MinkowskiError):
            decompose((2, 1, 0))
        with self.assertRaises(MinkowskiError):
            decompose(())

    @settings(max_examples=200)
    @given(st.lists(small_fractions, min_size=1, max_size=8))
    def test_round_trip(self, y):
        """Test that decompose inverts compose on nonnegative coefficients."""
        result = decompose(compose(y))
        self.assertIsInstance(result, BasisCoefficients)
        self.assertEqual(result.y, tuple(y))

    @settings(max_examples=200)
    @given(weight_vectors(max_n=7))
    def test_feasibility_matches_differences(self, v):
        """Test all_diffs_nonneg(v) iff decompose(v) succeeds."""
        self.assertEqual(all_diffs_nonneg(v), isinstance(decompose(v), BasisCoefficients))


class SubsetCollectionTest(SimpleTestCase):
    """Tests for subset collections, zeta and mobius."""

    def test_masks(self):
        """Test the bitmask encoding of subsets."""
        self.assertEqual(mask_of((1, 3), 3), 0b101)
        self.assertEqual(subset_of(0b101), (1, 3))
        with self.assertRaises(MinkowskiError):
            mask_of((), 3)
        with self.assertRaises(MinkowskiError):
            mask_of((4,), 3)

    def test_validation(self):
        """Test the size guard and duplicate subsets."""
        with self.assertRaises(MinkowskiError):
            SubsetCollection(17)
        with self.assertRaises(MinkowskiError):
            SubsetCollection(2, {4: 1})
        with self.assertRaises(MinkowskiError):
            SubsetCollection.from_entries(2, [((1,), 1), ((1,), 2)])

    def test_zeta_examples(self):
        """Test the worked zeta transforms."""
        a, b = F(2), F(5)
        y = SubsetCollection.from_entries(2, [((1,), a), ((2,), a), ((1, 2), b)])
        z = zeta(y)
        self.assertEqual(z.entries(), [((1,), a), ((2,), a), ((1, 2), 2 * a + b)])
        self.assertEqual(zeta(SubsetCollection(3)).entries(), [])
        modular = SubsetCollection.from_entries(3, [((1,), 1), ((2,), 2), ((3,), 4)])
        self.assertEqual(zeta(modular).get((1, 3)), 5)
        self.assertEqual(zeta(modular).get((1, 2, 3)), 7)
        self.assertEqual(mobius(z), y)

    def test_mobius_examples(self):
        """Test inclusion-exclusion on |I| and on a constant collection."""
        sizes = symmetric_collection(3, [1, 2, 3])
        self.assertEqual(mobius(sizes).entries(), [((1,), 1), ((2,), 1), ((3,), 1)])
        constant = mobius(symmetric_collection(2, [4, 4]))
        self.assertEqual(constant.entries(), [((1,), 4), ((2,), 4), ((1, 2), -4)])
        self.assertFalse(constant.is_nonnegative())
        self.assertTrue(mobius(sizes).is_nonnegative())

    @settings(max_examples=100)
    @given(collections(signed=True))
    def test_round_trips(self, t):
        """Test mobius(zeta(t)) = t and zeta(mobius(t)) = t."""
        self.assertEqual(mobius(zeta(t)), t)
        self.assertEqual(zeta(mobius(t)), t)

    @settings(max_examples=100)
    @given(st.integers(1, 6), st.data())
    def test_symmetry_is_transported(self, n, data):
        """Test is_symmetric(y) iff is_symmetric(zeta(y))."""
        by_size = data.draw(st.lists(small_fractions, min_size=n, max_size=n))
        y = symmetric_collection(n, by_size)
        self.assertTrue(is_symmetric(y))
        self.assertTrue(is_symmetric(zeta(y)))
        t = data.draw(collections())
        self.assertEqual(is_symmetric(t), is_symmetric(zeta(t)))

    def test_is_symmetric(self):
        """Test implicit zeros and a broken symmetry."""
        self.assertTrue(is_symmetric(SubsetCollection(3)))
        self.assertTrue(is_symmetric(symmetric_collection(3, [0, 2, 0])))
        self.assertFalse(is_symmetric(SubsetCollection.from_entries(2, [((1,), 1), ((2,), 2)])))
        self.assertFalse(is_symmetric(SubsetCollection.from_entries(2, [((1,), 1)])))

    def test_values_by_size(self):
        """Test reading a symmetric collection by subset size."""
        self.assertEqual(values_by_size(symmetric_collection(3, [1, 0, 5])), (1, 0, 5))
        with self.assertRaises(MinkowskiError):
            values_by_size(SubsetCollection.from_entries(2, [((1,), 1)]))

    @settings(max_examples=100)
    @given(st.lists(small_fractions, min_size=1, max_size=6))
    def test_weight_vector_from_zeta(self, y):
        """Test that the symmetric zeta transform of y describes compose(y)."""
        z = zeta(symmetric_collection(len(y), y))
        self.assertEqual(weight_vector_from_symmetric(z), compose(y))


class RadoTest(SimpleTestCase):
    """Tests for rado_membership, p_v_vertices and the vertex certificate."""

    def test_examples(self):
        """Test the worked memberships."""
        v = (2, 1, 0)
        for method in ('exhaustive', 'prefix', 'both'):
            self.assertTrue(rado_membership((1, 1, 1), v, method))
            self.assertFalse(rado_membership((F(5, 2), F(1, 2), 0), v, method))
            for t in permutations(v):
                self.assertTrue(rado_membership(t, v, method))

    def test_errors(self):
        """Test length mismatch and unknown methods."""
        with self.assertRaises(MinkowskiError):
            rado_membership((1, 1), (2, 1, 0))
        with self.assertRaises(MinkowskiError):
            rado_membership((1, 1, 1), (2, 1, 0), method='guess')

    def test_methods_agree(self):
        """Test that the exhaustive and sorted-prefix checks agree on 500 points per polytope."""
        for v in RADO_WEIGHTS:
            with self.subTest(v=v):
                @settings(max_examples=500, deadline=None)
                @given(level_points(v))
                def check(t):
                    self.assertEqual(rado_membership(t, v, 'exhaustive'), rado_membership(t, v, 'prefix'))

                check()

    @settings(max_examples=200)
    @given(weight_vectors(max_n=5), st.data())
    def test_convex_combinations(self, v, data):
        """Test that convex combinations pass and a scaled vertex fails."""
        points = sorted(p_v_vertices(v))
        weights = data.draw(st.lists(st.integers(0, 5), min_size=len(points), max_size=len(points)))
        if not any(weights):
            weights[0] = 1
        scale = F(1, sum(weights))
        combination = [sum(w * p[i] for w, p in zip(weights, points)) * scale for i in range(len(v))]
        self.assertTrue(rado_membership(combination, v, 'both'))
        if sum(v) > 0:
            scaled = [F(3, 2) * x for x in points[0]]
            self.assertFalse(rado_membership(scaled, v, 'both'))

    def test_vertices(self):
        """Test the worked hull point sets and dimensions."""
        self.assertEqual(len(p_v_vertices((0, 1, 2))), 6)
        self.assertEqual(p_v_vertices((3, 3, 3)), {(3, 3, 3)})
        self.assertEqual(dim_p_v((3, 3, 3)), 0)
        self.assertEqual(len(p_v_vertices((0, 0, 1, 3))), 12)
        self.assertEqual(dim_p_v((0, 0, 1, 3)), 3)

    def test_vertex_certificate(self):
        """Test that every permutation is certified and the centroid is not."""
        v = (0, 0, 1, 3)
        for u in p_v_vertices(v):
            self.assertTrue(is_vertex_certified(u, v))
        self.assertFalse(is_vertex_certified((1, 1, 1, 1), v))
