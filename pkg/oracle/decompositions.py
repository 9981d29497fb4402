"""
Brute-force faces of a Minkowski sum of coordinate simplices.

A face of sum_F Delta_F is the sum of the faces Delta_{A_F} picked out by a
common functional, and the tuple (A_F)_F determines the face uniquely.
Sweeping every order type of functionals on R^n therefore lists all faces.
This module only relies on exact integer arithmetic: it never consults the
closed-form counts it is used to certify.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterator, List, Sequence, Set, Tuple

from exactmath.numbers import InvalidChainError, validate_chain

from .rank import direction_rank

logger = logging.getLogger(__name__)

ORDER_TYPE_MAX_N = 8
FVECTOR_MAX_N = 7
FLAG_MAX_N = 6

Blocks = Tuple[Tuple[int, ...], ...]
Point = Tuple[int, ...]


class OracleError(Exception):
    """Base exception for the brute-force oracle."""
    pass


class OracleSizeError(OracleError):
    """Raised when a sweep would exceed the configured size guard."""
    pass


def _guard(n: int, limit: int, what: str) -> None:
    if not isinstance(n, int) or n < 1:
        raise OracleError(f"Expected n >= 1, got {n!r}")
    if n > limit:
        raise OracleSizeError(f"{what} is limited to n <= {limit}, got n={n}")


def order_types(n: int) -> Iterator[Blocks]:
    """
    Every ordered set partition of [n], blocks listed from lowest to highest.

    Raises:
        OracleSizeError: If n exceeds ORDER_TYPE_MAX_N
    """
    _guard(n, ORDER_TYPE_MAX_N, "Order type enumeration")
    return _ordered_partitions(tuple(range(1, n + 1)))


def _ordered_partitions(elements: Tuple[int, ...]) -> Iterator[Blocks]:
    if not elements:
        yield ()
        return
    for size in range(1, len(elements) + 1):
        for block in combinations(elements, size):
            rest = tuple(e for e in elements if e not in block)
            for tail in _ordered_partitions(rest):
                yield (block,) + tail


@dataclass(frozen=True)
class SimplexFamily:
    """The Minkowski sum of Delta_F over `supports`."""
    n: int
    supports: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if any(not support for support in self.supports):
            raise OracleError("Every support must be nonempty")
        for support in self.supports:
            if any(not 1 <= e <= self.n for e in support):
                raise OracleError(f"Support {support} is not inside [{self.n}]")


def permutahedron_family(n: int, k: int) -> SimplexFamily:
    """All k-subsets of [n]: the summands of Pi_{n-1}(k-1)."""
    if not isinstance(k, int) or not 1 <= k <= n:
        raise OracleError(f"Expected 1 <= k <= n, got n={n!r}, k={k!r}")
    return SimplexFamily(n, tuple(combinations(range(1, n + 1), k)))


def _mask(elements) -> int:
    mask = 0
    for e in elements:
        mask |= 1 << (e - 1)
    return mask


@dataclass(frozen=True)
class FaceDecomposition:
    """
    The argmax sets (A_F)_F, one per support, as bitmasks.

    `packed` concatenates the masks in n-bit slots, so componentwise
    inclusion is a single integer test.
    """
    n: int
    masks: Tuple[int, ...]

    @property
    def packed(self) -> int:
        packed = 0
        for index, mask in enumerate(self.masks):
            packed |= mask << (self.n * index)
        return packed

    def subsets(self) -> List[Tuple[int, ...]]:
        return [tuple(i + 1 for i in range(self.n) if mask >> i & 1) for mask in self.masks]

    def support(self) -> FrozenSet[int]:
        union = 0
        for mask in self.masks:
            union |= mask
        return frozenset(i + 1 for i in range(self.n) if union >> i & 1)


def face_from_ordertype(ot: Blocks, fam: SimplexFamily) -> FaceDecomposition:
    """A_F = F intersected with the highest block of `ot` that meets F."""
    level = {}
    for index, block in enumerate(ot):
        for e in block:
            level[e] = index
    if sorted(level) != list(range(1, fam.n + 1)):
        raise OracleError(f"Order type {ot} is not a partition of [{fam.n}]")
    masks = []
    for support in fam.supports:
        top = max(level[e] for e in support)
        masks.append(_mask(e for e in support if level[e] == top))
    return FaceDecomposition(fam.n, tuple(masks))


def face_dim_oracle(d: FaceDecomposition) -> int:
    """Rank of {e_a - e_b : a, b in the same A_F}, one base element per A_F."""
    pairs = set()
    for subset in d.subsets():
        base = subset[0]
        for other in subset[1:]:
            pairs.add((other, base))
    return direction_rank(d.n, sorted(pairs))


def contains(inner: FaceDecomposition, outer: FaceDecomposition) -> bool:
    """Componentwise A_F(inner) inside A_F(outer)."""
    packed = inner.packed
    return packed & outer.packed == packed


def face_points(d: FaceDecomposition) -> Set[Point]:
    """Distinct sums of one vertex e_a, a in A_F, per support."""
    points = {(0,) * d.n}
    for subset in d.subsets():
        grown = set()
        for point in points:
            for a in subset:
                moved = list(point)
                moved[a - 1] += 1
                grown.add(tuple(moved))
        points = grown
    return points


class OracleLattice:
    """Deduplicated faces of a family, with their dimensions. Use `oracle_lattice`."""

    def __init__(self, fam: SimplexFamily):
        _guard(fam.n, FVECTOR_MAX_N, "Oracle face sweep")
        self.fam = fam
        logger.info(f"Sweeping order types of [{fam.n}] over {len(fam.supports)} supports")
        seen: Set[FaceDecomposition] = set()
        for ot in order_types(fam.n):
            seen.add(face_from_ordertype(ot, fam))
        by_dim: Dict[int, List[FaceDecomposition]] = {}
        for face in seen:
            by_dim.setdefault(face_dim_oracle(face), []).append(face)
        self.top = max(by_dim)
        self._by_dim = {dim: sorted(faces, key=lambda f: f.masks) for dim, faces in by_dim.items()}
        self._packed = {dim: [(f, f.packed) for f in faces] for dim, faces in self._by_dim.items()}

    def faces(self, dim: int) -> List[FaceDecomposition]:
        return self._by_dim.get(dim, [])

    def f_vector(self) -> List[int]:
        return [len(self.faces(dim)) for dim in range(self.top + 1)]

    def containing(self, face: FaceDecomposition, dim: int) -> List[FaceDecomposition]:
        packed = face.packed
        return [f for f, key in self._packed.get(dim, []) if packed & key == packed]


@lru_cache(maxsize=32)
def oracle_lattice(fam: SimplexFamily) -> OracleLattice:
    return OracleLattice(fam)


def f_vector_oracle(fam: SimplexFamily) -> List[int]:
    """Face counts by dimension, improper face included."""
    return oracle_lattice(fam).f_vector()


def flag_count_oracle(fam: SimplexFamily, s: Sequence[int]) -> int:
    """
    Chains of deduplicated faces with dimensions s, containment componentwise.

    Raises:
        OracleSizeError: If n exceeds FLAG_MAX_N
        OracleError: On a chain that is not monotone inside [0, dim]
    """
    _guard(fam.n, FLAG_MAX_N, "Oracle flag count")
    lattice = oracle_lattice(fam)
    try:
        s = validate_chain(s, lattice.top)
    except InvalidChainError as e:
        raise OracleError(str(e)) from e
    counts = {face: 1 for face in lattice.faces(s[0])}
    for dim in s[1:]:
        step: Dict[FaceDecomposition, int] = {}
        for face, count in counts.items():
            for upper in lattice.containing(face, dim):
                step[upper] = step.get(upper, 0) + count
        counts = step
    return sum(counts.values())


def oracle_vertices(fam: SimplexFamily) -> Set[Point]:
    """
    Vertices as points, from generic functionals only.

    Every vertex maximises some functional with distinct coordinates, so
    the n! total orders suffice.
    """
    _guard(fam.n, ORDER_TYPE_MAX_N, "Oracle vertex sweep")
    vertices = set()
    for order in permutations(range(1, fam.n + 1)):
        face = face_from_ordertype(tuple((e,) for e in order), fam)
        (point,) = face_points(face)
        vertices.add(point)
    return vertices


def edge_kinds(fam: SimplexFamily) -> Dict[int, int]:
    """Edges counted by the number of zero coordinates of a generic edge point."""
    kinds: Dict[int, int] = {}
    for edge in oracle_lattice(fam).faces(1):
        zeros = fam.n - len(edge.support())
        kinds[zeros] = kinds.get(zeros, 0) + 1
    return kinds


def vertex_degrees(fam: SimplexFamily) -> Dict[int, int]:
    """Histogram {number of edges at a vertex: number of such vertices}."""
    lattice = oracle_lattice(fam)
    degrees: Dict[int, int] = {}
    for vertex in lattice.faces(0):
        degree = len(lattice.containing(vertex, 1))
        degrees[degree] = degrees.get(degree, 0) + 1
    return degrees
