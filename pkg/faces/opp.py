"""
Faces of the general permutahedron Pi_{n-1}(k-1) as ordered pseudo-partitions.

Elements of [n] are labelled 1..n. A functional or vertex is a sequence of
length n whose entry i-1 belongs to element i.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Dict, Iterator, List, Sequence, Set, Tuple

from exactmath.numbers import binomial

logger = logging.getLogger(__name__)

VertexVector = Tuple[int, ...]
FunctionalVector = List[Fraction]
Block = Tuple[int, ...]


class OPPError(Exception):
    """Base exception for face and OPP operations."""
    pass


def check_nk(n: int, k: int) -> None:
    """Validate the (n, k) context of a general permutahedron with k >= 2."""
    if not isinstance(n, int) or not isinstance(k, int):
        raise OPPError(f"n and k must be integers, got n={n!r}, k={k!r}")
    if k < 2 or k > n:
        raise OPPError(f"Expected 2 <= k <= n, got n={n}, k={k}")


@dataclass(frozen=True)
class OrderType:
    """Ordered set partition of [n]: blocks listed by increasing functional value."""
    blocks: Tuple[Block, ...]

    @classmethod
    def from_functional(cls, c: Sequence) -> 'OrderType':
        levels: Dict[Fraction, List[int]] = {}
        for index, value in enumerate(c, start=1):
            levels.setdefault(Fraction(value), []).append(index)
        return cls(tuple(tuple(levels[value]) for value in sorted(levels)))

    @property
    def n(self) -> int:
        return sum(len(block) for block in self.blocks)

    def validate(self) -> None:
        elements = [e for block in self.blocks for e in block]
        if any(not block for block in self.blocks):
            raise OPPError(f"Order type {self} has an empty block")
        if sorted(elements) != list(range(1, len(elements) + 1)):
            raise OPPError(f"Order type {self} is not a partition of [{len(elements)}]")

    def __str__(self) -> str:
        return '<'.join('{' + ','.join(map(str, block)) + '}' for block in self.blocks)


@dataclass(frozen=True)
class OPP:
    """
    Ordered pseudo-partition (Z, X_0, ..., X_p) of [n] in canonical form.

    Blocks are stored sorted ascending, Z explicitly (possibly empty), so
    two OPPs denote the same face exactly when they compare equal.
    """
    n: int
    k: int
    zero: Block
    parts: Tuple[Block, ...]

    @classmethod
    def build(cls, n: int, k: int, zero, parts) -> 'OPP':
        opp = cls(n, k, tuple(sorted(zero)), tuple(tuple(sorted(part)) for part in parts))
        opp.validate()
        return opp

    @property
    def p(self) -> int:
        return len(self.parts) - 1

    def validate(self) -> None:
        """
        Check the face conditions: 0 <= |Z| <= k-1 and k <= |Z| + |X_0| <= n.

        Raises:
            OPPError: If the tuple is not a valid face identifier
        """
        check_nk(self.n, self.k)
        if not self.parts or any(not part for part in self.parts):
            raise OPPError(f"{self} needs nonempty parts X_0..X_p")
        elements = list(self.zero) + [e for part in self.parts for e in part]
        if sorted(elements) != list(range(1, self.n + 1)):
            raise OPPError(f"{self} is not a disjoint cover of [{self.n}]")
        if len(self.zero) > self.k - 1:
            raise OPPError(f"{self} has |Z| = {len(self.zero)} > k-1 = {self.k - 1}")
        if len(self.zero) + len(self.parts[0]) < self.k:
            raise OPPError(f"{self} has |Z| + |X_0| < k = {self.k}")

    def levels(self) -> List[Block]:
        """Z followed by X_0..X_p, skipping an empty Z."""
        return ([self.zero] if self.zero else []) + list(self.parts)

    def sort_key(self):
        return (face_dim(self), self.zero, self.parts)

    def to_dict(self) -> Dict:
        return {
            'Z': list(self.zero),
            'parts': [list(part) for part in self.parts],
            'dim': face_dim(self),
            'improper': is_improper(self),
        }

    def __str__(self) -> str:
        def fmt(block):
            return '{' + ','.join(map(str, block)) + '}'
        return f"({fmt(self.zero)}; " + ', '.join(fmt(part) for part in self.parts) + ')'


def is_valid_opp(face: OPP) -> bool:
    try:
        face.validate()
    except OPPError:
        return False
    return True


def basis_values(n: int, k: int) -> VertexVector:
    """Ascending vertex entries (0,...,0, C(k-1,k-1), ..., C(n-1,k-1))."""
    return tuple(binomial(j, k - 1) for j in range(n))


def vertices(n: int, k: int) -> Set[VertexVector]:
    """
    All vertices of Pi_{n-1}(k-1): the distinct permutations of basis_values.

    For k >= 2 there are n!/(k-1)! of them; k = 1 is the single point (1,...,1).
    """
    if not isinstance(n, int) or not isinstance(k, int) or k < 1 or k > n:
        raise OPPError(f"Expected 1 <= k <= n, got n={n!r}, k={k!r}")
    values = basis_values(n, k)
    if k == 1:
        return {values}
    nonzero = values[k - 1:]
    result = set()
    for positions in permutations(range(n), len(nonzero)):
        vertex = [0] * n
        for position, value in zip(positions, nonzero):
            vertex[position] = value
        result.add(tuple(vertex))
    return result


def opp_from_functional(c: Sequence, n: int, k: int) -> OPP:
    """
    The OPP of the face maximising the functional c.

    Blocks of c's order type are taken from the top until they cover at
    least n-k+1 elements; everything below is Z.
    """
    check_nk(n, k)
    if len(c) != n:
        raise OPPError(f"Functional has length {len(c)}, expected {n}")
    blocks = OrderType.from_functional(c).blocks
    covered = 0
    start = len(blocks)
    while covered < n - k + 1:
        start -= 1
        covered += len(blocks[start])
    zero = [e for block in blocks[:start] for e in block]
    return OPP.build(n, k, zero, blocks[start:])


def canonical_functional(face: OPP) -> FunctionalVector:
    """Functional with value 0 on Z and i+1 on X_i."""
    c = [Fraction(0)] * face.n
    for i, part in enumerate(face.parts):
        for e in part:
            c[e - 1] = Fraction(i + 1)
    return c


def _distinct_arrangements(values: Sequence[int]) -> Set[Tuple[int, ...]]:
    return set(permutations(values))


def face_vertices(face: OPP) -> Set[VertexVector]:
    """
    Vertices of the face: the |X_p| largest entries sit on X_p, the next
    |X_{p-1}| on X_{p-1}, and so on, with zeros on Z.
    """
    face.validate()
    values = basis_values(face.n, face.k)
    levels = face.levels()
    slices = []
    offset = 0
    for block in levels:
        slices.append(_distinct_arrangements(values[offset:offset + len(block)]))
        offset += len(block)
    result = set()
    for choice in product(*slices):
        vertex = [0] * face.n
        for block, arrangement in zip(levels, choice):
            for e, value in zip(block, arrangement):
                vertex[e - 1] = value
        result.add(tuple(vertex))
    return result


def face_dim(face: OPP) -> int:
    """Dimension n - |Z| - p - 1."""
    return face.n - len(face.zero) - face.p - 1


def is_improper(face: OPP) -> bool:
    """True for the whole polytope (Z empty, a single part)."""
    return not face.zero and face.p == 0


def face_contains(inner: OPP, outer: OPP) -> bool:
    """
    True iff the face of `inner` lies in the face of `outer`.

    Every part of `inner` must sit inside one part of `outer`, X_0 inside
    X'_0, the induced index map i -> i' must be an increasing surjection,
    and elements of Z(inner) may only move up into X'_0.
    """
    if (inner.n, inner.k) != (outer.n, outer.k):
        raise OPPError(f"Cannot compare faces of different polytopes: {inner} vs {outer}")
    block_of: Dict[int, int] = {}
    for index, part in enumerate(outer.parts):
        for e in part:
            block_of[e] = index
    previous = 0
    hit = set()
    for position, part in enumerate(inner.parts):
        indices = {block_of.get(e, -1) for e in part}
        if len(indices) != 1:
            return False
        (index,) = indices
        if index < previous or (position == 0 and index != 0):
            return False
        previous = index
        hit.add(index)
    if len(hit) != len(outer.parts):
        return False
    return all(block_of.get(e, 0) == 0 for e in inner.zero)


def _compositions(parts: Sequence[Block]) -> Iterator[List[Block]]:
    """Group consecutive parts into nonempty runs, in every possible way."""
    if not parts:
        yield []
        return
    for cut in range(1, len(parts) + 1):
        head = tuple(sorted(e for part in parts[:cut] for e in part))
        for rest in _compositions(parts[cut:]):
            yield [head] + rest


def coarsenings(face: OPP) -> Iterator[OPP]:
    """
    Every face containing `face`, itself included.

    X'_0 absorbs X_0..X_r and any subset of Z; the remaining parts are
    merged in consecutive runs.
    """
    face.validate()
    zero = face.zero
    for r in range(len(face.parts)):
        merged = [e for part in face.parts[:r + 1] for e in part]
        for size in range(len(zero) + 1):
            for lifted in combinations(zero, size):
                new_zero = tuple(e for e in zero if e not in lifted)
                head = tuple(sorted(merged + list(lifted)))
                for runs in _compositions(face.parts[r + 1:]):
                    yield OPP(face.n, face.k, new_zero, (head,) + tuple(runs))


def _is_constant(values: Sequence) -> bool:
    return len(set(values)) <= 1


def v_reduce(c: Sequence, v: Sequence) -> FunctionalVector:
    """
    Merge consecutive blocks of c on whose union v is constant.

    Merged blocks take the average of the two values, which leaves the
    face of c unchanged. v must lie on that face (c_i < c_j => v_i <= v_j).
    """
    if len(c) != len(v):
        raise OPPError(f"Length mismatch: functional {len(c)}, vertex {len(v)}")
    c = [Fraction(value) for value in c]
    for i in range(len(c)):
        for j in range(len(c)):
            if c[i] < c[j] and v[i] > v[j]:
                raise OPPError(f"Vertex {list(v)} is not on the face of functional {c}")
    blocks = [list(block) for block in OrderType.from_functional(c).blocks]
    merged = True
    while merged:
        merged = False
        for index in range(len(blocks) - 1):
            union = blocks[index] + blocks[index + 1]
            if _is_constant([v[e - 1] for e in union]):
                average = (c[blocks[index][0] - 1] + c[blocks[index + 1][0] - 1]) / 2
                for e in union:
                    c[e - 1] = average
                blocks[index:index + 2] = [union]
                merged = True
                break
    return c


def vertex_of_functional(c: Sequence, n: int, k: int) -> VertexVector:
    """
    The vertex maximising a functional with pairwise distinct coordinates:
    the j-th largest coordinate gets C(n-j, k-1).
    """
    check_nk(n, k)
    if len(c) != n:
        raise OPPError(f"Functional has length {len(c)}, expected {n}")
    if len(set(Fraction(value) for value in c)) != n:
        raise OPPError(f"Functional {list(c)} has repeated coordinates")
    order = sorted(range(n), key=lambda index: Fraction(c[index]))
    vertex = [0] * n
    for rank, index in enumerate(order):
        vertex[index] = binomial(rank, k - 1)
    return tuple(vertex)


