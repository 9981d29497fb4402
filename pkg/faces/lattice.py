"""
Face enumeration and flag counting for Pi_{n-1}(k-1) on top of the OPP encoding.
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from counting.polynomials import CountingError, flag_count
from exactmath.numbers import InvalidChainError, validate_chain

from .opp import OPP, OPPError, check_nk, coarsenings, face_dim

logger = logging.getLogger(__name__)

FLAG_METHODS = ('formula', 'enumerate', 'both')


def ordered_partitions(elements: Sequence[int]) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Every ordered set partition of `elements` into nonempty blocks."""
    elements = tuple(elements)
    if not elements:
        yield ()
        return
    for size in range(1, len(elements) + 1):
        for first in combinations(elements, size):
            rest = tuple(e for e in elements if e not in first)
            for tail in ordered_partitions(rest):
                yield (first,) + tail


def _generate_faces(n: int, k: int) -> Iterator[OPP]:
    universe = tuple(range(1, n + 1))
    for z_size in range(k):
        for zero in combinations(universe, z_size):
            rest = tuple(e for e in universe if e not in zero)
            for x0_size in range(max(k - z_size, 1), len(rest) + 1):
                for first in combinations(rest, x0_size):
                    remainder = tuple(e for e in rest if e not in first)
                    for tail in ordered_partitions(remainder):
                        yield OPP(n, k, zero, (first,) + tail)


def enumerate_faces(n: int, k: int, dim_filter: Optional[int] = None) -> Iterator[OPP]:
    """
    Yield every face of Pi_{n-1}(k-1) once, by dimension and then by OPP.

    Args:
        n: Ambient dimension
        k: Family index, 2 <= k <= n
        dim_filter: Only yield faces of this dimension

    Raises:
        OPPError: If k is outside 2..n
    """
    lattice = face_lattice(n, k)
    dims = range(n) if dim_filter is None else [dim_filter]
    for dim in dims:
        yield from lattice.faces(dim)


class FaceLattice:
    """
    Faces of one Pi_{n-1}(k-1) grouped by dimension, with cached up-sets.

    Build through `face_lattice(n, k)` to share instances.
    """

    def __init__(self, n: int, k: int):
        check_nk(n, k)
        self.n = n
        self.k = k
        logger.info(f"Enumerating faces of Pi_{n - 1}({k - 1})")
        by_dim: Dict[int, List[OPP]] = {dim: [] for dim in range(n)}
        for face in _generate_faces(n, k):
            by_dim[face_dim(face)].append(face)
        self._by_dim = {dim: tuple(sorted(faces, key=OPP.sort_key)) for dim, faces in by_dim.items()}
        self._up: Dict[Tuple[OPP, int], Tuple[OPP, ...]] = {}

    def faces(self, dim: int) -> Tuple[OPP, ...]:
        return self._by_dim.get(dim, ())

    def f_vector(self) -> List[int]:
        return [len(self._by_dim[dim]) for dim in range(self.n)]

    def faces_containing(self, face: OPP, dim: int) -> Tuple[OPP, ...]:
        """Faces of dimension `dim` that contain `face`."""
        key = (face, dim)
        if key not in self._up:
            self._up[key] = tuple(sorted(
                {c for c in coarsenings(face) if face_dim(c) == dim}, key=OPP.sort_key,
            ))
        return self._up[key]

    def count_chains(self, s: Sequence[int]) -> int:
        """Number of chains A_1 <= ... <= A_l with dim A_i = s_i."""
        counts = {face: 1 for face in self.faces(s[0])}
        for dim in s[1:]:
            step: Dict[OPP, int] = {}
            for face, count in counts.items():
                for upper in self.faces_containing(face, dim):
                    step[upper] = step.get(upper, 0) + count
            counts = step
        return sum(counts.values())


@lru_cache(maxsize=32)
def face_lattice(n: int, k: int) -> FaceLattice:
    return FaceLattice(n, k)


def count_flags(n: int, k: int, s: Sequence[int], method: str = 'formula') -> int:
    """
    Number of s-flags of Pi_{n-1}(k-1).

    `formula` uses the simple-polytope reduction, `enumerate` walks the face
    lattice, `both` computes the two and insists they agree.

    Raises:
        OPPError: On a bad chain, an unknown method or disagreeing methods
    """
    check_nk(n, k)
    if method not in FLAG_METHODS:
        raise OPPError(f"Unknown flag counting method {method!r}, expected one of {FLAG_METHODS}")
    try:
        s = validate_chain(s, n - 1)
    except InvalidChainError as e:
        raise OPPError(str(e)) from e
    formula = enumerated = None
    if method in ('formula', 'both'):
        try:
            formula = flag_count(n, k, s)
        except CountingError as e:
            raise OPPError(str(e)) from e
    if method in ('enumerate', 'both'):
        enumerated = face_lattice(n, k).count_chains(s)
    if method == 'both' and formula != enumerated:
        raise OPPError(f"Flag counts disagree for n={n}, k={k}, s={list(s)}: {formula} vs {enumerated}")
    return formula if formula is not None else enumerated
