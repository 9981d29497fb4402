"""
Subset collections {t_I : I nonempty subset of [n]} and the zeta/Moebius pair.

Subsets are bitmasks: element i (1-based) is bit i-1. Collections are
sparse, an absent subset has value 0.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from exactmath.numbers import binomial

from .basis import MinkowskiError, Vector

logger = logging.getLogger(__name__)

MAX_N = 16


def mask_of(subset: Iterable[int], n: int) -> int:
    mask = 0
    for element in subset:
        if not isinstance(element, int) or not 1 <= element <= n:
            raise MinkowskiError(f"Subset element {element!r} outside [1, {n}]")
        mask |= 1 << (element - 1)
    if not mask:
        raise MinkowskiError("Subsets must be nonempty")
    return mask


def subset_of(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


@dataclass(frozen=True)
class SubsetCollection:
    n: int
    values: Mapping[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        if not isinstance(self.n, int) or not 1 <= self.n <= MAX_N:
            raise MinkowskiError(f"Expected 1 <= n <= {MAX_N}, got {self.n!r}")
        full = (1 << self.n) - 1
        cleaned = {}
        for mask, value in self.values.items():
            if not 0 < mask <= full:
                raise MinkowskiError(f"Bitmask {mask} is not a nonempty subset of [{self.n}]")
            if value:
                cleaned[mask] = Fraction(value)
        object.__setattr__(self, 'values', cleaned)

    @classmethod
    def from_entries(cls, n: int, entries: Iterable[Tuple[Iterable[int], Fraction]]) -> 'SubsetCollection':
        """Build from (subset, value) pairs; a repeated subset is an error."""
        values: Dict[int, Fraction] = {}
        for subset, value in entries:
            mask = mask_of(subset, n)
            if mask in values:
                raise MinkowskiError(f"Subset {sorted(subset)} given twice")
            values[mask] = Fraction(value)
        return cls(n, values)

    def get(self, subset: Iterable[int]) -> Fraction:
        return self.values.get(mask_of(subset, self.n), Fraction(0))

    def entries(self) -> List[Tuple[Tuple[int, ...], Fraction]]:
        """Nonzero (subset, value) pairs ordered by size, then lexicographically."""
        return sorted(
            ((subset_of(mask), value) for mask, value in self.values.items()),
            key=lambda entry: (len(entry[0]), entry[0]),
        )

    def is_nonnegative(self) -> bool:
        return all(value >= 0 for value in self.values.values())

    def _dense(self) -> List[Fraction]:
        dense = [Fraction(0)] * (1 << self.n)
        for mask, value in self.values.items():
            dense[mask] = value
        return dense


def _subset_transform(t: SubsetCollection, sign: int) -> SubsetCollection:
    dense = t._dense()
    for bit in range(t.n):
        step = 1 << bit
        for mask in range(1 << t.n):
            if mask & step:
                dense[mask] += sign * dense[mask ^ step]
    return SubsetCollection(t.n, {mask: value for mask, value in enumerate(dense) if mask and value})


def zeta(y: SubsetCollection) -> SubsetCollection:
    """z_I = sum over nonempty J inside I of y_J."""
    logger.debug(f"Zeta transform over [{y.n}]")
    return _subset_transform(y, 1)


def mobius(z: SubsetCollection) -> SubsetCollection:
    """
    y_I = sum_{J inside I} (-1)^{|I|-|J|} z_J.

    The result may have negative values; P(z) is a Minkowski sum of
    simplices exactly when `mobius(z).is_nonnegative()`.
    """
    logger.debug(f"Moebius inversion over [{z.n}]")
    return _subset_transform(z, -1)


def is_symmetric(t: SubsetCollection) -> bool:
    """True iff t_I only depends on |I|, absent subsets counting as 0."""
    seen: Dict[int, Dict[Fraction, int]] = {}
    for mask, value in t.values.items():
        counts = seen.setdefault(bin(mask).count('1'), {})
        counts[value] = counts.get(value, 0) + 1
    for size, counts in seen.items():
        if len(counts) > 1:
            return False
        (count,) = counts.values()
        if count != binomial(t.n, size):
            return False
    return True


def symmetric_collection(n: int, by_size: Sequence) -> SubsetCollection:
    """The symmetric collection with value by_size[m-1] on every m-subset."""
    if len(by_size) != n:
        raise MinkowskiError(f"Expected {n} values by size, got {len(by_size)}")
    if not 1 <= n <= MAX_N:
        raise MinkowskiError(f"Expected 1 <= n <= {MAX_N}, got {n!r}")
    values = {mask: Fraction(by_size[bin(mask).count('1') - 1]) for mask in range(1, 1 << n)}
    return SubsetCollection(n, values)


def values_by_size(t: SubsetCollection) -> Vector:
    """(t_m)_{m=1..n} of a symmetric collection."""
    if not is_symmetric(t):
        raise MinkowskiError("Collection is not symmetric")
    by_size = [Fraction(0)] * t.n
    for mask, value in t.values.items():
        by_size[bin(mask).count('1') - 1] = value
    return tuple(by_size)


def weight_vector_from_symmetric(z: SubsetCollection) -> Vector:
    """
    Ascending v of P(z) for symmetric z read as sum_{i in I} x_i >= z_I.

    The m smallest coordinates sum to z_m, so v_m = z_m - z_{m-1} with z_0 = 0.
    """
    by_size = (Fraction(0),) + values_by_size(z)
    return tuple(by_size[m] - by_size[m - 1] for m in range(1, z.n + 1))
