"""
Backward differences and the Minkowski basis Pi_{n-1}(k-1), k = 1..n.

Weight vectors are handled sorted ascending here: P_{n-1}(v) does not
change under permutations of v, and the difference calculus needs the
ascending order.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from exactmath.numbers import binomial

logger = logging.getLogger(__name__)

Vector = Tuple[Fraction, ...]


class MinkowskiError(Exception):
    """Base exception for the Minkowski calculus."""
    pass


def as_vector(values: Sequence) -> Vector:
    return tuple(Fraction(value) for value in values)


def diff(v: Sequence) -> Vector:
    """(v_2 - v_1, ..., v_n - v_{n-1})."""
    if len(v) < 2:
        raise MinkowskiError(f"Difference needs at least 2 entries, got {len(v)}")
    v = as_vector(v)
    return tuple(b - a for a, b in zip(v, v[1:]))


def difference_table(v: Sequence) -> List[Vector]:
    """Rows Delta^0(v), ..., Delta^{n-1}(v)."""
    if not v:
        raise MinkowskiError("Empty weight vector")
    rows = [as_vector(v)]
    while len(rows[-1]) > 1:
        rows.append(diff(rows[-1]))
    return rows


def all_diffs_nonneg(v: Sequence) -> bool:
    if not v:
        return True
    return all(entry >= 0 for row in difference_table(v) for entry in row)


def basis_vector(n: int, k: int) -> Tuple[int, ...]:
    """
    Sorted vertex (C(0,k-1), ..., C(n-1,k-1)) of Pi_{n-1}(k-1).

    k = 1 is the all-ones point.
    """
    if not isinstance(n, int) or not isinstance(k, int) or k < 1 or k > n:
        raise MinkowskiError(f"Expected 1 <= k <= n, got n={n!r}, k={k!r}")
    return tuple(binomial(p, k - 1) for p in range(n))


@dataclass(frozen=True)
class BasisCoefficients:
    """y_k multiplies Pi_{n-1}(k-1); y_1 multiplies the all-ones point."""
    y: Vector

    def to_dict(self):
        return {'feasible': True, 'y': list(self.y)}


@dataclass(frozen=True)
class Infeasible:
    """A negative entry of Delta^order(v) at 0-based `index`."""
    order: int
    index: int
    value: Fraction

    def to_dict(self):
        return {
            'feasible': False,
            'witness': {'order': self.order, 'index': self.index, 'value': self.value},
        }


def compose(y: Sequence) -> Vector:
    """sum_k y_k basis_vector(n, k)."""
    y = as_vector(y)
    n = len(y)
    if n == 0:
        raise MinkowskiError("Empty coefficient vector")
    return tuple(
        sum((y[k - 1] * binomial(p, k - 1) for k in range(1, n + 1)), Fraction(0))
        for p in range(n)
    )


def _solve_triangular(v: Vector) -> Vector:
    # basis_vector(n, k)[p] = C(p, k-1): lower triangular in (p, k-1), unit diagonal
    y: List[Fraction] = []
    for p, value in enumerate(v):
        known = sum((y[k] * binomial(p, k) for k in range(p)), Fraction(0))
        y.append(value - known)
    return tuple(y)


def _first_negative(table: List[Vector]) -> Optional[Infeasible]:
    for order, row in enumerate(table):
        for index, entry in enumerate(row):
            if entry < 0:
                return Infeasible(order, index, entry)
    return None


def decompose(v: Sequence) -> Union[BasisCoefficients, Infeasible]:
    """
    Write sorted v as a nonnegative combination of the basis, or explain why not.

    The triangular solve and the difference table are computed separately;
    y >= 0 and all Delta^i(v) >= 0 must agree.

    Args:
        v: Weight vector, sorted ascending

    Returns:
        BasisCoefficients on success, Infeasible with the first negative
        difference (lowest order, then lowest index) otherwise

    Raises:
        MinkowskiError: If v is empty or not sorted ascending
    """
    v = as_vector(v)
    if not v:
        raise MinkowskiError("Empty weight vector")
    if any(a > b for a, b in zip(v, v[1:])):
        raise MinkowskiError(f"Weight vector must be sorted ascending, got {[str(x) for x in v]}")
    y = _solve_triangular(v)
    witness = _first_negative(difference_table(v))
    if (witness is None) != all(value >= 0 for value in y):
        raise MinkowskiError(f"Difference test and triangular solve disagree on {v}")
    if witness is not None:
        logger.debug(f"No nonnegative decomposition: {witness}")
        return witness
    return BasisCoefficients(y)
