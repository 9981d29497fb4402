"""
Membership in P_{n-1}(v) by Rado's majorisation inequalities.
"""
import logging
from fractions import Fraction
from typing import Iterator, List, Sequence, Set, Tuple

from .basis import MinkowskiError, Vector, as_vector
from .subsets import MAX_N

logger = logging.getLogger(__name__)

RADO_METHODS = ('exhaustive', 'prefix', 'both')


def _descending_prefix_sums(values: Vector) -> List[Fraction]:
    sums = [Fraction(0)]
    for value in sorted(values, reverse=True):
        sums.append(sums[-1] + value)
    return sums


def _exhaustive(t: Vector, bounds: List[Fraction]) -> bool:
    n = len(t)
    for mask in range(1, (1 << n) - 1):
        size = bin(mask).count('1')
        total = sum((t[i] for i in range(n) if mask >> i & 1), Fraction(0))
        if total > bounds[size]:
            return False
    return True


def _prefix(t: Vector, bounds: List[Fraction]) -> bool:
    return all(a <= b for a, b in zip(_descending_prefix_sums(t)[1:-1], bounds[1:-1]))


def rado_membership(t: Sequence, v: Sequence, method: str = 'prefix') -> bool:
    """
    True iff t lies in the convex hull of the coordinate permutations of v.

    Conditions: sum t = sum v, and every subset I satisfies
    sum_{i in I} t_i <= sum of the |I| largest entries of v. `exhaustive`
    checks all 2^n - 2 subsets, `prefix` only the |I| largest entries of t,
    `both` runs the two and requires agreement.

    Raises:
        MinkowskiError: On length mismatch, unknown method or disagreement
    """
    t, v = as_vector(t), as_vector(v)
    if len(t) != len(v) or not t:
        raise MinkowskiError(f"Point has length {len(t)}, weight vector {len(v)}")
    if method not in RADO_METHODS:
        raise MinkowskiError(f"Unknown Rado method {method!r}, expected one of {RADO_METHODS}")
    if method != 'prefix' and len(t) > MAX_N:
        raise MinkowskiError(f"Exhaustive Rado check is limited to n <= {MAX_N}")
    bounds = _descending_prefix_sums(v)
    if sum(t) != bounds[-1]:
        return False
    if method == 'exhaustive':
        return _exhaustive(t, bounds)
    if method == 'prefix':
        return _prefix(t, bounds)
    exhaustive, prefix = _exhaustive(t, bounds), _prefix(t, bounds)
    if exhaustive != prefix:
        raise MinkowskiError(f"Rado checks disagree for t={t}, v={v}")
    return prefix


def _distinct_permutations(values: Tuple) -> Iterator[Tuple]:
    if not values:
        yield ()
        return
    for head in sorted(set(values)):
        rest = list(values)
        rest.remove(head)
        for tail in _distinct_permutations(tuple(rest)):
            yield (head,) + tail


def p_v_vertices(v: Sequence) -> Set[Vector]:
    """Distinct coordinate permutations of v."""
    return set(_distinct_permutations(as_vector(v)))


def dim_p_v(v: Sequence) -> int:
    v = as_vector(v)
    if not v:
        raise MinkowskiError("Empty weight vector")
    return 0 if len(set(v)) == 1 else len(v) - 1


def is_vertex_certified(u: Sequence, v: Sequence) -> bool:
    """
    True iff u satisfies Rado and the chain I_1 < I_2 < ... < I_{n-1} of its
    largest coordinates is tight at every step.

    n-1 nested tight inequalities with total equality pin u down, so a
    certified point is a vertex of P_{n-1}(v).
    """
    u = as_vector(u)
    if not rado_membership(u, v, method='prefix'):
        return False
    return _descending_prefix_sums(u) == _descending_prefix_sums(as_vector(v))
