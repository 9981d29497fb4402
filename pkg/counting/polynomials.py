"""
Closed-form face and flag counts of the general permutahedra Pi_{n-1}(k-1).
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, Sequence, Tuple

from exactmath.numbers import (
    InvalidChainError, binomial, factorial, multinomial, ordered_partition_count,
    stirling2, validate_chain,
)

logger = logging.getLogger(__name__)

Exponent = Tuple[int, ...]


class CountingError(Exception):
    """Base exception for closed-form counting."""
    pass


def _check_nk(n: int, k: int) -> None:
    if not isinstance(n, int) or not isinstance(k, int) or k < 2 or k > n:
        raise CountingError(f"Expected 2 <= k <= n, got n={n!r}, k={k!r}")


def _chain(s: Iterable[int], top: int) -> Tuple[int, ...]:
    try:
        return validate_chain(s, top)
    except InvalidChainError as e:
        raise CountingError(str(e)) from e


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in one variable; coefficients[i] multiplies x^i."""
    coefficients: Tuple[int, ...]

    def __post_init__(self):
        coefficients = tuple(self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients = coefficients[:-1]
        object.__setattr__(self, 'coefficients', coefficients)

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self.coefficients):
            return self.coefficients[i]
        return 0

    def to_list(self) -> list:
        return list(self.coefficients)

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coefficients) - 1, -1, -1):
            c = self.coefficients[i]
            if c == 0:
                continue
            power = '' if i == 0 else ('x' if i == 1 else f'x^{i}')
            if power and c == 1:
                terms.append(power)
            else:
                terms.append(f'{c}{power}')
        return ' + '.join(terms) if terms else '0'


@dataclass(frozen=True)
class MultiPolynomial:
    """Integer polynomial in x_1..x_ell stored as {exponent tuple: coefficient}."""
    ell: int
    terms: Dict[Exponent, int]

    def __post_init__(self):
        object.__setattr__(self, 'terms', {e: c for e, c in self.terms.items() if c != 0})

    def coefficient(self, exponent: Sequence[int]) -> int:
        return self.terms.get(tuple(exponent), 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPolynomial):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    def __hash__(self):
        return hash((self.ell, tuple(sorted(self.terms.items()))))

    def to_rows(self) -> list:
        """Sorted [exponent list, coefficient] pairs."""
        return [[list(e), c] for e, c in sorted(self.terms.items())]


def boundary(s: Sequence[int]) -> Exponent:
    """(s_1, s_2 - s_1, ..., s_ell - s_{ell-1})."""
    return tuple([s[0]] + [s[i] - s[i - 1] for i in range(1, len(s))])


@lru_cache(maxsize=None)
def f_polynomial(n: int, k: int) -> IntPolynomial:
    """
    f-polynomial of Pi_{n-1}(k-1); [x^d] is the number of d-faces.

    A face is chosen by its zero set Z (|Z| = i <= k-1), its bottom part X_0
    (|X_0| = j with i + j >= k), and an ordered partition of the rest.

    Raises:
        CountingError: If k is outside 2..n
    """
    _check_nk(n, k)
    coefficients = [0] * n
    for i in range(k):
        for j in range(max(k - i, 1), n - i + 1):
            rest = n - i - j
            outer = binomial(n, i) * binomial(n - i, j)
            for p in range(rest + 1):
                count = ordered_partition_count(rest, p)
                if count:
                    coefficients[n - i - p - 1] += outer * count
    return IntPolynomial(tuple(coefficients))


def simplex_f_polynomial(n: int) -> IntPolynomial:
    """((x+1)^n - 1)/x: the nonempty faces of the (n-1)-simplex."""
    return IntPolynomial(tuple(binomial(n, d + 1) for d in range(n)))


def vertex_count(n: int, k: int) -> int:
    _check_nk(n, k)
    return factorial(n) // factorial(k - 1)


def edge_counts(n: int, k: int) -> Tuple[int, int]:
    """
    Edges by kind: (e1, e2).

    e1 edges keep the same k-1 zeros at both ends; e2 edges have k-2 common
    zeros, one end carrying its least nonzero entry where the other has a zero.
    """
    _check_nk(n, k)
    e1 = (n - k) * factorial(n) // (2 * factorial(k - 1))
    e2 = factorial(n) // (2 * factorial(k - 2))
    return e1, e2


def euler_characteristic(poly: IntPolynomial) -> int:
    """Alternating sum of the f-vector, improper face included."""
    return sum((-1) ** i * c for i, c in enumerate(poly.coefficients))


def flag_count_simple(fvec: IntPolynomial, d: int, s: Sequence[int]) -> int:
    """
    Number of s-flags of a simple d-polytope with f-polynomial fvec.

    Each s_1-face lies in a fixed number of flags above it, counted by the
    multinomial over the gaps of the chain and the remaining d - s_ell.
    """
    s = _chain(s, d)
    gaps = [s[i] - s[i - 1] for i in range(1, len(s))]
    return fvec.coefficient(s[0]) * multinomial(d - s[0], gaps)


def flag_count(n: int, k: int, s: Sequence[int]) -> int:
    """Flag count of Pi_{n-1}(k-1) straight from (n, k)."""
    return flag_count_simple(f_polynomial(n, k), n - 1, s)


def perm_flag_count(n: int, s: Sequence[int]) -> int:
    """Flag count of the standard permutahedron Pi_{n-1}."""
    if not isinstance(n, int) or n < 1:
        raise CountingError(f"Expected n >= 1, got {n!r}")
    s = _chain(s, n - 1)
    gaps = [s[i] - s[i - 1] for i in range(1, len(s))]
    return stirling2(n, n - s[0]) * factorial(n - s[0]) * multinomial(n - s[0] - 1, gaps)


def _compositions(total: int, size: int):
    """All tuples of `size` nonnegative integers summing to `total`."""
    if size == 0:
        if total == 0:
            yield ()
        return
    if size == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _compositions(total - head, size - 1):
            yield (head,) + rest


def flag_polynomial(n: int, k: int, ell: int) -> MultiPolynomial:
    """
    ell-flag polynomial of Pi_{n-1}(k-1).

    Expands (x_2 + ... + x_ell + 1)^(n-1) f(x_1 / (x_2 + ... + x_ell + 1))
    monomial by monomial, so the coefficient of x^boundary(s) is the number
    of s-flags.

    Args:
        n: Ambient dimension
        k: Family index, 2 <= k <= n
        ell: Flag length, >= 1

    Returns:
        MultiPolynomial: Exponent tuples of length ell mapped to flag counts
    """
    if not isinstance(ell, int) or ell < 1:
        raise CountingError(f"Expected ell >= 1, got {ell!r}")
    fvec = f_polynomial(n, k)
    logger.debug(f"Expanding flag polynomial for n={n}, k={k}, ell={ell}")
    terms: Dict[Exponent, int] = {}
    for s1, f in enumerate(fvec.coefficients):
        if not f:
            continue
        free = n - 1 - s1
        if ell == 1:
            terms[(s1,)] = terms.get((s1,), 0) + f
            continue
        # ell-1 gap exponents plus the power of the constant 1
        for split in _compositions(free, ell):
            gaps = split[:-1]
            coefficient = f * multinomial(free, gaps)
            exponent = (s1,) + gaps
            terms[exponent] = terms.get(exponent, 0) + coefficient
    return MultiPolynomial(ell, terms)
