"""
Exact integer and rational arithmetic helpers.

Python integers are arbitrary precision and `fractions.Fraction` is always
kept in lowest terms with a positive denominator, so both are used as the
ExactInteger and ExactRational types of the whole project. This module adds
the combinatorial number functions every other app consumes.
"""
import logging
import re
import threading
from fractions import Fraction
from typing import Callable, Iterable, List, Sequence, Tuple, Union

logger = logging.getLogger(__name__)

Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r'^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$')


class ExactMathError(Exception):
    """Base exception for exact arithmetic helpers."""
    pass


class InvalidChainError(ExactMathError):
    """Raised when a dimension chain is not monotone or leaves its range."""
    pass


class TriangularTable:
    """
    Memo table T[n][m] for 0 <= m <= n, grown one row at a time.

    Rows are only ever appended, fully built, under a lock, so concurrent
    readers never observe a partial row.
    """

    def __init__(self, first_row: Sequence[int], next_row: Callable[[List[int]], List[int]]):
        self._rows: List[List[int]] = [list(first_row)]
        self._next_row = next_row
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._rows)

    def get(self, n: int, m: int) -> int:
        if m < 0 or m > n:
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    self._rows.append(self._next_row(self._rows[-1]))
                logger.debug(f"Grew table to {len(self._rows)} rows")
        return self._rows[n][m]


def _pascal_row(previous: List[int]) -> List[int]:
    return [1] + [a + b for a, b in zip(previous, previous[1:])] + [1]


def _stirling_row(previous: List[int]) -> List[int]:
    # S(n, m) = m S(n-1, m) + S(n-1, m-1)
    size = len(previous) + 1
    padded = previous + [0]
    return [m * padded[m] + (padded[m - 1] if m > 0 else 0) for m in range(size)]


_BINOMIALS = TriangularTable([1], _pascal_row)
_STIRLING2 = TriangularTable([1], _stirling_row)


def _check_nat(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ExactMathError(f"{name} must be a non-negative integer, got {value!r}")


def factorial(n: int) -> int:
    """Return n!."""
    _check_nat('n', n)
    result = 1
    for i in range(2, n + 1):
        result *= i
    return result


def binomial(n: int, k: int) -> int:
    """
    Return the binomial coefficient C(n, k).

    k > n is allowed and yields 0 so that formula sums can run over
    uniform index ranges.
    """
    _check_nat('n', n)
    _check_nat('k', k)
    return _BINOMIALS.get(n, k)


def multinomial(n: int, parts: Iterable[int]) -> int:
    """
    Return n! / (prod(parts!) * (n - sum(parts))!).

    The last part is implicit: whatever `parts` leaves of n.

    Raises:
        ExactMathError: If the parts add up to more than n
    """
    _check_nat('n', n)
    parts = list(parts)
    for part in parts:
        _check_nat('part', part)
    if sum(parts) > n:
        raise ExactMathError(f"Parts {parts} add up to more than {n}")
    result = 1
    remaining = n
    for part in parts:
        result *= binomial(remaining, part)
        remaining -= part
    return result


def stirling2(n: int, m: int) -> int:
    """Number of partitions of [n] into m nonempty unordered blocks."""
    _check_nat('n', n)
    _check_nat('m', m)
    return _STIRLING2.get(n, m)


def ordered_partition_count(n: int, m: int) -> int:
    """Number of ordered partitions of [n] into m blocks, S(n, m) * m!."""
    return stirling2(n, m) * factorial(m)


def fubini(n: int) -> int:
    """Number of ordered set partitions of [n]."""
    return sum(ordered_partition_count(n, m) for m in range(n + 1))


def bell(n: int) -> int:
    """Number of set partitions of [n]."""
    return sum(stirling2(n, m) for m in range(n + 1))


def validate_chain(chain: Iterable[int], top: int) -> Tuple[int, ...]:
    """
    Check that `chain` is a monotone sequence s_1 <= ... <= s_l in [0, top].

    Returns:
        The chain as a tuple

    Raises:
        InvalidChainError: If the chain is empty, leaves the range or decreases
    """
    chain = tuple(chain)
    if not chain:
        raise InvalidChainError("Chain must contain at least one dimension")
    for value in chain:
        if not isinstance(value, int) or isinstance(value, bool):
            raise InvalidChainError(f"Chain entries must be integers, got {value!r}")
    if chain[0] < 0 or chain[-1] > top:
        raise InvalidChainError(f"Chain {list(chain)} leaves the range [0, {top}]")
    if any(a > b for a, b in zip(chain, chain[1:])):
        raise InvalidChainError(f"Chain {list(chain)} is not monotone")
    return chain


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse an integer or a "p/q" string into a Fraction.

    Decimal notation is rejected: every number stays exact.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    match = _RATIONAL_RE.match(str(text))
    if not match:
        raise ExactMathError(f"Not an integer or p/q rational: {text!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ExactMathError(f"Zero denominator in {text!r}")
    return Fraction(int(numerator), int(denominator) if denominator is not None else 1)


def parse_rational_list(text: str) -> List[Fraction]:
    """Parse a comma separated list of rationals, e.g. "0,1/2,3"."""
    items = [item for item in str(text).split(',') if item.strip()]
    if not items:
        raise ExactMathError(f"Empty vector: {text!r}")
    return [parse_rational(item) for item in items]


def format_rational(value: Number) -> str:
    """Render a rational as "p/q", or "p" when it is integral."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
