"""
Truncated trivariate power series with exact rational coefficients.

A BiSeries holds coefficients of x^a s^b y^c for a <= dx, b <= ds, c <= dy.
Every operation is exact on the terms it keeps: all exponents are
nonnegative, so a truncated product never misses a contribution below
the caps.
"""
import logging
from fractions import Fraction
from typing import Dict, Iterator, List, Mapping, NamedTuple, Tuple, Union

logger = logging.getLogger(__name__)

Exponent = Tuple[int, int, int]
Scalar = Union[int, Fraction]


class SeriesError(Exception):
    """Base exception for the series engine."""
    pass


class SeriesCapError(SeriesError):
    """Raised when caps differ or are too small for a request."""
    pass


class SeriesDivisionError(SeriesError):
    """Raised when an exact division by a monomial is impossible."""
    pass


class Caps(NamedTuple):
    dx: int
    ds: int
    dy: int

    def fits(self, exponent: Exponent) -> bool:
        a, b, c = exponent
        return 0 <= a <= self.dx and 0 <= b <= self.ds and 0 <= c <= self.dy

    def shrink(self, exponent: Exponent) -> 'Caps':
        return Caps(self.dx - exponent[0], self.ds - exponent[1], self.dy - exponent[2])


def as_caps(caps) -> Caps:
    caps = Caps(*caps)
    if any(not isinstance(cap, int) or cap < 0 for cap in caps):
        raise SeriesCapError(f"Caps must be non-negative integers, got {tuple(caps)}")
    return caps


class BiSeries:
    """Immutable truncated series in x, s, y."""

    __slots__ = ('_terms', 'caps')

    def __init__(self, terms: Mapping[Exponent, Scalar], caps):
        caps = as_caps(caps)
        self.caps = caps
        self._terms: Dict[Exponent, Fraction] = {
            tuple(e): Fraction(v) for e, v in terms.items() if v and caps.fits(tuple(e))
        }

    @classmethod
    def zero(cls, caps) -> 'BiSeries':
        return cls({}, caps)

    @classmethod
    def one(cls, caps) -> 'BiSeries':
        return cls({(0, 0, 0): 1}, caps)

    @classmethod
    def monomial(cls, caps, a: int = 0, b: int = 0, c: int = 0, coefficient: Scalar = 1) -> 'BiSeries':
        return cls({(a, b, c): coefficient}, caps)

    def coefficient(self, a: int, b: int, c: int) -> Fraction:
        if not self.caps.fits((a, b, c)):
            raise SeriesCapError(f"x^{a} s^{b} y^{c} lies beyond caps {tuple(self.caps)}")
        return self._terms.get((a, b, c), Fraction(0))

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """Nonzero terms, sorted by exponent."""
        return iter(sorted(self._terms.items()))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0, 0, 0), Fraction(0))

    def _check_caps(self, other: 'BiSeries') -> None:
        if self.caps != other.caps:
            raise SeriesCapError(f"Cap mismatch: {tuple(self.caps)} vs {tuple(other.caps)}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.caps == other.caps and self._terms == other._terms

    __hash__ = None

    def __add__(self, other: 'BiSeries') -> 'BiSeries':
        self._check_caps(other)
        terms = dict(self._terms)
        for e, v in other._terms.items():
            terms[e] = terms.get(e, 0) + v
        return BiSeries(terms, self.caps)

    def __neg__(self) -> 'BiSeries':
        return self.scale(-1)

    def __sub__(self, other: 'BiSeries') -> 'BiSeries':
        return self + (-other)

    def scale(self, factor: Scalar) -> 'BiSeries':
        factor = Fraction(factor)
        return BiSeries({e: v * factor for e, v in self._terms.items()}, self.caps)

    def __mul__(self, other: Union['BiSeries', Scalar]) -> 'BiSeries':
        if not isinstance(other, BiSeries):
            return self.scale(other)
        self._check_caps(other)
        dx, ds, dy = self.caps
        right = sorted(other._terms.items(), key=lambda item: item[0][2])
        terms: Dict[Exponent, Fraction] = {}
        for (a1, b1, c1), v1 in self._terms.items():
            for (a2, b2, c2), v2 in right:
                c = c1 + c2
                if c > dy:
                    break
                a = a1 + a2
                b = b1 + b2
                if a > dx or b > ds:
                    continue
                terms[(a, b, c)] = terms.get((a, b, c), 0) + v1 * v2
        return BiSeries(terms, self.caps)

    __rmul__ = __mul__

    def truncate(self, caps) -> 'BiSeries':
        """Drop terms beyond smaller caps; caps can never grow."""
        caps = as_caps(caps)
        if any(new > old for new, old in zip(caps, self.caps)):
            raise SeriesCapError(f"Cannot widen caps {tuple(self.caps)} to {tuple(caps)}")
        return BiSeries(self._terms, caps)

    def derivative_x(self) -> 'BiSeries':
        """d/dx; the x cap drops by one."""
        if self.caps.dx == 0:
            raise SeriesCapError("Cannot differentiate a series with x cap 0")
        terms = {(a - 1, b, c): v * a for (a, b, c), v in self._terms.items() if a > 0}
        return BiSeries(terms, Caps(self.caps.dx - 1, self.caps.ds, self.caps.dy))

    def integrate_x(self) -> 'BiSeries':
        """Integral in x with zero constant; the x cap grows by one."""
        terms = {(a + 1, b, c): v / (a + 1) for (a, b, c), v in self._terms.items()}
        return BiSeries(terms, Caps(self.caps.dx + 1, self.caps.ds, self.caps.dy))

    def __repr__(self) -> str:
        return f"BiSeries({len(self._terms)} terms, caps={tuple(self.caps)})"


def series_add(a: BiSeries, b: BiSeries) -> BiSeries:
    return a + b


def series_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    return a * b


def series_scale(a: BiSeries, factor: Scalar) -> BiSeries:
    return a.scale(factor)


def series_pow(a: BiSeries, m: int) -> BiSeries:
    if not isinstance(m, int) or m < 0:
        raise SeriesError(f"Exponent must be a non-negative integer, got {m!r}")
    result = BiSeries.one(a.caps)
    for _ in range(m):
        result = result * a
    return result


def exp_terms(a: BiSeries) -> List[BiSeries]:
    """
    [a^0/0!, a^1/1!, ...] up to the first power that vanishes at the caps.

    Raises:
        SeriesError: If a has a nonzero constant term
    """
    if a.constant_term:
        raise SeriesError(f"exp needs a zero constant term, got {a.constant_term}")
    terms = [BiSeries.one(a.caps)]
    j = 1
    while True:
        term = (terms[-1] * a).scale(Fraction(1, j))
        if not term:
            return terms
        terms.append(term)
        j += 1


def _sum(series: List[BiSeries], caps: Caps) -> BiSeries:
    total: Dict[Exponent, Fraction] = {}
    for item in series:
        for e, v in item.items():
            total[e] = total.get(e, 0) + v
    return BiSeries(total, caps)


def series_exp(a: BiSeries) -> BiSeries:
    """e^a for a with zero constant term; exp(0) = 1."""
    return _sum(exp_terms(a), a.caps)


def truncated_exp(m: int, a: BiSeries) -> BiSeries:
    """E_m(a) = sum_{j=0}^{m} a^j / j!."""
    if m < 0:
        return BiSeries.zero(a.caps)
    return _sum(exp_terms(a)[:m + 1], a.caps)


def exp_tail(a: BiSeries, m: int) -> BiSeries:
    """e^a - E_m(a), summed directly from the powers above m."""
    return _sum(exp_terms(a)[max(m + 1, 0):], a.caps)


def geometric_terms(h: BiSeries) -> List[BiSeries]:
    """[1, h, h^2, ...] until a power vanishes at the caps."""
    powers = [BiSeries.one(h.caps)]
    while True:
        term = powers[-1] * h
        if not term:
            return powers
        powers.append(term)


def unit_inverse(unit: BiSeries) -> BiSeries:
    """1/unit for a series with nonzero constant term."""
    c0 = unit.constant_term
    if not c0:
        raise SeriesDivisionError("Series without constant term is not a unit")
    h = BiSeries.one(unit.caps) - unit.scale(1 / c0)
    return _sum(geometric_terms(h), unit.caps).scale(1 / c0)


def series_divide_exact(num: BiSeries, den: BiSeries, monomial: Exponent = (0, 0, 0)) -> BiSeries:
    """
    num / den where den = x^a s^b y^c * unit.

    The monomial is factored out of both operands first, so the quotient
    is exact only up to caps reduced by (a, b, c); the result carries
    those reduced caps.

    Raises:
        SeriesCapError: If the operands' caps differ or the monomial exceeds them
        SeriesDivisionError: If the monomial does not divide num or den,
            or den / monomial is not a unit
    """
    num._check_caps(den)
    caps = num.caps.shrink(monomial)
    if min(caps) < 0:
        raise SeriesCapError(f"Monomial {monomial} exceeds caps {tuple(num.caps)}")
    quotients = []
    for name, series in (('numerator', num), ('denominator', den)):
        terms = {}
        for (a, b, c), v in series.items():
            shifted = (a - monomial[0], b - monomial[1], c - monomial[2])
            if min(shifted) < 0:
                raise SeriesDivisionError(
                    f"x^{monomial[0]} s^{monomial[1]} y^{monomial[2]} does not divide the {name} "
                    f"term x^{a} s^{b} y^{c}"
                )
            terms[shifted] = v
        quotients.append(BiSeries(terms, caps))
    reduced_num, unit = quotients
    logger.debug(f"Exact division by monomial {monomial}, caps {tuple(num.caps)} -> {tuple(caps)}")
    return reduced_num * unit_inverse(unit)


def touchard_series(dx: int, dy: int) -> BiSeries:
    """
    e^{x(e^y - 1)}: [x^k y^n] = S(n, k) / n!.

    Built in the (x, y) plane with s cap 0.
    """
    caps = as_caps((dx, 0, dy))
    y = BiSeries.monomial(caps, c=1)
    x = BiSeries.monomial(caps, a=1)
    return series_exp(x * exp_tail(y, 0))
