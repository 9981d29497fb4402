"""
Exponential flag generating functions of the families Pi_{n-1}(k-1), n >= k.

Variables: x stands for x_1, s for x_2 + ... + x_ell (S = 1 + s) and y
marks n. The s-flag count of Pi_{n-1}(k-1) sits at x^{s_1} s^{s_ell - s_1} y^n
scaled by 1/((n - s_1)! n!), up to the multinomial spreading s^m over
x_2..x_ell.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from exactmath.numbers import InvalidChainError, binomial, factorial, multinomial, stirling2, validate_chain

from .series import (
    BiSeries, Caps, SeriesCapError, SeriesError, as_caps, exp_tail, exp_terms,
    series_divide_exact, series_pow, touchard_series,
)

logger = logging.getLogger(__name__)

DEFAULT_DX = 10
DEFAULT_DS = 6
DEFAULT_DY = 10


def _u(caps: Caps) -> BiSeries:
    """u = x y."""
    return BiSeries.monomial(caps, a=1, c=1)


def _s_block(caps: Caps, ell: int) -> BiSeries:
    """S = 1 + s, or 1 when there is no x_2..x_ell."""
    if ell == 1:
        return BiSeries.one(caps)
    return BiSeries({(0, 0, 0): 1, (0, 1, 0): 1}, caps)


def _v(caps: Caps) -> BiSeries:
    """(e^{xy} - 1)/x built termwise as sum_j x^{j-1} y^j / j!."""
    return BiSeries({(j - 1, 0, j): Fraction(1, factorial(j)) for j in range(1, caps.dy + 1)}, caps)


def _prefactor(k: int, i: int, caps: Caps) -> BiSeries:
    """
    u^i (e^u - E_{k-i-1}(u)) / (i! (e^u - 1)^{i+1}) at `caps`.

    The division strips (xy)^{i+1}, so it runs at caps widened by k.
    """
    work = Caps(caps.dx + k, caps.ds, caps.dy + k)
    u = _u(work)
    numerator = (series_pow(u, i) * exp_tail(u, k - i - 1)).scale(Fraction(1, factorial(i)))
    denominator = series_pow(exp_tail(u, 0), i + 1)
    quotient = series_divide_exact(numerator, denominator, (i + 1, 0, i + 1))
    return quotient.truncate(caps)


def _check_family(k: int, ell: int, caps: Caps) -> None:
    if not isinstance(k, int) or k < 1:
        raise SeriesError(f"Expected k >= 1, got {k!r}")
    if not isinstance(ell, int) or ell < 1:
        raise SeriesError(f"Expected ell >= 1, got {ell!r}")
    if caps.dy < k or caps.dx < k - 1:
        raise SeriesCapError(f"Caps {tuple(caps)} cannot hold the first member n = k = {k}")


def xi_series(k: int, ell: int, dx: int = DEFAULT_DX, ds: int = DEFAULT_DS, dy: int = DEFAULT_DY) -> BiSeries:
    """
    Exponential ell-flag generating function of Pi_{n-1}(k-1) over all n >= k.

    sum_{i<k} [u^i (e^u - E_{k-i-1}(u)) / (i! (e^u-1)^{i+1})] (e^W - E_i(W)) / S
    with u = xy, W = S (e^{xy} - 1)/x.

    k = 1 gives permutahedra_series: the OPP count degenerates to ordered
    partitions there.

    Raises:
        SeriesCapError: If the caps cannot hold n = k
    """
    caps = as_caps((dx, ds, dy))
    _check_family(k, ell, caps)
    logger.info(f"Building flag series for k={k}, ell={ell}, caps={tuple(caps)}")
    block = _s_block(caps, ell)
    powers = exp_terms(block * _v(caps))
    total = BiSeries.zero(caps)
    for i in range(k):
        tail = BiSeries({}, caps)
        for power in powers[i + 1:]:
            tail = tail + power
        total = total + _prefactor(k, i, caps) * tail
    return series_divide_exact(total, block)


def permutahedra_series(ell: int, dx: int = DEFAULT_DX, ds: int = DEFAULT_DS, dy: int = DEFAULT_DY) -> BiSeries:
    """(e^W - 1)/S: the standard permutahedra Pi_{n-1} for n >= 1, Pi_0 included."""
    caps = as_caps((dx, ds, dy))
    _check_family(1, ell, caps)
    block = _s_block(caps, ell)
    return series_divide_exact(exp_tail(block * _v(caps), 0), block)


def extract_flag_count(series: BiSeries, n: int, s: Sequence[int], ell: Optional[int] = None) -> int:
    """
    Read f_s of the n-th family member off a flag series.

    f_s = (n - s_1)! n! [x^{s_1} s^m y^n] multinomial(m; gaps of s) with m = s_ell - s_1.

    Raises:
        SeriesCapError: If the coefficient lies beyond the series caps
        SeriesError: On a bad chain or a non-integral count
    """
    try:
        s = validate_chain(s, n - 1)
    except InvalidChainError as e:
        raise SeriesError(str(e)) from e
    if ell is not None and len(s) != ell:
        raise SeriesError(f"Chain {list(s)} has length {len(s)}, expected ell={ell}")
    m = s[-1] - s[0]
    if n > series.caps.dy or s[0] > series.caps.dx or m > series.caps.ds:
        raise SeriesCapError(
            f"Coefficient x^{s[0]} s^{m} y^{n} lies beyond caps {tuple(series.caps)}"
        )
    gaps = [s[i] - s[i - 1] for i in range(1, len(s))]
    value = series.coefficient(s[0], m, n) * factorial(n - s[0]) * factorial(n) * multinomial(m, gaps)
    if value.denominator != 1:
        raise SeriesError(f"Extracted a non-integral count {value} for n={n}, s={list(s)}")
    return value.numerator


def _xy_caps(dx: int, dy: int) -> Caps:
    return as_caps((dx, 0, dy))


def g_component_series(k: int, i: int, dx: int = DEFAULT_DX, dy: int = DEFAULT_DY) -> BiSeries:
    """
    Closed form of the i-th summand in the (x, y) plane:
    y^i (e^y - E_{k-i-1}(y)) / (i! (e^y - 1)^{i+1}) * (e^{x(e^y-1)} - E_i(x(e^y-1))).
    """
    if not 0 <= i < k:
        raise SeriesError(f"Expected 0 <= i < k, got i={i}, k={k}")
    caps = _xy_caps(dx, dy)
    work = Caps(dx, 0, dy + i + 1)
    y = BiSeries.monomial(work, c=1)
    numerator = (series_pow(y, i) * exp_tail(y, k - i - 1)).scale(Fraction(1, factorial(i)))
    prefactor = series_divide_exact(numerator, series_pow(exp_tail(y, 0), i + 1), (0, 0, i + 1))
    t = BiSeries.monomial(caps, a=1) * exp_tail(BiSeries.monomial(caps, c=1), 0)
    return prefactor.truncate(caps) * exp_tail(t, i)


def g_component_direct(k: int, i: int, dx: int = DEFAULT_DX, dy: int = DEFAULT_DY) -> BiSeries:
    """
    The i-th summand as the combinatorial sum
    sum C(n,i) C(n-i,j) S(n-i-j,p) p! x^{i+p+1}/(i+p+1)! y^n/n! over j >= k-i.
    """
    if not 0 <= i < k:
        raise SeriesError(f"Expected 0 <= i < k, got i={i}, k={k}")
    caps = _xy_caps(dx, dy)
    terms = {}
    for n in range(i, dy + 1):
        for j in range(k - i, n - i + 1):
            rest = n - i - j
            for p in range(rest + 1):
                if i + p + 1 > dx:
                    break
                weight = binomial(n, i) * binomial(n - i, j) * stirling2(rest, p) * factorial(p)
                if weight:
                    key = (i + p + 1, 0, n)
                    terms[key] = terms.get(key, 0) + Fraction(weight, factorial(i + p + 1) * factorial(n))
    return BiSeries(terms, caps)


def alpha_series(dx: int = DEFAULT_DX, dy: int = DEFAULT_DY) -> BiSeries:
    """e^{x(e^y-1)} (e^y - 1), the x-derivative of the Touchard series."""
    caps = _xy_caps(dx, dy)
    return touchard_series(dx, dy) * exp_tail(BiSeries.monomial(caps, c=1), 0)


def alpha_q_series(q: int, dx: int = DEFAULT_DX, dy: int = DEFAULT_DY) -> BiSeries:
    """(y^q / q!) e^{x(e^y-1)}."""
    caps = _xy_caps(dx, dy)
    return BiSeries.monomial(caps, c=q, coefficient=Fraction(1, factorial(q))) * touchard_series(dx, dy)


def g_component_derivative_target(k: int, i: int, dx: int = DEFAULT_DX, dy: int = DEFAULT_DY) -> BiSeries:
    """(y^i / i!) (e^y - E_{k-i-1}(y)) e^{x(e^y-1)}: the (i+1)-th x-derivative of g_i."""
    caps = _xy_caps(dx, dy)
    y = BiSeries.monomial(caps, c=1)
    prefactor = (series_pow(y, i) * exp_tail(y, k - i - 1)).scale(Fraction(1, factorial(i)))
    return prefactor * touchard_series(dx, dy)


def coefficient_rows(series: BiSeries, k: int, ell: int) -> List[Tuple[int, int, int, int, int, int, int]]:
    """CSV rows (k, ell, a, b, c, numerator, denominator), sorted by exponent."""
    return [
        (k, ell, a, b, c, value.numerator, value.denominator)
        for (a, b, c), value in series.items()
    ]

