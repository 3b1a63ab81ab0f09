"""Special-function kernels: log-gamma, gamma ratios, generalized Laguerre
polynomials, and the generalized hypergeometric 3F2 at unit argument.

All series are accumulated with error-free transformations (``math.fsum``
over exactly computed term blocks), targeting full double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Relative tolerance floor for series evaluation; requests below it are
# clamped since plain doubles cannot certify tighter results.
TOL_FLOOR = 1e-16

# Series longer than this raise ConvergenceError instead of returning silently.
MAX_TERMS = 200_000

_CHUNK = 512


class ConvergenceError(ArithmeticError):
    """A series failed to reach the requested tolerance within the term cap."""


@dataclass(frozen=True)
class SeriesDiagnostics:
    """Bookkeeping attached to every infinite-series evaluation.

    Attributes
    ----------
    terms_used : int
        Number of series terms accumulated.
    tail_estimate : float
        Estimated relative magnitude of the discarded tail.
    converged : bool
        True only if ``tail_estimate`` fell below the requested tolerance.
    """

    terms_used: int
    tail_estimate: float
    converged: bool


@dataclass(frozen=True)
class Hyp3F2Params:
    """Parameter set (a1, a2, a3; b1, b2) of a 3F2 series at unit argument.

    Denominator parameters must not be zero or a negative integer (poles of
    the defining series).  Convergence at unit argument additionally needs
    b1 + b2 - a1 - a2 - a3 > 0 unless a numerator parameter is a
    non-positive integer (truncating case); that is checked at evaluation.
    """

    a1: float
    a2: float
    a3: float
    b1: float
    b2: float

    def __post_init__(self) -> None:
        for name in ("b1", "b2"):
            b = getattr(self, name)
            if not math.isfinite(b):
                raise ValueError(f"{name} must be finite, got {b!r}")
            if b <= 0.0 and b == round(b):
                raise ValueError(
                    f"{name}={b} is a non-positive integer (pole of the series)"
                )
        for name in ("a1", "a2", "a3"):
            a = getattr(self, name)
            if not math.isfinite(a):
                raise ValueError(f"{name} must be finite, got {a!r}")

    @property
    def numerators(self) -> tuple[float, float, float]:
        return (self.a1, self.a2, self.a3)

    @property
    def denominators(self) -> tuple[float, float]:
        return (self.b1, self.b2)

    def balance(self) -> float:
        """Denominator excess b1 + b2 - a1 - a2 - a3 (positive: convergent)."""
        return math.fsum((self.b1, self.b2, -self.a1, -self.a2, -self.a3))

    def truncation_order(self) -> int | None:
        """Smallest n with some a_i = -n a non-positive integer, else None."""
        orders = [
            int(-a) for a in self.numerators if a <= 0.0 and a == round(a)
        ]
        return min(orders) if orders else None


# Taylor coefficients zeta(k)/k and (zeta(k)-1)/k for k = 2, 3, ..., frozen
# as correctly rounded doubles.  They drive series for ln Gamma around its
# zeros at 1 and 2, where library lgamma implementations lose relative
# accuracy.
_EULER = 0.5772156649015329
_ZETA_OVER_K = (
    0.8224670334241132, 0.40068563438653143, 0.27058080842778454, 0.20738555102867398,
    0.1695571769974082, 0.1440498967688461, 0.12550966952474304, 0.11133426586956469,
    0.1000994575127818, 0.09095401714582904, 0.083353840546109, 0.0769325164113522,
    0.07143294629536133, 0.06666870588242046, 0.06250095514121304, 0.058823978658684585,
    0.055555767627403614, 0.05263167937961666, 0.05000004769810169, 0.047619070330142226,
    0.04545455629320467, 0.04347826605304026, 0.04166666915034121, 0.04000000119214014,
    0.03846153903467518, 0.037037037312989324, 0.035714285847333355, 0.034482758684919304,
    0.03333333336437758, 0.03225806453115042, 0.03125000000727597, 0.030303030306558044,
    0.029411764707594344, 0.02857142857226011, 0.027777777778181998, 0.027027027027223673,
    0.02631578947377995, 0.025641025641072283, 0.025000000000022737, 0.024390243902450117,
    0.023809523809529224, 0.023255813953491015, 0.02272727272727402, 0.022222222222222855,
    0.021739130434782917, 0.021276595744681003, 0.02083333333333341, 0.02040816326530616,
    0.020000000000000018, 0.019607843137254912, 0.019230769230769235, 0.01886792452830189,
    0.01851851851851852, 0.01818181818181818, 0.017857142857142856, 0.017543859649122806,
    0.017241379310344827, 0.01694915254237288, 0.016666666666666666, 0.01639344262295082,
    0.016129032258064516, 0.015873015873015872, 0.015625, 0.015384615384615385,
)
_ZETA_M1_OVER_K = (
    0.3224670334241132, 0.0673523010531981, 0.020580808427784546, 0.007385551028673986,
    0.0028905103307415234, 0.001192753911703261, 0.0005096695247430425, 0.00022315475845357939,
    9.945751278180853e-05, 4.492623673813314e-05, 2.050721277567069e-05, 9.439488275268397e-06,
    4.374866789907488e-06, 2.039215753801366e-06, 9.55141213040742e-07, 4.492469198764566e-07,
    2.1207184805554665e-07, 1.0043224823968099e-07, 4.7698101693639804e-08, 2.2711094608943164e-08,
    1.0838659214896955e-08, 5.183475041970047e-09, 2.4836745438024785e-09, 1.1921401405860912e-09,
    5.731367241678862e-10, 2.7595228851242334e-10, 1.330476437424449e-10, 6.4229645638381e-11,
    3.1044247747322276e-11, 1.5021384080754142e-11, 7.275974480239079e-12, 3.527742476575915e-12,
    1.711991790559618e-12, 8.315385841420285e-13, 4.04220052528944e-13, 1.9664756310966165e-13,
    9.573630387838556e-14, 4.6640760264283744e-14, 2.2737369600659724e-14, 1.1091399470834522e-14,
    5.413659156725363e-15, 2.643880017860995e-15, 1.2918959062789966e-15, 6.315935504198448e-16,
    3.089316266963393e-16, 1.5117930628108198e-16, 7.40148685695232e-17, 3.625218048120654e-17,
    1.7763568421861633e-17, 8.70763157479179e-18, 4.270088559227004e-18, 2.0947604247944643e-18,
    1.0279842823787928e-18, 5.046468294792953e-19, 2.4781763945937917e-19, 1.2173498078147637e-19,
    5.981805089941246e-20, 2.9402092814365703e-20, 1.4456028966866556e-20, 7.109522442656805e-21,
    3.4974263628987415e-21, 1.7209558293559386e-21, 8.47032947258851e-22, 4.1700083557284137e-22,
)
# Asymptotic correction coefficients B_{2n} / (2n (2n-1)) of the Stirling
# series, enough terms for full precision at x >= 12.
_STIRLING = (
    0.08333333333333333,
    -0.002777777777777778,
    0.0007936507936507937,
    -0.0005952380952380953,
    0.0008417508417508417,
    -0.0019175269175269176,
    0.00641025641025641,
    -0.029550653594771242,
    0.17964437236883057,
)
_HALF_LOG_TWO_PI = 0.9189385332046728


def _lgamma_near_one(u: float) -> float:
    """ln Gamma(1 + u) for u in [-0.5, 0.5] by the zeta series."""
    terms = [-_EULER * u]
    power = u
    sign = 1.0
    for coeff in _ZETA_OVER_K:
        power *= u
        term = sign * coeff * power
        terms.append(term)
        if abs(term) < 1e-20:
            break
        sign = -sign
    return math.fsum(terms)


def _lgamma_near_two(v: float) -> float:
    """ln Gamma(2 + v) for v in [-0.5, 1] by the reduced zeta series."""
    terms = [(1.0 - _EULER) * v]
    power = v
    sign = 1.0
    for coeff in _ZETA_M1_OVER_K:
        power *= v
        term = sign * coeff * power
        terms.append(term)
        if abs(term) < 1e-20:
            break
        sign = -sign
    return math.fsum(terms)


def _lgamma_one_to_two(u: float) -> float:
    """ln Gamma(1 + u) for u in [0, 1]; u is the exactly shifted argument."""
    if u <= 0.5:
        return _lgamma_near_one(u)
    return _lgamma_near_two(u - 1.0)


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for positive real x, accurate to a few ulp
    relative error including the neighbourhoods of the zeros at 1 and 2."""
    if not x > 0.0:
        raise ValueError(f"log_gamma requires x > 0, got {x!r}")
    if x == 1.0 or x == 2.0:
        return 0.0
    if x < 1.0:
        # ln Gamma(x) = ln Gamma(1 + x) - ln x; both pieces shrink together
        # near x = 1, keeping the difference fully accurate.
        return _lgamma_one_to_two(x) - math.log(x)
    if x <= 2.0:
        return _lgamma_one_to_two(x - 1.0)
    if x <= 3.0:
        return _lgamma_near_two(x - 2.0)
    if x < 12.0:
        # Downward recurrence to (2, 3]; every piece is positive, so the
        # compensated sum keeps full relative accuracy.
        steps = int(x - 2.0)
        y = x - steps
        pieces = [_lgamma_near_two(y - 2.0)]
        pieces.extend(math.log(y + j) for j in range(steps))
        return math.fsum(pieces)
    # Stirling series with Bernoulli corrections.
    inv2 = 1.0 / (x * x)
    correction = 0.0
    power = 1.0 / x
    for coeff in _STIRLING:
        correction += coeff * power
        power *= inv2
    return math.fsum(
        [(x - 0.5) * math.log(x), -x, _HALF_LOG_TWO_PI, correction]
    )


def gamma_ratio(numerators, denominators) -> float:
    """Product of Gamma over ``numerators`` divided by Gamma over
    ``denominators``, formed through summed log-gamma differences so that
    no intermediate Gamma value is materialized.
    """
    logs = [log_gamma(x) for x in numerators]
    logs.extend(-log_gamma(x) for x in denominators)
    return math.exp(math.fsum(logs))


def laguerre(n: int, alpha: float, x):
    """Generalized Laguerre polynomial L_n^(alpha)(x) by the three-term
    recurrence, with L_{-1} defined to be identically zero.

    Parameters
    ----------
    n : int
        Degree, n >= -1.
    alpha : float
        Order parameter, alpha > -1.
    x : float or ndarray
        Evaluation point(s), x >= 0.

    Returns
    -------
    float or ndarray
        Polynomial value(s); scalar input yields a scalar.
    """
    if n < -1:
        raise ValueError(f"laguerre requires n >= -1, got n={n}")
    xs = np.asarray(x, dtype=float)
    scalar = xs.ndim == 0
    xs = np.atleast_1d(xs)
    if n == -1:
        out = np.zeros_like(xs)
    elif n == 0:
        out = np.ones_like(xs)
    else:
        prev = np.ones_like(xs)  # L_0
        cur = alpha + 1.0 - xs  # L_1
        for k in range(1, n):
            prev, cur = cur, ((2 * k + alpha + 1.0 - xs) * cur - (k + alpha) * prev) / (
                k + 1.0
            )
        out = cur
    return float(out[0]) if scalar else out


def _term_ratios(p: Hyp3F2Params, k: np.ndarray) -> np.ndarray:
    """Ratios t_{k+1}/t_k of the unit-argument series for the given k block."""
    return (
        (p.a1 + k)
        * (p.a2 + k)
        * (p.a3 + k)
        / ((p.b1 + k) * (p.b2 + k) * (1.0 + k))
    )


def _tail_bound(term: float, k: int, balance: float) -> float:
    """Power-law remainder estimate after the k-th term.

    Terms decay like k**(-balance-1); the integral bound gives
    |t_k| * k / (balance - 1).  For balance <= 1 the weaker |t_k| * k /
    balance is used (such series cannot reach tight tolerances anyway).
    """
    denom = balance - 1.0 if balance > 1.0 else balance
    return abs(term) * k / denom


def hyp3f2_unit(
    p: Hyp3F2Params, tol: float = TOL_FLOOR
) -> tuple[float, SeriesDiagnostics]:
    """Evaluate 3F2(a1, a2, a3; b1, b2; 1) by compensated direct summation.

    Parameters
    ----------
    p : Hyp3F2Params
        Series parameters; see the type's invariants.
    tol : float
        Requested relative accuracy, clamped to ``TOL_FLOOR``.

    Returns
    -------
    (float, SeriesDiagnostics)
        Series value and summation diagnostics.

    Raises
    ------
    ConvergenceError
        If the series does not converge (non-truncating with non-positive
        denominator excess) or needs more than ``MAX_TERMS`` terms.
    """
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    tol = max(tol, TOL_FLOOR)

    n_trunc = p.truncation_order()
    if n_trunc is not None:
        if n_trunc + 1 > MAX_TERMS:
            raise ConvergenceError(
                f"truncating series needs {n_trunc + 1} terms, cap is {MAX_TERMS}"
            )
        terms = np.empty(n_trunc + 1)
        terms[0] = 1.0
        if n_trunc > 0:
            k = np.arange(n_trunc, dtype=float)
            terms[1:] = np.cumprod(_term_ratios(p, k))
        value = math.fsum(terms)
        return value, SeriesDiagnostics(n_trunc + 1, 0.0, True)

    balance = p.balance()
    if balance <= 0.0:
        raise ConvergenceError(
            f"series diverges at unit argument: b-sum - a-sum = {balance} <= 0"
        )

    # All factors of the term ratio are positive beyond this index, which is
    # where the power-law tail estimate becomes trustworthy.
    k_safe = max(
        0.0, -p.a1, -p.a2, -p.a3, -p.b1, -p.b2
    )

    blocks: list[np.ndarray] = []
    block = np.array([1.0])
    blocks.append(block)
    approx = 1.0
    t_last = 1.0
    k0 = 1  # index of the next term to compute
    while k0 <= MAX_TERMS:
        k = np.arange(k0 - 1, k0 - 1 + _CHUNK, dtype=float)
        ratios = _term_ratios(p, k)
        block = t_last * np.cumprod(ratios)
        blocks.append(block)
        approx += float(block.sum())
        t_last = float(block[-1])
        k0 += _CHUNK
        if t_last == 0.0:
            break
        if k0 > k_safe + 2 and np.all(ratios > 0.0) and np.all(ratios < 1.0):
            tail = _tail_bound(t_last, k0, balance)
            if tail <= tol * max(abs(approx), np.finfo(float).tiny):
                break
    else:
        raise ConvergenceError(
            f"3F2 series did not reach tol={tol:g} within {MAX_TERMS} terms"
        )

    value = math.fsum(np.concatenate(blocks))
    scale = max(abs(value), np.finfo(float).tiny)
    tail_rel = 0.0 if t_last == 0.0 else _tail_bound(t_last, k0, balance) / scale
    return value, SeriesDiagnostics(k0, tail_rel, True)


def hyp3f2_contiguous_rhs(p: Hyp3F2Params, tol: float = TOL_FLOOR) -> float:
    """Evaluate the contiguous-shift identity for 3F2 at unit argument.

    Requires b1 = a3 + 1 exactly and b2 - a1 - a2 > -1.  The contiguous
    denominator is traded for a closed gamma-ratio term plus a 3F2 whose
    third numerator parameter is raised by one:

        3F2(a1,a2,a3; a3+1,b; 1) =
            G(b) G(b-a1-a2+1) / ((b-a3-1) G(b-a1) G(b-a2))
            - (a1-a3-1)(a2-a3-1) / ((a3+1)(b-a3-1))
              * 3F2(a1,a2,a3+1; a3+2,b; 1)

    Used both as an alternative evaluation path and as a consistency check
    against :func:`hyp3f2_unit`.
    """
    if p.b1 != p.a3 + 1.0:
        raise ValueError(
            f"contiguous form requires b1 = a3 + 1 exactly, got b1={p.b1}, a3={p.a3}"
        )
    b = p.b2
    if not b - p.a1 - p.a2 > -1.0:
        raise ValueError(
            f"contiguous form requires b2 - a1 - a2 > -1, got {b - p.a1 - p.a2}"
        )
    pole = b - p.a3 - 1.0
    if pole == 0.0:
        raise ValueError(
            "contiguous form is singular for b2 = a3 + 1 (removable only as a limit)"
        )
    closed = gamma_ratio([b, b - p.a1 - p.a2 + 1.0], [b - p.a1, b - p.a2]) / pole
    shifted = Hyp3F2Params(p.a1, p.a2, p.a3 + 1.0, p.a3 + 2.0, b)
    f_shift, _ = hyp3f2_unit(shifted, tol)
    coeff = (p.a1 - p.a3 - 1.0) * (p.a2 - p.a3 - 1.0) / ((p.a3 + 1.0) * pole)
    return closed - coeff * f_shift
