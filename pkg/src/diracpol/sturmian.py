"""Radial Dirac-Coulomb Sturmian functions at the planar ground-state energy
and the explicit symmetric series for the dipole channel integrals.

This module is the independent oracle for the closed-form channel integrals:
it sums the Sturmian expansion term by term from the closed first-order
radial integrals, and additionally re-derives those integrals by
Gauss-Laguerre quadrature of their defining integrands.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.special import roots_genlaguerre

from .atom import AtomSpec, ChannelIndex, GroundStateRadial, gamma_half, gamma_kappa, radial_PQ
from .specfun import ConvergenceError, SeriesDiagnostics, laguerre, log_gamma

# Accuracy floor of the series oracle; requests below it are clamped.
SERIES_TOL_FLOOR = 1e-12

_MAX_PAIRS = 100_000
_STOP_STREAK = 5


@dataclass(frozen=True)
class SturmianIndex:
    """Radial index n_r and channel of one Sturmian basis function.

    The kappa = -1/2 channel hosts the ground state itself and is excluded
    from the expansion.
    """

    n_r: int
    ch: ChannelIndex

    def __post_init__(self) -> None:
        if self.ch.kappa == -0.5:
            raise ValueError("the kappa = -1/2 channel is excluded from the expansion")


@dataclass(frozen=True)
class RadialIntegralPair:
    """First-order radial integrals of one Sturmian index: the plain overlap
    and its apparent-eigenvalue-weighted companion (atomic units)."""

    plain: float
    mu_weighted: float


def n_cap(idx: SturmianIndex, spec: AtomSpec) -> float:
    """Signed apparent principal quantum number N of a Sturmian function.

    Magnitude sqrt(n_r**2 + 2|n_r|*gamma_kappa + kappa**2); positive for
    n_r > 0, negative for n_r < 0, and N = -kappa when n_r = 0.
    """
    kappa = idx.ch.kappa
    n = abs(idx.n_r)
    if idx.n_r == 0:
        return -kappa
    gk = gamma_kappa(spec, idx.ch)
    mag = math.sqrt(n * n + 2.0 * n * gk + kappa * kappa)
    return mag if idx.n_r > 0 else -mag


def mu(idx: SturmianIndex, spec: AtomSpec) -> float:
    """Apparent charge-like eigenvalue of a Sturmian function at the
    ground-state energy: (|n_r| + gamma_kappa + N) / (gamma_{1/2} + 1/2)."""
    gk = gamma_kappa(spec, idx.ch)
    g = gamma_half(spec)
    return (abs(idx.n_r) + gk + n_cap(idx, spec)) / (g + 0.5)


def sturmian_ST(idx: SturmianIndex, spec: AtomSpec, r):
    """Sturmian radial doublet (S(r), T(r)) in atomic units.

    Both components share the envelope (4Zr)**gamma_kappa * exp(-2Zr) and a
    two-term Laguerre bracket; for n_r = 0 the bracket collapses to its
    L_0 term since L_{-1} is identically zero.
    """
    kappa = idx.ch.kappa
    n = abs(idx.n_r)
    z = spec.Z
    g = gamma_half(spec)
    gk = gamma_kappa(spec, idx.ch)
    nn = n_cap(idx, spec)

    rs = np.asarray(r, dtype=float)
    x = 4.0 * z * rs
    # sqrt((1 +- 2g) n! (n + 2 gk) / (4 Z N (N - kappa) Gamma(n + 2 gk)))
    lognorm = 0.5 * (
        log_gamma(n + 1.0)
        + math.log(n + 2.0 * gk)
        - math.log(4.0 * z)
        - math.log(nn * (nn - kappa))
        - log_gamma(n + 2.0 * gk)
    )
    envelope = np.exp(gk * np.log(x) - 0.5 * x + lognorm)
    low = laguerre(n - 1, 2.0 * gk, x)
    high = (nn - kappa) / (n + 2.0 * gk) * laguerre(n, 2.0 * gk, x)
    s = math.sqrt(1.0 + 2.0 * g) * envelope * (low - high)
    t = -math.sqrt(1.0 - 2.0 * g) * envelope * (low + high)
    return s, t


def _gamma_shift_ratio(d: float, n: int) -> tuple[float, float]:
    """Signed log of Gamma(n + d - 2) / Gamma(d - 1).

    For n >= 1 this is the rising product (d-1)(d)...(d+n-3); the product
    form is required when d - 1 <= 0 (the kappa = 1/2 channel), where naive
    Gamma evaluation would hit poles.  Returns (sign, log magnitude).
    """
    if n == 0:
        value = 1.0 / (d - 2.0)
        return math.copysign(1.0, value), -math.log(abs(d - 2.0))
    if d - 1.0 > 0.0:
        return 1.0, log_gamma(n + d - 2.0) - log_gamma(d - 1.0)
    sign = 1.0
    logmag = 0.0
    for j in range(n - 1):
        factor = d - 1.0 + j
        if factor == 0.0:
            return 0.0, -math.inf
        if factor < 0.0:
            sign = -sign
        logmag += math.log(abs(factor))
    return sign, logmag


def first_order_integral(idx: SturmianIndex, spec: AtomSpec) -> RadialIntegralPair:
    """Closed-form first-order radial integrals for a dipole channel.

    Returns the pair (integral of r (P S + Q T), integral of
    r (mu P S + Q T)) in atomic units.  Magnitudes are assembled in log
    space so that large |n_r| neither overflows nor loses the leading
    digits.
    """
    kappa = idx.ch.kappa
    if kappa not in (0.5, -1.5):
        raise ValueError(f"dipole channels are kappa = 1/2 and -3/2, got {kappa}")
    n = abs(idx.n_r)
    z = spec.Z
    g = gamma_half(spec)
    gk = gamma_kappa(spec, idx.ch)
    nn = n_cap(idx, spec)
    d = gk - g

    sign_r, log_r = _gamma_shift_ratio(d, n)
    if sign_r == 0.0:
        return RadialIntegralPair(0.0, 0.0)

    log_common = (
        log_gamma(gk + g + 2.0)
        - math.log(8.0 * z * z)
        - 0.5
        * (
            math.log(2.0)
            + log_gamma(n + 1.0)
            + math.log(nn * (nn - kappa))
            + log_gamma(2.0 * g + 1.0)
            + log_gamma(n + 2.0 * gk + 1.0)
        )
    )
    magnitude = sign_r * math.exp(log_common + log_r)

    linear = (n + d - 2.0) - 2.0 * g * (nn + kappa)
    plain = -(nn - kappa) * linear * magnitude

    if kappa == 0.5 and idx.n_r == 0:
        # Degenerate index: the weighted integrand is proportional to
        # mu*(1+2g) + (1-2g), which vanishes identically for every Z.
        return RadialIntegralPair(plain, 0.0)

    mu_val = mu(idx, spec)
    brace = (
        2.0 * g * (n + d - 2.0)
        - (nn + kappa)
        + (nn + 0.5) / (n + d) * linear
    )
    mu_weighted = -0.5 * (mu_val - 1.0) * (nn - kappa) * brace * magnitude
    return RadialIntegralPair(plain, mu_weighted)


@lru_cache(maxsize=64)
def _laguerre_rule(n_nodes: int, weight_power: float):
    nodes, weights = roots_genlaguerre(n_nodes, weight_power)
    return nodes, weights


def gauss_laguerre_integral(func, weight_power: float, scale: float, n_nodes: int = 200) -> float:
    """Integrate func over (0, inf) assuming func(r) behaves like
    (scale*r)**weight_power * exp(-scale*r) * smooth(scale*r).

    The smooth remainder is recovered in log space, so integrands may be
    evaluated in their natural (exponentially small) form.
    """
    x, w = _laguerre_rule(n_nodes, weight_power)
    r = x / scale
    fvals = np.asarray(func(r), dtype=float)
    signs = np.sign(fvals)
    with np.errstate(divide="ignore"):
        logrest = np.log(np.abs(fvals)) + x - weight_power * np.log(x)
    rest = np.where(signs == 0.0, 0.0, signs * np.exp(logrest))
    return math.fsum(w * rest) / scale


def first_order_integral_quadrature(
    idx: SturmianIndex, spec: AtomSpec, n_nodes: int = 200
) -> RadialIntegralPair:
    """First-order radial integrals by generalized Gauss-Laguerre quadrature
    of their defining integrands; the quadrature weight carries the exact
    power (4Zr)**(gamma_{1/2} + gamma_kappa + 1), so the remaining factor is
    a low-degree polynomial and the rule is exact up to rounding."""
    g = gamma_half(spec)
    gk = gamma_kappa(spec, idx.ch)
    ground = GroundStateRadial.from_spec(spec)
    mu_val = mu(idx, spec)

    def plain_integrand(r):
        p, q = radial_PQ(ground, r)
        s, t = sturmian_ST(idx, spec, r)
        return r * (p * s + q * t)

    def weighted_integrand(r):
        p, q = radial_PQ(ground, r)
        s, t = sturmian_ST(idx, spec, r)
        return r * (mu_val * p * s + q * t)

    power = g + gk + 1.0
    scale = 4.0 * spec.Z
    return RadialIntegralPair(
        gauss_laguerre_integral(plain_integrand, power, scale, n_nodes),
        gauss_laguerre_integral(weighted_integrand, power, scale, n_nodes),
    )


def _series_term(n_r: int, ch: ChannelIndex, spec: AtomSpec) -> float:
    idx = SturmianIndex(n_r, ch)
    pair = first_order_integral(idx, spec)
    if pair.plain == 0.0 and pair.mu_weighted == 0.0:
        return 0.0
    return pair.plain * pair.mu_weighted / (mu(idx, spec) - 1.0)


def r_channel_series(
    ch: ChannelIndex, spec: AtomSpec, tol: float = SERIES_TOL_FLOOR
) -> tuple[float, SeriesDiagnostics]:
    """Dipole channel integral R_kappa summed over the Sturmian expansion.

    Terms for n_r and -n_r are paired and accumulated symmetrically with
    compensated summation; the sum stops once the paired-term magnitude has
    stayed below tol * |sum| for several consecutive pairs and a power-law
    tail estimate also falls below it.

    Returns the channel integral in atomic units together with diagnostics.
    """
    if ch.kappa not in (0.5, -1.5):
        raise ValueError(f"dipole channels are kappa = 1/2 and -3/2, got {ch.kappa}")
    if not tol > 0.0:
        raise ValueError(f"tol must be positive, got {tol!r}")
    tol = max(tol, SERIES_TOL_FLOOR)

    pieces = [_series_term(0, ch, spec)]
    prev_pair = math.inf
    streak = 0
    for n in range(1, _MAX_PAIRS + 1):
        pair = _series_term(n, ch, spec) + _series_term(-n, ch, spec)
        pieces.append(pair)
        total = math.fsum(pieces)
        scale = max(abs(total), np.finfo(float).tiny)
        streak = streak + 1 if abs(pair) <= tol * scale else 0
        if streak >= _STOP_STREAK and n >= 10:
            tail = _pair_tail(abs(prev_pair), abs(pair), n)
            if tail <= tol * scale:
                return total, SeriesDiagnostics(2 * n + 1, tail / scale, True)
        prev_pair = pair
    raise ConvergenceError(
        f"Sturmian channel series did not reach tol={tol:g} within {_MAX_PAIRS} pairs"
    )


def _pair_tail(prev_mag: float, mag: float, n: int) -> float:
    """Power-law remainder estimate from the last two paired magnitudes."""
    if mag == 0.0:
        return 0.0
    if not prev_mag > mag:
        return math.inf
    decay = math.log(prev_mag / mag) / math.log(n / (n - 1.0))
    if decay <= 1.0:
        return math.inf
    return mag * n / (decay - 1.0)
