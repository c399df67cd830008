"""Closed-form solution of the qubit-qubit model.

Covers the complex decoherence factors r+/-, the coherence envelope eta(t),
the off-diagonal component functions f(t), g(t), the exact finite-step
recurrence, and the dissipation threshold above which coherence survives.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

OSCILLATORY = "oscillatory"
DEGENERATE = "degenerate"
OVERDAMPED = "overdamped"

_DEGENERATE_REL_TOL = 1e-12


class DegenerateBranchError(ValueError):
    """Requested a two-exponential form at the degenerate point r+ == r-."""


@dataclass(frozen=True)
class DecoherenceFactors:
    """Complex decay exponents of the coherence, with branch classification."""

    r_plus: complex
    r_minus: complex
    branch: str
    ln_x: float
    c: float


@dataclass(frozen=True)
class CoherenceCoefficients:
    u_f: complex
    v_f: complex
    u_g: complex
    v_g: complex


def log_rate(p: float, tau: float) -> float:
    """ln(1-p)/tau, the (nonpositive) log of the survival rate; -inf at p=1."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if tau <= 0:
        raise ValueError("tau must be positive")
    if p == 1.0:
        return -math.inf
    return math.log1p(-p) / tau


def threshold(c: float, tau: float) -> float:
    """Dissipation probability 1 - exp(-c tau) above which coherence is conserved."""
    if c <= 0 or tau <= 0:
        raise ValueError("c and tau must be positive")
    return -math.expm1(-c * tau)


def decoherence_factors(ln_x: float, c: float) -> DecoherenceFactors:
    """r+/- = -[ln x +/- sqrt((ln x)^2 - c^2)] / 2, principal square root.

    In the oscillatory regime (ln x)^2 < c^2 the root is +i sqrt(c^2 - (ln x)^2).
    """
    if not math.isfinite(ln_x):
        raise ValueError("ln_x must be finite; the p=1 limit is handled by eta()")
    if ln_x > 0:
        raise ValueError(f"ln_x must be <= 0, got {ln_x}")
    if c <= 0:
        raise ValueError("c must be positive")
    disc = ln_x * ln_x - c * c
    if abs(disc) <= _DEGENERATE_REL_TOL * c * c:
        r = -ln_x / 2.0
        return DecoherenceFactors(complex(r), complex(r), DEGENERATE, ln_x, c)
    if disc < 0:
        root = 1j * math.sqrt(-disc)
        return DecoherenceFactors(-(ln_x + root) / 2.0, -(ln_x - root) / 2.0, OSCILLATORY, ln_x, c)
    # overdamped: -(ln_x + root)/2 cancels when |ln_x| >> c; recover the small
    # root from the product r+ r- = c^2/4 (stable quadratic-root formula)
    r_minus = -(ln_x - math.sqrt(disc)) / 2.0
    r_plus = (c * c / 4.0) / r_minus
    return DecoherenceFactors(complex(r_plus), complex(r_minus), OVERDAMPED, ln_x, c)


def coefficients(b: complex, r: DecoherenceFactors) -> CoherenceCoefficients:
    """The four exponential coefficients fixed by the initial conditions."""
    if r.branch == DEGENERATE:
        raise DegenerateBranchError("coefficients are undefined at r+ == r-")
    rp, rm, c = r.r_plus, r.r_minus, r.c
    denom = 4.0 * (rp - rm)
    return CoherenceCoefficients(
        u_f=(1j * b * c - 2.0 * b * rm) / denom,
        v_f=(-1j * b * c + 2.0 * b * rp) / denom,
        u_g=(-1j * b * c - 2.0 * b * rm) / denom,
        v_g=(1j * b * c + 2.0 * b * rp) / denom,
    )


def eta(t: float, b: complex, r: DecoherenceFactors) -> complex:
    """Coherence envelope eta(t); eta(0) = b.

    The degenerate branch uses the confluent limit b (1 + (c/2) t) exp(-(c/2) t).
    """
    if t < 0:
        raise ValueError("t must be nonnegative")
    if r.branch == DEGENERATE:
        half_c = r.c / 2.0
        return b * (1.0 + half_c * t) * math.exp(-half_c * t)
    rp, rm = r.r_plus, r.r_minus
    return b * (-rm / (rp - rm) * cmath.exp(-rp * t) + rp / (rp - rm) * cmath.exp(-rm * t))


def eta_for(t: float, b: complex, p: float, tau: float, c: float) -> complex:
    """eta(t) parameterized by (p, tau, c); p=1 is the perfect-conservation limit."""
    if p == 1.0:
        if t < 0:
            raise ValueError("t must be nonnegative")
        return complex(b)
    return eta(t, b, decoherence_factors(log_rate(p, tau), c))


def f_g_closed(
    t: float, b: complex, r: DecoherenceFactors, coeffs: CoherenceCoefficients
) -> tuple[complex, complex]:
    """Continuum-limit f(t), g(t); f + g = eta and f(0) = g(0) = b/2."""
    if r.branch == DEGENERATE:
        raise DegenerateBranchError("use eta() for the degenerate branch")
    ep = cmath.exp(-r.r_plus * t)
    em = cmath.exp(-r.r_minus * t)
    return coeffs.u_f * ep + coeffs.v_f * em, coeffs.u_g * ep + coeffs.v_g * em


def recurrence_oracle(
    m_max: int, b: complex, c: float, dt: float, weight: float
) -> tuple[np.ndarray, np.ndarray]:
    """Exact finite-step sequences f_m, g_m for m = 0..m_max.

    ``weight`` is the per-step environment survival weight x^dt = (1-p)^(dt/tau).
    Iterates the coupled first-order system

        f_{m+1} = (1/2) e^{-ic dt/2} [(f_m + g_m) + w (f_m - g_m)]
        g_{m+1} = (1/2) e^{+ic dt/2} [(f_m + g_m) - w (f_m - g_m)]

    with f_0 = g_0 = b/2.
    """
    if m_max < 0:
        raise ValueError("m_max must be nonnegative")
    if dt <= 0:
        raise ValueError("dt must be positive")
    if not 0.0 <= weight <= 1.0:
        raise ValueError(f"weight must lie in [0, 1], got {weight}")
    phase = cmath.exp(-1j * c * dt / 2.0)
    f = np.empty(m_max + 1, dtype=complex)
    g = np.empty(m_max + 1, dtype=complex)
    f[0] = g[0] = b / 2.0
    fm, gm = f[0], g[0]
    for m in range(m_max):
        s = fm + gm
        d = weight * (fm - gm)
        fm = 0.5 * phase * (s + d)
        gm = 0.5 * phase.conjugate() * (s - d)
        f[m + 1] = fm
        g[m + 1] = gm
    return f, g
