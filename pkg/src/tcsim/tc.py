"""Exact closed-form dynamics of the resonant two-qubit/oscillator system.

Each total-excitation sector splits into four-level blocks

    |e1 e2 n>, |e1 g2 n+1>, |g1 e2 n+1>, |g1 g2 n+2>        (block index n)

whose frequencies come in two pairs +-d_plus, +-d_minus.  The propagator
column starting from |e1 e2 n> gives the "unprimed" coefficient quad; the
column starting from |e1 g2 n> lives in the block with index n-1 and gives
the "primed" quad.  From the quads, the reduced single-qubit populations
(alpha, beta) and coherence (gamma) assemble the linear entropy

    zeta = 1 - (alpha^2 + beta^2 + 2 |gamma|^2).

All spectral quantities below are evaluated in cancellation-free form so the
degenerate limits (equal couplings, decoupled environment, block index -1)
come out exact rather than within sqrt(eps).  The resolved coefficient
formulas and the tests pinning them are documented in RESOLVED_EQUATIONS.md.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeDiscriminantError, ValidationError
from .series import TimeSeries
from .states import Couplings, FockDistribution, SystemConfig

__all__ = [
    "SpectralParams",
    "CoefficientQuad",
    "EntropyTerms",
    "spectral_params",
    "tc_coefficients",
    "tc_coefficients_primed",
    "entropy_terms",
    "entropy_term_arrays",
    "linear_entropy",
    "entropy_series",
    "mixture_entropy_arrays",
    "frequency_content",
]


@dataclass(frozen=True)
class SpectralParams:
    """Spectral data of the four-level block with index ``n``.

    ``D`` is the square root of the discriminant separating the two
    frequency pairs; ``d_plus >= d_minus >= 0`` are the block frequencies;
    ``a_plus/a_minus`` and ``b_plus/b_minus`` are the associated spectral
    weights.  Exact identities: a_plus + a_minus = b_plus + b_minus = 2 D.
    """

    n: int
    D: float
    d_plus: float
    d_minus: float
    a_plus: float
    a_minus: float
    b_plus: float
    b_minus: float


@dataclass(frozen=True)
class CoefficientQuad:
    """The four amplitudes of one evolution branch at given time(s).

    Unprimed (``primed=False``): amplitudes of |e1 e2 n>, |e1 g2 n+1>,
    |g1 e2 n+1>, |g1 g2 n+2> starting from |e1 e2 n>.
    Primed (``primed=True``): amplitudes of |e1 e2 n-1>, |e1 g2 n>,
    |g1 e2 n>, |g1 g2 n+1> starting from |e1 g2 n>.

    Fields are complex scalars or complex arrays, matching the ``t``
    argument of the constructor operation.
    """

    c1: complex | np.ndarray
    c2: complex | np.ndarray
    c3: complex | np.ndarray
    c4: complex | np.ndarray
    primed: bool

    def norm_sq(self):
        return (
            np.abs(self.c1) ** 2
            + np.abs(self.c2) ** 2
            + np.abs(self.c3) ** 2
            + np.abs(self.c4) ** 2
        )


@dataclass(frozen=True)
class EntropyTerms:
    """Reduced system-qubit matrix elements: ground population ``alpha``,
    excited population ``beta`` (alpha + beta = 1), and the coherence
    ``gamma`` with |gamma| <= 1/2."""

    alpha: float
    beta: float
    gamma: complex


def spectral_params(n: int, couplings: Couplings) -> SpectralParams:
    """Spectral parameters of the block with index ``n`` (n >= -1).

    Index -1 only arises for the primed branch at oscillator index 0, where
    the top block level does not exist; there D = lambda1^2 + lambda2^2 and
    d_minus = 0 exactly.

    All quantities are computed through product identities rather than
    differences of near-equal terms:

        D^2        = (l1^2 - l2^2)^2 + 4 (2n+3)^2 l1^2 l2^2
        d_minus^2  = 2 (n+1)(n+2) (l1^2 - l2^2)^2 / ((2n+3) s + D)
        a_minus    = 16 l1^2 l2^2 (n+1)(n+2) / a_plus
        b_-+       = 4 (2n+3)^2 l1^2 l2^2 / b_+-

    with s = l1^2 + l2^2, so equal couplings give d_minus = 0 exactly and a
    decoupled environment gives a_minus = b_minus = 0 exactly.
    """
    if int(n) != n or n < -1:
        raise ValidationError(f"block index must be an integer >= -1, got {n!r}")
    n = int(n)
    l1, l2 = couplings.lambda1, couplings.lambda2
    s = l1 * l1 + l2 * l2
    r = l1 * l1 - l2 * l2
    k = 2 * n + 3
    cross = 4.0 * (k * l1 * l2) ** 2
    d_sq = r * r + cross
    if d_sq < 0:  # unreachable for real couplings; kept as a hard guard
        raise NegativeDiscriminantError(f"discriminant {d_sq!r} is negative")
    big_d = math.sqrt(d_sq)
    if big_d == 0.0:
        return SpectralParams(n, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0)
    denom = k * s + big_d
    d_plus = math.sqrt(0.5 * denom)
    d_minus = math.sqrt(2.0 * (n + 1) * (n + 2) * r * r / denom)
    a_plus = big_d + s
    a_minus = 16.0 * (l1 * l2) ** 2 * (n + 1) * (n + 2) / a_plus
    if r >= 0:
        b_plus = big_d + r
        b_minus = cross / b_plus
    else:
        b_minus = big_d - r
        b_plus = cross / b_minus
    return SpectralParams(n, big_d, d_plus, d_minus, a_plus, a_minus, b_plus, b_minus)


def _sin_over_freq(freq: float, t: np.ndarray) -> np.ndarray:
    # sin(freq * t) / freq, continued to t at freq == 0
    return t * np.sinc(freq * t / np.pi)


def _check_times(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ValidationError("times must be non-negative")
    return t


def _quad_unprimed_arrays(n: int, couplings: Couplings, t: np.ndarray):
    """Propagator column starting from |e1 e2 n| in block ``n``."""
    sp = spectral_params(n, couplings)
    l1, l2 = couplings.lambda1, couplings.lambda2
    if sp.D == 0.0:  # both couplings zero: nothing moves
        one = np.ones_like(t, dtype=complex)
        zero = np.zeros_like(t, dtype=complex)
        return one, zero.copy(), zero.copy(), zero.copy()
    x = math.sqrt(n + 1.0)
    y = math.sqrt(n + 2.0)
    cos_p = np.cos(sp.d_plus * t)
    cos_m = np.cos(sp.d_minus * t)
    sin_p = _sin_over_freq(sp.d_plus, t)
    sin_m = _sin_over_freq(sp.d_minus, t)
    inv2d = 0.5 / sp.D
    c1 = (sp.a_minus * cos_p + sp.a_plus * cos_m) * inv2d + 0j
    c4 = (2.0 * l1 * l2 * x * y / sp.D) * (cos_p - cos_m) + 0j
    c2 = -1j * inv2d * (
        (l2 * x * sp.a_minus + 4.0 * l1 * l1 * l2 * x * y * y) * sin_p
        + (l2 * x * sp.a_plus - 4.0 * l1 * l1 * l2 * x * y * y) * sin_m
    )
    c3 = -1j * inv2d * (
        (l1 * x * sp.a_minus + 4.0 * l1 * l2 * l2 * x * y * y) * sin_p
        + (l1 * x * sp.a_plus - 4.0 * l1 * l2 * l2 * x * y * y) * sin_m
    )
    return c1, c2, c3, c4


def _quad_primed_arrays(n: int, couplings: Couplings, t: np.ndarray):
    """Propagator column starting from |e1 g2 n|, living in block ``n - 1``.

    At n = 0 the block index is -1: the |e1 e2 -1> level does not exist and
    its amplitude vanishes identically because the x = sqrt(n) prefactor is
    zero, with d_minus = 0 enforcing the same degeneracy spectrally.
    """
    m = n - 1
    sp = spectral_params(m, couplings)
    l1, l2 = couplings.lambda1, couplings.lambda2
    if sp.D == 0.0:
        one = np.ones_like(t, dtype=complex)
        zero = np.zeros_like(t, dtype=complex)
        return zero.copy(), one, zero.copy(), zero.copy()
    x = math.sqrt(m + 1.0)  # sqrt(n)
    y = math.sqrt(m + 2.0)  # sqrt(n + 1)
    ssum = x * x + y * y  # 2n + 1
    cos_p = np.cos(sp.d_plus * t)
    cos_m = np.cos(sp.d_minus * t)
    sin_p = _sin_over_freq(sp.d_plus, t)
    sin_m = _sin_over_freq(sp.d_minus, t)
    inv2d = 0.5 / sp.D
    c2 = (sp.b_plus * cos_p + sp.b_minus * cos_m) * inv2d + 0j
    c3 = (l1 * l2 * ssum / sp.D) * (cos_p - cos_m) + 0j
    c1 = -1j * inv2d * (
        (l2 * x * sp.b_plus + 2.0 * l1 * l1 * l2 * x * ssum) * sin_p
        + (l2 * x * sp.b_minus - 2.0 * l1 * l1 * l2 * x * ssum) * sin_m
    )
    c4 = -1j * inv2d * (
        (l1 * y * sp.b_plus + 2.0 * l1 * l2 * l2 * y * ssum) * sin_p
        + (l1 * y * sp.b_minus - 2.0 * l1 * l2 * l2 * y * ssum) * sin_m
    )
    return c1, c2, c3, c4


def tc_coefficients(n: int, couplings: Couplings, t) -> CoefficientQuad:
    """Unprimed coefficient quad at oscillator index ``n`` (environment
    qubit initially excited).  ``t`` may be a scalar or an array; the quad
    has unit norm at every time."""
    if int(n) != n or n < 0:
        raise ValidationError(f"oscillator index must be a non-negative integer, got {n!r}")
    t_arr = _check_times(t)
    c1, c2, c3, c4 = _quad_unprimed_arrays(int(n), couplings, np.atleast_1d(t_arr))
    if t_arr.ndim == 0:
        return CoefficientQuad(complex(c1[0]), complex(c2[0]), complex(c3[0]), complex(c4[0]), primed=False)
    return CoefficientQuad(c1, c2, c3, c4, primed=False)


def tc_coefficients_primed(n: int, couplings: Couplings, t) -> CoefficientQuad:
    """Primed coefficient quad at oscillator index ``n`` (environment qubit
    initially in its ground state).  ``c1`` is identically zero at n = 0."""
    if int(n) != n or n < 0:
        raise ValidationError(f"oscillator index must be a non-negative integer, got {n!r}")
    t_arr = _check_times(t)
    c1, c2, c3, c4 = _quad_primed_arrays(int(n), couplings, np.atleast_1d(t_arr))
    if t_arr.ndim == 0:
        return CoefficientQuad(complex(c1[0]), complex(c2[0]), complex(c3[0]), complex(c4[0]), primed=True)
    return CoefficientQuad(c1, c2, c3, c4, primed=True)


def _term_arrays(dist: FockDistribution, p: float, couplings: Couplings, t: np.ndarray):
    """alpha(t), beta(t), gamma(t) summed over the distribution's support.

    alpha and beta run over n = 0..cutoff; gamma couples neighbouring Fock
    components and runs over n = 0..cutoff-1.
    """
    amps = dist.amplitudes
    ncut = dist.cutoff
    needed = [n for n in range(ncut + 1) if amps[n] != 0.0]
    quads = {n: _quad_unprimed_arrays(n, couplings, t) for n in needed}
    quads_p = {n: _quad_primed_arrays(n, couplings, t) for n in needed}
    alpha = np.zeros_like(t)
    beta = np.zeros_like(t)
    gamma = np.zeros_like(t, dtype=complex)
    for n in needed:
        w = amps[n] ** 2
        c1, c2, c3, c4 = quads[n]
        k1, k2, k3, k4 = quads_p[n]
        alpha += w * (
            p * (np.abs(c3) ** 2 + np.abs(c4) ** 2)
            + (1.0 - p) * (np.abs(k3) ** 2 + np.abs(k4) ** 2)
        )
        beta += w * (
            p * (np.abs(c1) ** 2 + np.abs(c2) ** 2)
            + (1.0 - p) * (np.abs(k1) ** 2 + np.abs(k2) ** 2)
        )
        if n < ncut and amps[n + 1] != 0.0:
            w2 = amps[n] * amps[n + 1]
            d1, d2, d3, d4 = quads[n + 1]
            e1, e2, e3, e4 = quads_p[n + 1]
            gamma += w2 * (
                p * (c4 * d2.conj() + c3 * d1.conj())
                + (1.0 - p) * (k4 * e2.conj() + k3 * e1.conj())
            )
    return alpha, beta, gamma


def entropy_term_arrays(config: SystemConfig, t) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Vectorized (alpha, beta, gamma) over an array of times."""
    t = np.atleast_1d(_check_times(t))
    return _term_arrays(config.oscillator, config.env.p, config.couplings, t)


def entropy_terms(config: SystemConfig, t: float) -> EntropyTerms:
    """Reduced-qubit populations and coherence at a single time."""
    alpha, beta, gamma = entropy_term_arrays(config, [float(t)])
    return EntropyTerms(alpha=float(alpha[0]), beta=float(beta[0]), gamma=complex(gamma[0]))


def _zeta_from_terms(alpha, beta, gamma):
    zeta = 1.0 - alpha**2 - beta**2 - 2.0 * np.abs(gamma) ** 2
    # rounding can land an ulp outside the mathematical range [0, 1/2]
    return np.clip(zeta, 0.0, 0.5)


def linear_entropy(config: SystemConfig, t):
    """Linear entropy of the system qubit at time(s) ``t``; always in
    [0, 0.5].  Reduces to the single-branch closed form when the
    environment coupling vanishes."""
    t_arr = _check_times(t)
    alpha, beta, gamma = entropy_term_arrays(config, np.atleast_1d(t_arr))
    zeta = _zeta_from_terms(alpha, beta, gamma)
    return zeta if t_arr.ndim else float(zeta[0])


def entropy_series(config: SystemConfig) -> TimeSeries:
    """Linear entropy evaluated over the configuration's time grid."""
    times = config.grid.times()
    alpha, beta, gamma = entropy_term_arrays(config, times)
    return TimeSeries(times, _zeta_from_terms(alpha, beta, gamma))


def mixture_entropy_arrays(
    components, env_p: float, couplings: Couplings, t
) -> np.ndarray:
    """Linear entropy for an oscillator prepared in a statistical mixture.

    ``components`` is a sequence of (weight, FockDistribution) pairs whose
    weights sum to 1.  The reduced-qubit terms mix convexly component by
    component before the entropy is formed.
    """
    t = np.atleast_1d(_check_times(t))
    weights = np.array([w for w, _ in components], dtype=float)
    if np.any(weights < 0) or abs(weights.sum() - 1.0) > 1e-12:
        raise ValidationError("mixture weights must be non-negative and sum to 1")
    alpha = np.zeros_like(t)
    beta = np.zeros_like(t)
    gamma = np.zeros_like(t, dtype=complex)
    for weight, dist in components:
        if weight == 0.0:
            continue
        a, b, g = _term_arrays(dist, env_p, couplings, t)
        alpha += weight * a
        beta += weight * b
        gamma += weight * g
    return _zeta_from_terms(alpha, beta, gamma)


def branch_frequencies(dist: FockDistribution, couplings: Couplings) -> np.ndarray:
    """Sorted unique block frequencies {d_plus, d_minus} of both evolution
    branches over the distribution's support."""
    freqs = set()
    for n in range(dist.cutoff + 1):
        if dist.amplitudes[n] == 0.0:
            continue
        for idx in (n, n - 1):
            sp = spectral_params(idx, couplings)
            freqs.add(sp.d_plus)
            freqs.add(sp.d_minus)
    return np.array(sorted(freqs))


def frequency_content(
    dist: FockDistribution, couplings: Couplings, max_base: int = 40
) -> np.ndarray:
    """Predicted discrete frequencies of the entropy signal.

    The coefficient quads oscillate at the branch frequencies; their squared
    magnitudes (the populations) therefore contain all pairwise sums and
    differences of those, and the entropy, quadratic in the populations,
    contains pairwise sums and differences taken once more.  The returned
    array is that two-level closure, sorted and deduplicated.

    ``max_base`` caps the branch-frequency count; the closure grows with its
    fourth power and is only meaningful for small supports.
    """
    base = branch_frequencies(dist, couplings)
    if base.size > max_base:
        raise ValidationError(
            f"support yields {base.size} branch frequencies; "
            f"frequency_content is limited to {max_base}"
        )
    level1 = np.concatenate([np.add.outer(base, base).ravel(),
                             np.abs(np.subtract.outer(base, base)).ravel()])
    level1 = np.unique(np.round(level1, 12))
    level2 = np.concatenate([np.add.outer(level1, level1).ravel(),
                             np.abs(np.subtract.outer(level1, level1)).ravel()])
    return np.unique(np.round(level2, 12))
