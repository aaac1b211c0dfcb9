"""Initial-state descriptions: oscillator amplitude distributions over Fock
states, the two-level environment mixture, coupling constants, and the full
system configuration consumed by the closed-form and oracle pipelines.

Oscillator amplitudes are real by convention; all constructors normalize and
freeze them. Times are measured in units of 1/lambda1 throughout.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    EmptyTimeGridError,
    FanoUndefinedError,
    InvalidProbabilityError,
    UnnormalizedDistributionError,
    ValidationError,
)

# Norm drift below this is treated as rounding and silently repaired;
# anything larger is a user error.
NORM_DRIFT_LIMIT = 1e-9


@dataclass(frozen=True)
class FockDistribution:
    """Real amplitudes B_0..B_cutoff of a pure oscillator state.

    The stored amplitudes always satisfy sum(B_n^2) == 1 to machine
    precision; construction repairs drift up to ``NORM_DRIFT_LIMIT`` and
    rejects anything worse.
    """

    amplitudes: np.ndarray

    def __post_init__(self):
        raw = np.asarray(self.amplitudes)
        if np.iscomplexobj(raw):
            raise ValidationError("amplitudes must be real")
        try:
            amps = raw.astype(float)
        except (TypeError, ValueError) as exc:
            raise ValidationError(f"amplitudes must be real numbers: {exc}") from exc
        if amps.ndim != 1 or amps.size == 0:
            raise ValidationError("amplitudes must be a non-empty 1-d sequence")
        if not np.all(np.isfinite(amps)):
            raise ValidationError("amplitudes must be finite")
        norm_sq = float(np.dot(amps, amps))
        if abs(norm_sq - 1.0) > NORM_DRIFT_LIMIT:
            raise UnnormalizedDistributionError(
                f"amplitude norm^2 = {norm_sq!r} differs from 1 by more than "
                f"{NORM_DRIFT_LIMIT}"
            )
        amps = amps / math.sqrt(norm_sq)
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def cutoff(self) -> int:
        """Highest Fock index carried by the distribution."""
        return self.amplitudes.size - 1

    def probabilities(self) -> np.ndarray:
        return self.amplitudes**2

    def mean_excitation(self) -> float:
        n = np.arange(self.amplitudes.size)
        return float(np.dot(n, self.probabilities()))

    def excitation_variance(self) -> float:
        n = np.arange(self.amplitudes.size)
        p = self.probabilities()
        mean = float(np.dot(n, p))
        return float(np.dot((n - mean) ** 2, p))


@dataclass(frozen=True)
class EnvironmentMixture:
    """Probability p that the environment qubit starts excited."""

    p: float

    def __post_init__(self):
        p = self.p
        if not (isinstance(p, (int, float)) and math.isfinite(p) and 0.0 <= p <= 1.0):
            raise InvalidProbabilityError(f"p = {p!r} must lie in [0, 1]")
        object.__setattr__(self, "p", float(p))


@dataclass(frozen=True)
class Couplings:
    """Qubit-oscillator coupling constants, in inverse-time units."""

    lambda1: float
    lambda2: float

    def __post_init__(self):
        for name in ("lambda1", "lambda2"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value)):
                raise ValidationError(f"{name} = {value!r} must be finite")
            if value < 0:
                raise ValidationError(f"{name} = {value!r} must be non-negative")
            object.__setattr__(self, name, float(value))


@dataclass(frozen=True)
class TimeGrid:
    """Uniform evaluation grid  t_start .. t_end  with n_points samples."""

    t_start: float
    t_end: float
    n_points: int

    def __post_init__(self):
        if not (math.isfinite(self.t_start) and math.isfinite(self.t_end)):
            raise EmptyTimeGridError("grid endpoints must be finite")
        if self.t_start < 0 or self.t_end <= self.t_start:
            raise EmptyTimeGridError(
                f"need t_end > t_start >= 0, got [{self.t_start}, {self.t_end}]"
            )
        if int(self.n_points) != self.n_points or self.n_points < 2:
            raise EmptyTimeGridError(f"n_points = {self.n_points!r} must be an integer >= 2")
        object.__setattr__(self, "t_start", float(self.t_start))
        object.__setattr__(self, "t_end", float(self.t_end))
        object.__setattr__(self, "n_points", int(self.n_points))

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.n_points)


@dataclass(frozen=True)
class SystemConfig:
    """Everything needed to evaluate one scenario: oscillator preparation,
    environment mixedness, couplings, and the time grid."""

    oscillator: FockDistribution
    env: EnvironmentMixture
    couplings: Couplings
    grid: TimeGrid

    def __post_init__(self):
        if self.couplings.lambda1 <= 0:
            raise ValidationError("lambda1 must be positive for a nontrivial scenario")


def number_state(n: int) -> FockDistribution:
    """Distribution with all weight on Fock state ``n``."""
    if int(n) != n or n < 0:
        raise ValidationError(f"number state index must be a non-negative integer, got {n!r}")
    amps = np.zeros(int(n) + 1)
    amps[int(n)] = 1.0
    return FockDistribution(amps)


def binomial_state(m: int, q: float) -> FockDistribution:
    """Binomially weighted superposition of Fock states 0..m.

    B_n = sqrt(C(m, n) q^n (1-q)^(m-n)).  Coefficients are assembled in
    log space so that m of a few hundred stays well conditioned.

    Parameters
    ----------
    m : int
        Maximum excitation number, >= 1.
    q : float
        Single-excitation probability in [0, 1].  q = 1 reduces exactly to
        ``number_state(m)`` and q = 0 to the vacuum.
    """
    if int(m) != m or m < 1:
        raise ValidationError(f"m must be a positive integer, got {m!r}")
    if not (isinstance(q, (int, float)) and math.isfinite(q) and 0.0 <= q <= 1.0):
        raise InvalidProbabilityError(f"q = {q!r} must lie in [0, 1]")
    m = int(m)
    if q == 0.0:
        return number_state(0)
    if q == 1.0:
        return number_state(m)
    n = np.arange(m + 1)
    log_binom = np.array(
        [math.lgamma(m + 1) - math.lgamma(m - k + 1) - math.lgamma(k + 1) for k in n]
    )
    log_p = log_binom + n * math.log(q) + (m - n) * math.log1p(-q)
    amps = np.exp(0.5 * log_p)
    return FockDistribution(amps / math.sqrt(float(np.dot(amps, amps))))


def fano_factor(dist: FockDistribution) -> float:
    """Excitation-number variance divided by its mean.

    Raises
    ------
    FanoUndefinedError
        For a vacuum-only distribution, where the mean excitation is zero.
    """
    mean = dist.mean_excitation()
    if mean == 0.0:
        raise FanoUndefinedError("Fano factor is undefined at zero mean excitation")
    return dist.excitation_variance() / mean


def validate(config: SystemConfig) -> SystemConfig:
    """Re-run every invariant check and return a clean configuration.

    Amplitude norm drift below ``NORM_DRIFT_LIMIT`` is repaired; anything
    larger raises ``UnnormalizedDistributionError``.  Probability and grid
    violations raise their specific errors.
    """
    return SystemConfig(
        oscillator=FockDistribution(np.array(config.oscillator.amplitudes)),
        env=EnvironmentMixture(config.env.p),
        couplings=Couplings(config.couplings.lambda1, config.couplings.lambda2),
        grid=TimeGrid(config.grid.t_start, config.grid.t_end, config.grid.n_points),
    )
