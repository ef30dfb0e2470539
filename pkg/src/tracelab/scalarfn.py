"""Scalar functions with closed-form values and derivatives.

Every function here is understood on t > 0 and carries an exact first
derivative, so the matrix functional calculus and the divided-difference
(Loewner) machinery never need numerical differentiation.  Values and
derivatives are vectorized over numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError

__all__ = [
    "ScalarFunction",
    "Power",
    "XLogX",
    "Log",
    "PowerPlusOneRoot",
    "WeightedPowerRoot",
    "PowerMixture",
    "LogMeanGenerator",
]


@dataclass(frozen=True)
class ScalarFunction:
    """Base class for scalar functions on the positive half line.

    Subclasses implement ``value`` and ``deriv`` elementwise.  The
    ``strict_domain`` flag marks functions that blow up at 0 (logarithms,
    negative powers); the functional calculus refuses spectra at or below
    the positivity floor for those.
    """

    strict_domain = False

    def value(self, t):
        raise NotImplementedError

    def deriv(self, t):
        raise NotImplementedError


@dataclass(frozen=True)
class Power(ScalarFunction):
    """t -> t**p."""

    p: float

    @property
    def strict_domain(self):
        return self.p < 0

    def value(self, t):
        return np.asarray(t, dtype=float) ** self.p

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        if self.p == 0:
            return np.zeros_like(t)
        return self.p * t ** (self.p - 1.0)


@dataclass(frozen=True)
class XLogX(ScalarFunction):
    """t -> t log t (natural logarithm)."""

    strict_domain = True

    def value(self, t):
        t = np.asarray(t, dtype=float)
        return t * np.log(t)

    def deriv(self, t):
        return np.log(np.asarray(t, dtype=float)) + 1.0


@dataclass(frozen=True)
class Log(ScalarFunction):
    """t -> log t (natural logarithm)."""

    strict_domain = True

    def value(self, t):
        return np.log(np.asarray(t, dtype=float))

    def deriv(self, t):
        return 1.0 / np.asarray(t, dtype=float)


@dataclass(frozen=True)
class PowerPlusOneRoot(ScalarFunction):
    """t -> (t**p + 1)**(1/p).

    Operator monotone for 0 < p <= 1 and operator convex for 1 <= p <= 2.
    The affine case p = 1 is returned exactly as t + 1.
    """

    p: float

    def __post_init__(self):
        if not 0.0 < self.p <= 2.0:
            raise ArgumentError(f"exponent p must lie in (0, 2], got {self.p}")

    def value(self, t):
        t = np.asarray(t, dtype=float)
        if self.p == 1.0:
            return t + 1.0
        return (t**self.p + 1.0) ** (1.0 / self.p)

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        if self.p == 1.0:
            return np.ones_like(t)
        return t ** (self.p - 1.0) * (t**self.p + 1.0) ** ((1.0 - self.p) / self.p)


@dataclass(frozen=True)
class WeightedPowerRoot(ScalarFunction):
    """t -> (w t**p + (1 - w))**(1/p) for a weight w in (0, 1).

    The power mean of t and 1 with weights (w, 1-w); shares the operator
    monotonicity / convexity regimes of PowerPlusOneRoot.
    """

    p: float
    weight: float

    def __post_init__(self):
        if not 0.0 < self.p <= 2.0:
            raise ArgumentError(f"exponent p must lie in (0, 2], got {self.p}")
        if not 0.0 < self.weight < 1.0:
            raise ArgumentError(f"weight must lie in (0, 1), got {self.weight}")

    def value(self, t):
        t = np.asarray(t, dtype=float)
        base = self.weight * t**self.p + (1.0 - self.weight)
        return base ** (1.0 / self.p)

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        base = self.weight * t**self.p + (1.0 - self.weight)
        return self.weight * t ** (self.p - 1.0) * base ** ((1.0 - self.p) / self.p)


@dataclass(frozen=True)
class PowerMixture(ScalarFunction):
    """t -> sum_k w_k t**(p_k) with w_k > 0 and p_k in [0, 1].

    A quadrature discretization of integrals of powers against a positive
    measure on [0, 1]; see ``lebesgue`` for the flat-measure mixture whose
    limit is (t - 1)/log t.
    """

    weights: tuple[float, ...]
    exponents: tuple[float, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.exponents) or not self.weights:
            raise ArgumentError("weights and exponents must be equal-length and nonempty")
        if any(w <= 0 for w in self.weights):
            raise ArgumentError("mixture weights must be positive")
        if any(not 0.0 <= p <= 1.0 for p in self.exponents):
            raise ArgumentError("mixture exponents must lie in [0, 1]")

    @classmethod
    def lebesgue(cls, nodes: int = 64) -> "PowerMixture":
        """Gauss-Legendre discretization of the flat measure dp on [0, 1]."""
        x, w = np.polynomial.legendre.leggauss(nodes)
        return cls(tuple(0.5 * w), tuple(0.5 * (x + 1.0)))

    def value(self, t):
        t = np.asarray(t, dtype=float)
        total = np.zeros_like(t)
        for w, p in zip(self.weights, self.exponents):
            total = total + w * t**p
        return total

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        total = np.zeros_like(t)
        for w, p in zip(self.weights, self.exponents):
            if p != 0.0:
                total = total + w * p * t ** (p - 1.0)
        return total


@dataclass(frozen=True)
class LogMeanGenerator(ScalarFunction):
    """t -> (t - 1)/log t, extended by 1 at t = 1.

    Equals the integral of t**p dp over [0, 1]; its perspective is the
    logarithmic mean.  A short series keeps values and derivatives stable
    near t = 1.
    """

    _SERIES_CUT = 1e-8

    def value(self, t):
        t = np.asarray(t, dtype=float)
        d = t - 1.0
        near = np.abs(d) < self._SERIES_CUT
        series = 1.0 + d / 2.0 - d * d / 12.0
        safe = np.where(near, 1.0, d)
        general = safe / np.log1p(safe)
        return np.where(near, series, general)

    def deriv(self, t):
        t = np.asarray(t, dtype=float)
        d = t - 1.0
        near = np.abs(d) < self._SERIES_CUT
        series = 0.5 - d / 6.0 + d * d / 8.0
        safe = np.where(near, 1.0, d)
        log_term = np.log1p(safe)
        general = (log_term - safe / (1.0 + safe)) / (log_term * log_term)
        return np.where(near, series, general)
