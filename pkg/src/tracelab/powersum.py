"""Two-variable power-sum trace functions and their variational bound.

The central object is (a, b) -> Tr (a**p + b**p)**(1/r), jointly concave
for 0 < p <= r <= 1 and jointly convex for r = p in [1, 2], together with
its stronger window-weighted form Tr K* (L_a**p + R_b**p)**(1/r) (K) and
the commuting-witness variational inequality

    Tr (a**p + b**p)**(1/p) <= Tr( x**((p-1)/p) a + (1-x)**((p-1)/p) b )

for 0 < p < 1 and any x with spectrum strictly inside (0, 1).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ArgumentError
from .linalg import apply_fn, as_positive, hermitian_part, random_unitary, spectrum
from .scalarfn import Power
from .superop import PowerSumRoot, trace_form

__all__ = [
    "PRParams",
    "trace_power_sum",
    "kweighted_power_sum",
    "scalar_variational",
    "variational_bound",
    "random_unit_interval_matrix",
]

_SPECTRUM_MARGIN = 1e-6


@dataclass(frozen=True)
class PRParams:
    """Exponent pair (p, r) with its convexity regime.

    The concave regime is 0 < p <= r <= 1; the convex regime is
    r = p in [1, 2].  The boundary point p = r = 1 (a linear functional)
    is classified as concave.
    """

    p: float
    r: float
    regime: str = field(init=False)

    def __post_init__(self):
        if 0.0 < self.p <= self.r <= 1.0:
            regime = "concave"
        elif self.p == self.r and 1.0 <= self.p <= 2.0:
            regime = "convex"
        else:
            raise ArgumentError(
                f"(p, r) = ({self.p}, {self.r}) is outside both regimes "
                "(0 < p <= r <= 1, or r = p in [1, 2])"
            )
        object.__setattr__(self, "regime", regime)


def trace_power_sum(a, b, params: PRParams) -> float:
    """Tr (a**p + b**p)**(1/r) for positive definite a, b."""
    a = as_positive(a)
    b = as_positive(b)
    if a.shape != b.shape:
        raise ArgumentError(f"shape mismatch: {a.shape} vs {b.shape}")
    power = Power(params.p)
    combined = apply_fn(power, a) + apply_fn(power, b)
    lam = spectrum(combined)
    return float(np.sum(lam ** (1.0 / params.r)))


def kweighted_power_sum(a, b, k, params: PRParams) -> float:
    """Tr K* (L_a**p + R_b**p)**(1/r) (K), the window-weighted form.

    Reduces to ``trace_power_sum`` when a and b commute and K = I.
    """
    return trace_form(PowerSumRoot(params.p, params.r), a, b, k)


def scalar_variational(x: float, y: float, lam: float, p: float) -> tuple[float, float]:
    """Scalar variational pair: lhs (x**p + y**p)**(1/p), rhs the bound.

    Returns (lhs, rhs) with rhs = lam**((p-1)/p) x + (1-lam)**((p-1)/p) y;
    rhs is minimized exactly at lam = x**p/(x**p + y**p), where the two
    sides agree.
    """
    if x <= 0 or y <= 0:
        raise ArgumentError(f"scalars must be positive, got ({x}, {y})")
    if not 0.0 < p < 1.0:
        raise ArgumentError(f"exponent p must lie in (0, 1), got {p}")
    if not 0.0 < lam < 1.0:
        raise ArgumentError(f"weight must lie in (0, 1), got {lam}")
    lhs = (x**p + y**p) ** (1.0 / p)
    expo = (p - 1.0) / p
    rhs = lam**expo * x + (1.0 - lam) ** expo * y
    return float(lhs), float(rhs)


def variational_bound(a, b, x, p: float) -> tuple[float, float]:
    """Matrix variational pair for 0 < p < 1.

    Returns (lhs, rhs) with lhs = Tr (a**p + b**p)**(1/p) and
    rhs = Tr( x**((p-1)/p) a + (1-x)**((p-1)/p) b ); lhs <= rhs for every
    x with spectrum strictly inside (0, 1), with equality when a and b
    commute and x = a**p (a**p + b**p)**(-1).
    """
    if not 0.0 < p < 1.0:
        raise ArgumentError(f"exponent p must lie in (0, 1), got {p}")
    a = as_positive(a)
    b = as_positive(b)
    x = hermitian_part(x)
    if a.shape != b.shape or a.shape != x.shape:
        raise ArgumentError("a, b, x must share one shape")
    lam = spectrum(x)
    if float(lam[0]) <= _SPECTRUM_MARGIN or float(lam[-1]) >= 1.0 - _SPECTRUM_MARGIN:
        raise ArgumentError(
            f"weight spectrum must stay inside ({_SPECTRUM_MARGIN}, "
            f"{1.0 - _SPECTRUM_MARGIN}), got range "
            f"[{float(lam[0]):.3e}, {float(lam[-1]):.6f}]"
        )
    lhs = trace_power_sum(a, b, PRParams(p, p))
    expo = (p - 1.0) / p
    weight_a = apply_fn(Power(expo), x)
    weight_b = apply_fn(Power(expo), hermitian_part(np.eye(x.shape[0]) - x))
    rhs = float(np.real(np.trace(weight_a @ a)) + np.real(np.trace(weight_b @ b)))
    return lhs, rhs


def random_unit_interval_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random Hermitian matrix with spectrum in (1e-3, 1 - 1e-3)."""
    if n < 1:
        raise ArgumentError(f"dimension must be >= 1, got {n}")
    lam = rng.uniform(1e-3, 1.0 - 1e-3, size=n)
    u = random_unitary(n, rng)
    return hermitian_part((u * lam) @ u.conj().T)
