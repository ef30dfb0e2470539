"""Integral representation of (t**p + 1)**(1/p) and matrix-order samplers.

For 0 < p < 2 the function f(t) = (t**p + 1)**(1/p) admits the
representation

    f(t) = beta_p + t + integral_0^inf ( lam/(1+lam^2) - 1/(t+lam) ) h_p(lam) dlam

with the explicit density

    h_p(lam) = (1/pi) (1 + lam^(2p) + 2 lam^p cos(p pi))^(1/(2p)) sin A_p(lam, pi),
    A_p(r, theta) = (1/p) arg( r^p cos(p theta) + 1 + i r^p sin(p theta) ),

where arg is taken in [0, 2 pi).  The density is nonnegative for p < 1
(so f is operator monotone there), nonpositive for 1 < p < 2, and vanishes
identically at p = 1, where f is affine.  This module evaluates the
density, the offset beta_p, and the full reconstruction by quadrature, and
provides sampled matrix-order checks for monotonicity and convexity
claims.

Quadrature layout: the half line is split at ``split_point``; on the inner
part the substitution lam = v**(1/p) absorbs the lam**(p-1) endpoint
behavior, and on the outer part lam = y**(-1/p) does the same at infinity
(h_p(lam) ~ lam**p sin(p pi)/(p pi) near 0 and ~ c lam**(1-p) at
infinity).  Each part is integrated by Gauss-Legendre panels graded
geometrically toward the singular endpoint, doubling the panel count until
the estimate moves by less than ``target_rel_err``.
"""

from __future__ import annotations

import functools
import time
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, ConvergenceError
from .harness import MONOTONE, PropertyReport, _finish, _error_report
from .linalg import apply_fn, hermitian_part, make_rng, psd_increment, random_pd, spectrum
from .scalarfn import ScalarFunction
from .superop import DividedDiff

__all__ = [
    "QuadratureSpec",
    "DEFAULT_QUADRATURE",
    "branch_angle",
    "weight_density",
    "offset_constant",
    "integral_representation",
    "divided_difference_quadrature",
    "op_monotone_check",
    "op_convex_check",
]

_MAX_DOUBLINGS = 8
_PANEL_RATIO = 0.25
_EDGE_FLOOR = 1e-28


@dataclass(frozen=True)
class QuadratureSpec:
    """Panelled Gauss-Legendre configuration for the half-line integrals."""

    panels: int = 8
    nodes_per_panel: int = 20
    split_point: float = 1.0
    target_rel_err: float = 1e-10

    def __post_init__(self):
        if self.panels < 4:
            raise ArgumentError(f"panels must be >= 4, got {self.panels}")
        if self.nodes_per_panel < 8:
            raise ArgumentError(f"nodes_per_panel must be >= 8, got {self.nodes_per_panel}")
        if self.split_point <= 0:
            raise ArgumentError(f"split_point must be positive, got {self.split_point}")
        if self.target_rel_err < 1e-10:
            raise ArgumentError(
                f"target_rel_err must be >= 1e-10, got {self.target_rel_err}"
            )


DEFAULT_QUADRATURE = QuadratureSpec()


def _check_p(p: float) -> float:
    p = float(p)
    if not 0.0 < p < 2.0:
        raise ArgumentError(f"exponent p must lie in (0, 2), got {p}")
    return p


def branch_angle(r, theta: float, p: float):
    """A_p(r, theta) = (1/p) arg(r**p cos(p theta) + 1 + i r**p sin(p theta)).

    The argument is the one reached by continuing w(t) = r**p e**(i p t) + 1
    from w(0) > 0 along t in [0, theta]: the principal value, shifted by
    2 pi exactly when the path has crossed the negative real axis, which
    happens iff p theta > pi and r >= 1.  At theta = pi the angle lies in
    (0, pi) for 0 < p < 1; for 1 < p < 2 it is negative for r < 1 and lies
    in (pi, 2 pi)/p for r > 1, with sin(A_p) continuous across r = 1.
    """
    p = _check_p(p)
    if not 0.0 < theta <= np.pi:
        raise ArgumentError(f"theta must lie in (0, pi], got {theta}")
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0):
        raise ArgumentError("radius must be positive")
    w = r**p
    re = w * np.cos(p * theta) + 1.0
    im = w * np.sin(p * theta)
    ang = np.arctan2(im, re)
    ang = np.where((ang < 0) & (r >= 1.0), ang + 2.0 * np.pi, ang)
    return ang / p


def weight_density(lam, p: float):
    """Density h_p of the representing measure; identically 0 at p = 1."""
    p = _check_p(p)
    lam = np.asarray(lam, dtype=float)
    if np.any(lam <= 0):
        raise ArgumentError("the density is evaluated on lam > 0")
    if p == 1.0:
        return np.zeros_like(lam)
    w = lam**p
    modulus = (1.0 + w * w + 2.0 * w * np.cos(p * np.pi)) ** (1.0 / (2.0 * p))
    return modulus * np.sin(branch_angle(lam, np.pi, p)) / np.pi


def _gl_nodes(n: int):
    return np.polynomial.legendre.leggauss(n)


def _graded_edges(upper: float, panels: int) -> np.ndarray:
    """Panel edges on [0, upper], geometrically graded toward 0."""
    tail = upper * _PANEL_RATIO ** np.arange(panels - 1, -1, -1, dtype=float)
    tail = tail[tail >= upper * _EDGE_FLOOR]
    return np.concatenate([[0.0], tail])


def _panel_sum(fn, edges: np.ndarray, nodes: int) -> float:
    x, w = _gl_nodes(nodes)
    total = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        total += half * float(np.sum(w * fn(0.5 * (a + b) + half * x)))
    return total


def _refine(fn, upper: float, spec: QuadratureSpec) -> float:
    panels = spec.panels
    previous = None
    value = 0.0
    for _ in range(_MAX_DOUBLINGS + 1):
        value = _panel_sum(fn, _graded_edges(upper, panels), spec.nodes_per_panel)
        if previous is not None and abs(value - previous) <= spec.target_rel_err * (
            1.0 + abs(value)
        ):
            return value
        previous = value
        panels *= 2
    raise ConvergenceError(
        f"panel doubling stalled at {panels // 2} panels "
        f"(last change {abs(value - previous):.3e})"
    )


def _kernel(lam, t: float):
    """lam/(1+lam^2) - 1/(t+lam), combined to avoid cancellation."""
    return (lam * t - 1.0) / ((1.0 + lam * lam) * (t + lam))


def _rep_integral(t: float, p: float, spec: QuadratureSpec) -> float:
    """integral_0^inf kernel(lam, t) h_p(lam) dlam by graded quadrature."""
    inv_p = 1.0 / p

    def head(v):
        lam = np.maximum(v**inv_p, 1e-300)
        jac = np.minimum(inv_p * v ** (inv_p - 1.0), 1e300)
        return (_kernel(lam, t) * weight_density(lam, p)) * jac

    def tail(y):
        lam = np.minimum(y ** (-inv_p), 1e300)
        jac = np.minimum(inv_p * y ** (-inv_p - 1.0), 1e300)
        return (_kernel(lam, t) * weight_density(lam, p)) * jac

    inner = _refine(head, spec.split_point**p, spec)
    outer = _refine(tail, spec.split_point**-p, spec)
    return inner + outer


@functools.lru_cache(maxsize=256)
def _offset_cached(p: float, spec: QuadratureSpec) -> float:
    return 1.0 - _rep_integral(0.0, p, spec)


def offset_constant(p: float, spec: QuadratureSpec = DEFAULT_QUADRATURE) -> float:
    """Offset beta_p fixed by matching the representation at t = 0."""
    p = _check_p(p)
    if p == 1.0:
        return 1.0
    return _offset_cached(p, spec)


def integral_representation(
    t: float, p: float, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> float:
    """Reconstruct (t**p + 1)**(1/p) from the integral representation."""
    p = _check_p(p)
    t = float(t)
    if t < 0:
        raise ArgumentError(f"t must be nonnegative, got {t}")
    if p == 1.0:
        return 1.0 + t
    return offset_constant(p, spec) + t + _rep_integral(t, p, spec)


def divided_difference_quadrature(
    t: float, s: float, p: float, spec: QuadratureSpec = DEFAULT_QUADRATURE
) -> tuple[float, float]:
    """Both sides of the divided-difference identity

        (t - s)/(t**p - s**p)
            = (1/p) integral_0^1 (u t**p + (1-u) s**p)**((1-p)/p) du,

    returned as (closed form, quadrature).  The closed form uses the
    diagonal limit t**(1-p)/p when t and s coincide to within rounding.
    """
    if not 0.0 < p <= 1.0:
        raise ArgumentError(f"exponent p must lie in (0, 1], got {p}")
    if t <= 0 or s <= 0:
        raise ArgumentError(f"arguments must be positive, got ({t}, {s})")
    lhs = float(DividedDiff(p).value(t, s))
    tp, sp = t**p, s**p
    expo = (1.0 - p) / p

    def integrand(u):
        return (u * tp + (1.0 - u) * sp) ** expo

    x, w = _gl_nodes(spec.nodes_per_panel)
    edges = np.linspace(0.0, 1.0, spec.panels + 1)
    rhs = 0.0
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        rhs += half * float(np.sum(w * integrand(0.5 * (a + b) + half * x)))
    return lhs, rhs / p


def _matrix_order_violation(difference: np.ndarray) -> float:
    lam = spectrum(difference)
    low = float(lam[0])
    return -low / (1.0 + float(np.max(np.abs(lam))))


def op_monotone_check(
    f: ScalarFunction,
    n: int,
    trials: int,
    seed: int,
    tol: float = 1e-9,
    suite: str | None = None,
) -> PropertyReport:
    """Sampled check that a <= b implies f(a) <= f(b) in the matrix order.

    Trials draw a random positive definite base and add a PSD step of unit
    norm; the violation is the negative part of the smallest eigenvalue of
    f(base + step) - f(base), normalized by the spectral scale.
    """
    if trials < 1:
        raise ArgumentError(f"trials must be >= 1, got {trials}")
    suite = suite or f"operator-monotone:{f!r}"
    start = time.perf_counter()
    max_violation = -np.inf
    witness = None
    for trial in range(trials):
        rng = make_rng(seed, stream=trial)
        try:
            base = random_pd(n, rng)
            step = psd_increment(n, rng)
            bumped = hermitian_part(base + step)
            violation = _matrix_order_violation(apply_fn(f, bumped) - apply_fn(f, base))
        except Exception as exc:  # noqa: BLE001
            return _error_report(
                suite, MONOTONE, trials, n, seed, tol, start, trial, exc, {}
            )
        if violation > max_violation:
            max_violation = violation
            witness = {"trial": trial, "base": base, "step": step}
    return _finish(
        suite, MONOTONE, trials, n, seed, tol, start, float(max_violation), witness
    )


def op_convex_check(
    f: ScalarFunction,
    n: int,
    trials: int,
    seed: int,
    tol: float = 1e-9,
    suite: str | None = None,
) -> PropertyReport:
    """Sampled midpoint check of matrix convexity of f.

    The violation is the negative part of the smallest eigenvalue of
    (f(a) + f(b))/2 - f((a+b)/2) over random positive definite pairs.
    """
    if trials < 1:
        raise ArgumentError(f"trials must be >= 1, got {trials}")
    suite = suite or f"operator-convex:{f!r}"
    start = time.perf_counter()
    max_violation = -np.inf
    witness = None
    for trial in range(trials):
        rng = make_rng(seed, stream=trial)
        try:
            a = random_pd(n, rng)
            b = random_pd(n, rng)
            mid = hermitian_part(0.5 * (a + b))
            gap = 0.5 * (apply_fn(f, a) + apply_fn(f, b)) - apply_fn(f, mid)
            violation = _matrix_order_violation(gap)
        except Exception as exc:  # noqa: BLE001
            return _error_report(
                suite, "convex", trials, n, seed, tol, start, trial, exc, {}
            )
        if violation > max_violation:
            max_violation = violation
            witness = {"trial": trial, "left": a, "right": b}
    return _finish(
        suite, "convex", trials, n, seed, tol, start, float(max_violation), witness
    )
