"""Frechet differentials of matrix functions via Loewner matrices.

In the eigenbasis of a Hermitian x = U diag(lam) U*, the differential of
t -> f(t) acts entrywise:

    df(x)(h) = U [ (U* h U) o L ] U*,

where L_ij is the divided difference (f(lam_i) - f(lam_j))/(lam_i - lam_j)
with f'(lam_i) on the diagonal.  Quadratic forms Tr h df(x)(h) and their
inverses follow by Hadamard-weighting |U* h U|^2 with L or 1/L.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, SingularityError
from .linalg import as_positive, eigh, hermitian_part
from .scalarfn import PowerMixture, ScalarFunction
from .superop import DividedDiff, LogMean, trace_form

__all__ = [
    "LoewnerMatrix",
    "loewner",
    "frechet_diff",
    "frechet_inv",
    "quad_form",
    "quad_form_inv",
    "logmean_quad_form",
    "divided_diff_trace",
    "power_mixture_quad_form",
]

_CLUSTER_TOL = 1e-7
_PINCH_TOL = 1e-15


@dataclass(frozen=True)
class LoewnerMatrix:
    """Divided-difference table of f on a spectrum."""

    entries: np.ndarray
    spectrum: np.ndarray


def loewner(f: ScalarFunction, lam) -> LoewnerMatrix:
    """Loewner matrix of f on the given (positive) spectrum.

    Pairs within 1e-7 relative distance are treated as clustered and take
    the derivative at their midpoint; the diagonal is f'(lam_i).
    """
    lam = np.asarray(lam, dtype=float)
    if lam.ndim != 1 or lam.size < 1:
        raise ArgumentError("spectrum must be a nonempty vector")
    t = lam[:, None]
    s = lam[None, :]
    near = np.abs(t - s) <= _CLUSTER_TOL * np.maximum(np.abs(t), np.abs(s))
    mid = 0.5 * (t + s)
    derivative = f.deriv(mid)
    t_safe = np.where(near, 2.0, t)
    s_safe = np.where(near, 1.0, s)
    quotient = (f.value(t_safe) - f.value(s_safe)) / (t_safe - s_safe)
    return LoewnerMatrix(entries=np.where(near, derivative, quotient), spectrum=lam)


def _rotated(f: ScalarFunction, x, h):
    dec = eigh(as_positive(x))
    h = hermitian_part(h)
    if h.shape != (dec.lam.size, dec.lam.size):
        raise ArgumentError(
            f"direction must have shape {(dec.lam.size,) * 2}, got {h.shape}"
        )
    table = loewner(f, dec.lam).entries
    return dec, table, dec.u.conj().T @ h @ dec.u


def frechet_diff(f: ScalarFunction, x, h) -> np.ndarray:
    """Directional derivative df(x)(h) for Hermitian direction h."""
    dec, table, rotated = _rotated(f, x, h)
    return hermitian_part(dec.u @ (rotated * table) @ dec.u.conj().T)


def frechet_inv(f: ScalarFunction, x, h) -> np.ndarray:
    """Inverse map df(x)^(-1)(h), entrywise division by the Loewner table."""
    dec, table, rotated = _rotated(f, x, h)
    if float(np.min(np.abs(table))) <= _PINCH_TOL * (1.0 + float(np.max(np.abs(table)))):
        raise SingularityError("a Loewner entry vanished; df(x) is not invertible")
    return hermitian_part(dec.u @ (rotated / table) @ dec.u.conj().T)


def quad_form(f: ScalarFunction, x, h) -> float:
    """Tr h df(x)(h), the Loewner-weighted square of h."""
    _, table, rotated = _rotated(f, x, h)
    return float(np.sum(np.abs(rotated) ** 2 * table))


def quad_form_inv(f: ScalarFunction, x, h) -> float:
    """Tr h df(x)^(-1)(h), the inverse-Loewner-weighted square of h."""
    _, table, rotated = _rotated(f, x, h)
    if float(np.min(np.abs(table))) <= _PINCH_TOL * (1.0 + float(np.max(np.abs(table)))):
        raise SingularityError("a Loewner entry vanished; df(x) is not invertible")
    return float(np.sum(np.abs(rotated) ** 2 / table))


def logmean_quad_form(x, h) -> float:
    """Tr h dlog(x)^(-1)(h): the logarithmic-mean quadratic form.

    Equals the trace form of the kernel (t - s)/(log t - log s) on (x, x),
    and is the flat-measure limit of the power-product mixtures
    integral_0^1 t**u s**(1-u) du; concave in x.
    """
    return trace_form(LogMean(), x, x, hermitian_part(h))


def divided_diff_trace(a, b, p: float) -> float:
    """Tr of the divided-difference kernel (t-s)/(t**p - s**p) on (a, b).

    Evaluates the kernel on the left/right multiplication pair with the
    identity window; jointly concave in (a, b) for 0 < p <= 1.
    """
    a = as_positive(a)
    return trace_form(DividedDiff(p), a, b, np.eye(a.shape[0]))


def power_mixture_quad_form(mix: PowerMixture, x, h) -> float:
    """Tr h df(x)(h) for a positive mixture f of powers t**p, p in [0, 1].

    By linearity of the Loewner table this equals the weighted sum of
    quad_form(Power(p_k), x, h); jointly convex in (x, h).
    """
    if not isinstance(mix, PowerMixture):
        raise ArgumentError(f"expected a PowerMixture, got {type(mix).__name__}")
    return quad_form(mix, x, h)
