"""Power-trace inequalities under compression by a contraction.

For a contraction K (largest singular value at most 1), a positive
definite A with K*AK positive definite, and q in [-1, 1]:

  * the gap  phi(A) = Tr (K*AK)**q - Tr A**q  decreases along the
    positive semidefinite order in A;
  * its decrease is certified by the positive semidefinite matrix
    psi(A) = q ( A**(q-1) - K (K*AK)**(q-1) K* ), which is minus the
    Frechet gradient of phi;
  * compression is sub-homogeneous under powers: K* A**s K <= (K*AK)**s
    for s in [0, 1], with the reversed order for s in [1, 2].

The positivity of psi (and with it the decrease of phi) holds for every
full-column-rank contraction when 0 <= q <= 1, but for q < 0 it needs K
square and invertible: K(K*AK)^{q-1}K* has rank at most the column count
of K, while it must dominate the full-rank A^{q-1}. The functions below
evaluate for any K whose compression is positive definite; the order
claims are only asserted (by the suites and tests) on their valid
domains.
"""

from __future__ import annotations

import time

import numpy as np

from .errors import ArgumentError, DomainError
from .harness import PSD, PropertyReport
from .linalg import POSITIVITY_FLOOR, apply_fn, as_positive, hermitian_part, spectrum
from .scalarfn import Power

__all__ = [
    "monotonicity_certificate",
    "power_trace_gap",
    "power_trace_gap_directional",
    "jensen_contraction_check",
]


def _check_contraction(k, n: int) -> np.ndarray:
    k = np.asarray(k, dtype=np.complex128)
    if k.ndim != 2 or k.shape[0] != n:
        raise ArgumentError(f"window must have {n} rows, got shape {k.shape}")
    top = float(np.linalg.svd(k, compute_uv=False)[0])
    if top > 1.0 + 1e-12:
        raise ArgumentError(f"window must be a contraction, largest singular value {top:.6f}")
    return k


def _compressed(a: np.ndarray, k: np.ndarray) -> np.ndarray:
    m = hermitian_part(k.conj().T @ a @ k)
    if float(spectrum(m)[0]) <= POSITIVITY_FLOOR:
        raise DomainError(
            f"K*AK is rank deficient: min eigenvalue {float(spectrum(m)[0]):.3e}"
        )
    return m


def _check_q(q: float) -> float:
    q = float(q)
    if not -1.0 <= q <= 1.0:
        raise ArgumentError(f"exponent q must lie in [-1, 1], got {q}")
    return q


def monotonicity_certificate(a, k, q: float) -> np.ndarray:
    """psi(A) = q (A**(q-1) - K (K*AK)**(q-1) K*), positive semidefinite.

    Equals minus the Frechet gradient of ``power_trace_gap`` in A and so
    certifies its monotone decrease.  Identically zero at q = 0 and for
    unitary K.
    """
    q = _check_q(q)
    a = as_positive(a)
    k = _check_contraction(k, a.shape[0])
    if q == 0.0:
        return np.zeros_like(a)
    inner = apply_fn(Power(q - 1.0), _compressed(a, k))
    return hermitian_part(q * (apply_fn(Power(q - 1.0), a) - k @ inner @ k.conj().T))


def power_trace_gap(a, k, q: float) -> float:
    """phi(A) = Tr (K*AK)**q - Tr A**q, decreasing in A for q in [-1, 1]."""
    q = _check_q(q)
    a = as_positive(a)
    k = _check_contraction(k, a.shape[0])
    if q == 0.0:
        return float(k.shape[1] - a.shape[0])
    lam_in = spectrum(a)
    lam_out = spectrum(_compressed(a, k))
    return float(np.sum(lam_out**q) - np.sum(lam_in**q))


def power_trace_gap_directional(a, k, q: float, d) -> float:
    """Directional derivative of phi at A along Hermitian d.

    Equals -Tr psi(A) d, which is at most 0 whenever d is positive
    semidefinite.
    """
    d = hermitian_part(d)
    certificate = monotonicity_certificate(a, k, q)
    if d.shape != certificate.shape:
        raise ArgumentError(f"direction must have shape {certificate.shape}, got {d.shape}")
    return float(-np.real(np.trace(certificate @ d)))


def jensen_contraction_check(a, k, s: float, tol: float = 1e-10) -> PropertyReport:
    """Order check of (K*AK)**s against K* A**s K for one (A, K, s).

    For s in [0, 1] the difference (K*AK)**s - K* A**s K must be positive
    semidefinite; for s in [1, 2] the order reverses.  The report carries
    the extreme eigenvalues of the difference as its witness.
    """
    start = time.perf_counter()
    s = float(s)
    if not 0.0 <= s <= 2.0:
        raise ArgumentError(f"exponent s must lie in [0, 2], got {s}")
    a = as_positive(a)
    k = _check_contraction(k, a.shape[0])
    compressed = _compressed(a, k)
    outer = apply_fn(Power(s), compressed)
    inner = hermitian_part(k.conj().T @ apply_fn(Power(s), a) @ k)
    difference = outer - inner
    lam = spectrum(difference)
    low, high = float(lam[0]), float(lam[-1])
    scale = 1.0 + max(abs(low), abs(high))
    violation = (-low if s <= 1.0 else high) / scale
    regime = "s<=1: (K*AK)^s - K*A^sK >= 0" if s <= 1.0 else "s>=1: order reversed"
    return PropertyReport(
        suite="jensen-contraction",
        claim=PSD,
        trials=1,
        dim=a.shape[0],
        seed=0,
        tol=tol,
        max_violation=float(violation),
        verdict="pass" if violation <= tol else "fail",
        witness={"s": s, "regime": regime, "min_eig": low, "max_eig": high},
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )
