"""Dense complex Hermitian linear algebra and counter-based random sampling.

Matrices are plain complex128 ndarrays.  ``hermitian_part`` symmetrizes
exactly, ``as_positive`` guards the positive-definiteness floor, and
``eigh`` wraps the LAPACK solver with residual checks so every spectral
decomposition used downstream is certified to reconstruct its input.

Randomness is counter-based (Philox): a (seed, stream) pair fully
determines every sample, and independent streams are obtained by changing
the stream index rather than sharing generator state.
"""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import ArgumentError, ConvergenceError, DomainError
from .scalarfn import ScalarFunction

__all__ = [
    "POSITIVITY_FLOOR",
    "EigenDecomposition",
    "make_rng",
    "hermitian_part",
    "as_positive",
    "eigh",
    "spectrum",
    "apply_fn",
    "is_psd",
    "random_pd",
    "random_hermitian",
    "random_unitary",
    "random_contraction",
    "psd_increment",
]

#: eigenvalues at or below this are treated as a domain violation for
#: functions that are singular at zero
POSITIVITY_FLOOR = 1e-12

_EIGH_TOL = 1e-10
_MASK64 = (1 << 64) - 1


def make_rng(seed: int, stream: int = 0) -> np.random.Generator:
    """Deterministic generator for (seed, stream), backed by Philox counters.

    Distinct stream indices give statistically independent draws for the
    same seed, which is how per-trial generators are split without sharing
    state across trials.
    """
    key = (int(stream) << 64) | (int(seed) & _MASK64)
    return np.random.Generator(np.random.Philox(key=key))


def _check_square(a: np.ndarray, who: str) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ArgumentError(f"{who} expects a square matrix, got shape {a.shape}")
    if not np.all(np.isfinite(a.view(float))):
        raise ArgumentError(f"{who} received non-finite entries")
    return a


def hermitian_part(a) -> np.ndarray:
    """Exactly Hermitian symmetrization (a + a*)/2 of a square matrix."""
    a = _check_square(a, "hermitian_part")
    return 0.5 * (a + a.conj().T)


def as_positive(a, floor: float = POSITIVITY_FLOOR) -> np.ndarray:
    """Symmetrize and verify the spectrum stays above ``floor``."""
    h = hermitian_part(a)
    smallest = float(np.linalg.eigvalsh(h)[0])
    if smallest <= floor:
        raise DomainError(
            f"matrix is not positive definite: min eigenvalue {smallest:.3e} <= {floor:.0e}"
        )
    return h


class EigenDecomposition(NamedTuple):
    """Unitary u and ascending real eigenvalues lam with a = u diag(lam) u*."""

    u: np.ndarray
    lam: np.ndarray


def eigh(a) -> EigenDecomposition:
    """Certified Hermitian eigendecomposition with ascending eigenvalues.

    The reconstruction and unitarity residuals are checked against
    1e-10 * (1 + max|a|); a failure raises ConvergenceError with the
    matrix condition attached.
    """
    h = hermitian_part(a)
    try:
        lam, u = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigendecomposition failed: {exc}") from exc
    scale = 1.0 + float(np.max(np.abs(h))) if h.size else 1.0
    recon = float(np.max(np.abs((u * lam) @ u.conj().T - h))) if h.size else 0.0
    ortho = float(np.max(np.abs(u.conj().T @ u - np.eye(h.shape[0]))))
    if recon > _EIGH_TOL * scale or ortho > _EIGH_TOL * scale:
        cond = float(np.max(np.abs(lam)) / max(np.min(np.abs(lam)), 1e-300))
        raise ConvergenceError(
            f"eigendecomposition residuals too large (recon {recon:.3e}, "
            f"unitarity {ortho:.3e}, condition {cond:.3e})"
        )
    return EigenDecomposition(u=u, lam=lam)


def spectrum(a) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix."""
    return np.linalg.eigvalsh(hermitian_part(a))


def apply_fn(f: ScalarFunction, a) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum."""
    u, lam = eigh(a)
    if f.strict_domain and float(lam[0]) <= POSITIVITY_FLOOR:
        raise DomainError(
            f"{f!r} needs a strictly positive spectrum; min eigenvalue {float(lam[0]):.3e}"
        )
    return hermitian_part((u * f.value(lam)) @ u.conj().T)


def is_psd(a, tol: float = 1e-10) -> bool:
    """True when the smallest eigenvalue is at least -tol."""
    return float(spectrum(a)[0]) >= -tol


def _complex_gaussian(rng: np.random.Generator, n: int, m: int) -> np.ndarray:
    re = rng.standard_normal((n, m))
    im = rng.standard_normal((n, m))
    return (re + 1j * im) / np.sqrt(2.0)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-style random unitary via phase-fixed QR of a complex Gaussian."""
    if n < 1:
        raise ArgumentError(f"dimension must be >= 1, got {n}")
    q, r = np.linalg.qr(_complex_gaussian(rng, n, n))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_hermitian(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Gaussian Hermitian matrix with entries of the given scale."""
    if n < 1:
        raise ArgumentError(f"dimension must be >= 1, got {n}")
    return hermitian_part(scale * _complex_gaussian(rng, n, n))


def random_pd(n: int, rng: np.random.Generator, cond_cap: float = 100.0) -> np.ndarray:
    """Random positive definite matrix with condition number at most cond_cap.

    The spectrum is drawn log-uniformly from [1/sqrt(cond_cap),
    sqrt(cond_cap)] and rotated by a random unitary.
    """
    if n < 1:
        raise ArgumentError(f"dimension must be >= 1, got {n}")
    if cond_cap < 1.0:
        raise ArgumentError(f"cond_cap must be >= 1, got {cond_cap}")
    half = 0.5 * np.log(cond_cap)
    lam = np.exp(rng.uniform(-half, half, size=n))
    u = random_unitary(n, rng)
    return hermitian_part((u * lam) @ u.conj().T)


def random_contraction(
    n: int, m: int, rng: np.random.Generator, sigma: float | None = None
) -> np.ndarray:
    """Random n x m matrix with largest singular value strictly below 1.

    Gaussian draws are rescaled so the top singular value is 1 - 1e-6.
    With ``sigma`` given, a random partial isometry is scaled so that every
    singular value equals sigma.
    """
    if n < 1 or m < 1:
        raise ArgumentError(f"dimensions must be >= 1, got ({n}, {m})")
    if sigma is not None:
        if not 0.0 < sigma < 1.0:
            raise ArgumentError(f"sigma must lie in (0, 1), got {sigma}")
        if n <= m:
            iso = random_unitary(m, rng)[:n, :]
        else:
            iso = random_unitary(n, rng)[:, :m]
        return sigma * iso
    g = _complex_gaussian(rng, n, m)
    top = float(np.linalg.svd(g, compute_uv=False)[0])
    return g * ((1.0 - 1e-6) / top)


def psd_increment(n: int, rng: np.random.Generator) -> np.ndarray:
    """Random positive semidefinite step G*G scaled to spectral norm 1."""
    g = _complex_gaussian(rng, n, n)
    m = hermitian_part(g.conj().T @ g)
    return m / float(np.linalg.eigvalsh(m)[-1])
