"""Seeded sampling harness for convexity, monotonicity, and PSD claims.

Every check draws its trial inputs from a counter-based generator keyed by
(seed, trial index), so a report is a pure function of
(seed, trials, dim, parameters) no matter how trials are scheduled.
Violations are normalized by (1 + scale of the sampled values) and the
worst one is kept together with a witness complete enough to replay the
failing trial standalone.
"""

from __future__ import annotations

import dataclasses
import time
from dataclasses import dataclass
from typing import Any, Callable

import numpy as np

from .errors import ArgumentError
from .linalg import (
    hermitian_part,
    make_rng,
    psd_increment,
    random_contraction,
    random_hermitian,
    random_pd,
    spectrum,
)

__all__ = [
    "CONVEX",
    "CONCAVE",
    "JOINTLY_CONVEX",
    "JOINTLY_CONCAVE",
    "MONOTONE",
    "PSD",
    "IDENTITY",
    "PropertyReport",
    "FunctionalUnderTest",
    "jensen_test",
    "order_monotone_test",
    "psd_claim_test",
    "pd_sampler",
    "hermitian_sampler",
    "contraction_sampler",
    "unit_interval_sampler",
    "as_jsonable",
]

CONVEX = "convex"
CONCAVE = "concave"
JOINTLY_CONVEX = "jointly-convex"
JOINTLY_CONCAVE = "jointly-concave"
MONOTONE = "monotone"
PSD = "psd"
IDENTITY = "identity"

_JENSEN_CLAIMS = (CONVEX, CONCAVE, JOINTLY_CONVEX, JOINTLY_CONCAVE)


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of one sampled property check."""

    suite: str
    claim: str
    trials: int
    dim: int
    seed: int
    tol: float
    max_violation: float
    verdict: str
    witness: dict | None
    runtime_ms: float

    def to_dict(self) -> dict:
        """Plain dict in the documented key order, ready for json.dumps."""
        return {
            "suite": self.suite,
            "claim": self.claim,
            "trials": self.trials,
            "dim": self.dim,
            "seed": self.seed,
            "tol": self.tol,
            "max_violation": self.max_violation,
            "verdict": self.verdict,
            "witness": as_jsonable(self.witness),
            "runtime_ms": self.runtime_ms,
        }


@dataclass(frozen=True)
class FunctionalUnderTest:
    """A real-valued functional of one or more matrices.

    ``samplers`` draws one matrix per argument from (rng, dim); the
    optional ``context`` draws per-trial data that is held fixed inside a
    trial (a window matrix, a channel, an exponent) and passed to the
    evaluator after the matrix arguments.
    """

    name: str
    arity: int
    evaluator: Callable[..., float]
    samplers: tuple[Callable[[np.random.Generator, int], np.ndarray], ...]
    context: Callable[[np.random.Generator, int], tuple] | None = None

    def __post_init__(self):
        if self.arity < 1 or len(self.samplers) != self.arity:
            raise ArgumentError(
                f"need one sampler per argument: arity {self.arity}, "
                f"{len(self.samplers)} samplers"
            )


def as_jsonable(obj: Any):
    """Recursively convert arrays and complex scalars to JSON-safe values."""
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    if isinstance(obj, float):
        return float(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return {"re": obj.real.tolist(), "im": obj.imag.tolist()}
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, dict):
        return {str(k): as_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [as_jsonable(v) for v in obj]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {
            f.name: as_jsonable(getattr(obj, f.name)) for f in dataclasses.fields(obj)
        }
    return repr(obj)


def pd_sampler(cond_cap: float = 100.0):
    """Sampler of positive definite matrices with bounded condition number."""

    def sample(rng: np.random.Generator, dim: int) -> np.ndarray:
        return random_pd(dim, rng, cond_cap=cond_cap)

    return sample


def hermitian_sampler(scale: float = 1.0):
    """Sampler of Gaussian Hermitian matrices."""

    def sample(rng: np.random.Generator, dim: int) -> np.ndarray:
        return random_hermitian(dim, rng, scale=scale)

    return sample


def contraction_sampler(sigma: float | None = None):
    """Sampler of square contractions (top singular value below 1)."""

    def sample(rng: np.random.Generator, dim: int) -> np.ndarray:
        return random_contraction(dim, dim, rng, sigma=sigma)

    return sample


def unit_interval_sampler():
    """Sampler of Hermitian matrices with spectrum inside (0, 1)."""
    from .powersum import random_unit_interval_matrix

    def sample(rng: np.random.Generator, dim: int) -> np.ndarray:
        return random_unit_interval_matrix(dim, rng)

    return sample


def _error_report(
    suite, claim, trials, dim, seed, tol, start, trial, exc, inputs
) -> PropertyReport:
    witness = {"trial": trial, "error": repr(exc)}
    witness.update(inputs)
    return PropertyReport(
        suite=suite,
        claim=claim,
        trials=trials,
        dim=dim,
        seed=seed,
        tol=tol,
        max_violation=float("inf"),
        verdict="fail",
        witness=witness,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


def _finish(
    suite, claim, trials, dim, seed, tol, start, max_violation, witness
) -> PropertyReport:
    verdict = "pass" if max_violation <= tol else "fail"
    return PropertyReport(
        suite=suite,
        claim=claim,
        trials=trials,
        dim=dim,
        seed=seed,
        tol=tol,
        max_violation=max_violation,
        verdict=verdict,
        witness=witness,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


def jensen_test(
    fut: FunctionalUnderTest,
    claim: str,
    *,
    trials: int,
    dim: int,
    seed: int,
    tol: float = 1e-9,
    suite: str | None = None,
) -> PropertyReport:
    """Midpoint and random-weight Jensen check of a convexity claim.

    Each trial draws two argument tuples u, v and tests the Jensen gap at
    the midpoint and at one uniformly drawn weight.  For convex claims the
    violation is F(mix) - chord; for concave claims the sign flips.
    """
    if claim not in _JENSEN_CLAIMS:
        raise ArgumentError(f"unknown Jensen claim {claim!r}")
    if trials < 1:
        raise ArgumentError(f"trials must be >= 1, got {trials}")
    suite = suite or fut.name
    start = time.perf_counter()
    convex_like = claim in (CONVEX, JOINTLY_CONVEX)
    max_violation = -np.inf
    witness: dict | None = None
    for trial in range(trials):
        rng = make_rng(seed, stream=trial)
        ctx = fut.context(rng, dim) if fut.context is not None else ()
        try:
            left = tuple(s(rng, dim) for s in fut.samplers)
            right = tuple(s(rng, dim) for s in fut.samplers)
            weights = (0.5, float(rng.uniform()))
            f_left = float(fut.evaluator(*left, *ctx))
            f_right = float(fut.evaluator(*right, *ctx))
            for lam in weights:
                mixed = tuple(
                    hermitian_part(lam * le + (1.0 - lam) * ri)
                    for le, ri in zip(left, right)
                )
                f_mix = float(fut.evaluator(*mixed, *ctx))
                raw = f_mix - (lam * f_left + (1.0 - lam) * f_right)
                signed = raw if convex_like else -raw
                scale = max(abs(f_left), abs(f_right), abs(f_mix))
                violation = signed / (1.0 + scale)
                if violation > max_violation:
                    max_violation = violation
                    witness = {
                        "trial": trial,
                        "weight": lam,
                        "left": left,
                        "right": right,
                        "context": ctx,
                        "f_left": f_left,
                        "f_right": f_right,
                        "f_mix": f_mix,
                    }
        except Exception as exc:  # noqa: BLE001 - any evaluator failure fails the suite
            return _error_report(
                suite, claim, trials, dim, seed, tol, start, trial, exc, {"context": ctx}
            )
    return _finish(
        suite, claim, trials, dim, seed, tol, start, float(max_violation), witness
    )


def order_monotone_test(
    fut: FunctionalUnderTest,
    direction: str,
    *,
    trials: int,
    dim: int,
    seed: int,
    tol: float = 1e-9,
    suite: str | None = None,
) -> PropertyReport:
    """Check a scalar functional is monotone along PSD increments.

    ``direction`` is "increasing" or "decreasing"; each trial compares
    F(base) with F(base + step) for a PSD step of spectral norm 1.
    """
    if direction not in ("increasing", "decreasing"):
        raise ArgumentError(f"direction must be increasing or decreasing, got {direction!r}")
    if fut.arity != 1:
        raise ArgumentError("order monotonicity applies to single-argument functionals")
    if trials < 1:
        raise ArgumentError(f"trials must be >= 1, got {trials}")
    suite = suite or fut.name
    start = time.perf_counter()
    max_violation = -np.inf
    witness: dict | None = None
    for trial in range(trials):
        rng = make_rng(seed, stream=trial)
        ctx = fut.context(rng, dim) if fut.context is not None else ()
        try:
            base = fut.samplers[0](rng, dim)
            step = psd_increment(dim, rng)
            bumped = hermitian_part(base + step)
            f_base = float(fut.evaluator(base, *ctx))
            f_bumped = float(fut.evaluator(bumped, *ctx))
            raw = f_base - f_bumped if direction == "increasing" else f_bumped - f_base
            violation = raw / (1.0 + max(abs(f_base), abs(f_bumped)))
            if violation > max_violation:
                max_violation = violation
                witness = {
                    "trial": trial,
                    "direction": direction,
                    "base": base,
                    "step": step,
                    "context": ctx,
                    "f_base": f_base,
                    "f_bumped": f_bumped,
                }
        except Exception as exc:  # noqa: BLE001
            return _error_report(
                suite, MONOTONE, trials, dim, seed, tol, start, trial, exc, {"context": ctx}
            )
    return _finish(
        suite, MONOTONE, trials, dim, seed, tol, start, float(max_violation), witness
    )


def psd_claim_test(
    matrix_fn: Callable[[np.random.Generator, int], tuple[np.ndarray, dict]],
    *,
    trials: int,
    dim: int,
    seed: int,
    tol: float = 1e-9,
    suite: str = "psd-claim",
) -> PropertyReport:
    """Check that a sampled Hermitian matrix is positive semidefinite.

    ``matrix_fn`` maps (rng, dim) to (matrix, inputs) where inputs describe
    the sampled data for the witness.  The violation is the negative part
    of the smallest eigenvalue, normalized by (1 + spectral norm).
    """
    if trials < 1:
        raise ArgumentError(f"trials must be >= 1, got {trials}")
    start = time.perf_counter()
    max_violation = -np.inf
    witness: dict | None = None
    for trial in range(trials):
        rng = make_rng(seed, stream=trial)
        try:
            matrix, inputs = matrix_fn(rng, dim)
            lam = spectrum(matrix)
            low, high = float(lam[0]), float(lam[-1])
            violation = -low / (1.0 + max(abs(low), abs(high)))
            if violation > max_violation:
                max_violation = violation
                witness = {"trial": trial, "min_eig": low, "max_eig": high}
                witness.update(inputs)
        except Exception as exc:  # noqa: BLE001
            return _error_report(
                suite, PSD, trials, dim, seed, tol, start, trial, exc, {}
            )
    return _finish(suite, PSD, trials, dim, seed, tol, start, float(max_violation), witness)
