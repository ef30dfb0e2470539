"""Named verification suites, scans, and tabulations.

Each suite binds one proved statement to a sampled property check and
returns a single ``PropertyReport``.  Suites that sweep a parameter grid
run the check once per grid point with a seed offset per point, then
aggregate: trials are summed, the worst normalized violation wins, and
the witness records the grid point that produced it.

Scans and tabulations produce (header, rows) tables instead of verdicts;
the command line renders them as CSV.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .entropy import (
    entropy_gain,
    entropy_gap,
    multi_channel_gain,
    random_channel,
    residual_entropy,
)
from .errors import ArgumentError
from .frechet import (
    divided_diff_trace,
    logmean_quad_form,
    quad_form,
    quad_form_inv,
)
from .harness import (
    CONCAVE,
    CONVEX,
    IDENTITY,
    JOINTLY_CONCAVE,
    JOINTLY_CONVEX,
    PSD,
    FunctionalUnderTest,
    PropertyReport,
    hermitian_sampler,
    jensen_test,
    order_monotone_test,
    pd_sampler,
    psd_claim_test,
)
from .linalg import (
    apply_fn,
    hermitian_part,
    make_rng,
    random_contraction,
    random_hermitian,
    random_pd,
    random_unitary,
    spectrum,
)
from .orderineq import monotonicity_certificate, power_trace_gap
from .powersum import (
    PRParams,
    kweighted_power_sum,
    random_unit_interval_matrix,
    trace_power_sum,
    variational_bound,
)
from .reprmeasure import (
    divided_difference_quadrature,
    integral_representation,
    op_convex_check,
    op_monotone_check,
    weight_density,
)
from .scalarfn import Power, PowerMixture, PowerPlusOneRoot
from .superop import LogMean

__all__ = [
    "MAX_DIM",
    "DEFAULT_TOL",
    "RunConfig",
    "SUITES",
    "SCANS",
    "TABULATIONS",
    "suite_names",
    "run_suite",
    "run_scan",
    "run_tabulation",
]

MAX_DIM = 16
DEFAULT_TOL = 1e-9

_QUARTERS_01 = tuple(0.25 * i for i in range(1, 5))
_QUARTERS_02 = tuple(0.25 * i for i in range(1, 8))
_Q_GRID = tuple(0.25 * i for i in range(-4, 5))
_S_GRID = tuple(0.25 * i for i in range(0, 9))
_T_GRID = (0.0, 0.1, 1.0, 10.0, 100.0)

# Quadrature-backed reconstructions are held to their own bar; everything
# else inherits DEFAULT_TOL.
_SUITE_TOL = {"eq2-reconstruction": 1e-5}


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every suite, scan, and tabulation run.

    ``tol`` left as None picks the per-suite default.  ``params`` maps a
    grid key (p, r, q, s, t, lambda, ...) to the values to sweep; suites
    fall back to built-in grids for missing keys.
    """

    dim: int = 4
    trials: int = 300
    seed: int = 42
    tol: float | None = None
    params: Mapping[str, tuple[float, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if not 1 <= self.dim <= MAX_DIM:
            raise ArgumentError(f"dim must lie in [1, {MAX_DIM}], got {self.dim}")
        if self.trials < 1:
            raise ArgumentError(f"trials must be >= 1, got {self.trials}")
        if self.tol is not None and self.tol <= 0:
            raise ArgumentError(f"tol must be positive, got {self.tol}")
        clean = {}
        for key, values in dict(self.params).items():
            values = tuple(float(v) for v in values)
            if not values:
                raise ArgumentError(f"parameter {key!r} has no values")
            clean[str(key)] = values
        object.__setattr__(self, "params", clean)


def _tol(config: RunConfig, suite: str) -> float:
    if config.tol is not None:
        return config.tol
    return _SUITE_TOL.get(suite, DEFAULT_TOL)


def _grid(config: RunConfig, key: str, default: tuple[float, ...]) -> tuple[float, ...]:
    return config.params.get(key, default)


def _count(config: RunConfig, key: str, default: int) -> int:
    values = config.params.get(key)
    if values is None:
        return default
    if len(values) != 1 or values[0] != int(values[0]):
        raise ArgumentError(f"parameter {key!r} takes a single integer")
    return int(values[0])


def _aggregate(
    suite: str,
    config: RunConfig,
    tol: float,
    pieces: list[tuple[PropertyReport, dict]],
    dim: int | None = None,
) -> PropertyReport:
    worst, label = pieces[0]
    for report, point in pieces[1:]:
        if report.max_violation > worst.max_violation:
            worst, label = report, point
    max_violation = worst.max_violation
    witness = {"params": label}
    witness.update(worst.witness or {})
    return PropertyReport(
        suite=suite,
        claim=worst.claim,
        trials=sum(r.trials for r, _ in pieces),
        dim=config.dim if dim is None else dim,
        seed=config.seed,
        tol=tol,
        max_violation=max_violation,
        verdict="pass" if max_violation <= tol else "fail",
        witness=witness,
        runtime_ms=sum(r.runtime_ms for r, _ in pieces),
    )


def _columns(rng: np.random.Generator, dim: int) -> int:
    return int(rng.integers(1, dim + 1))


def _invertible_contraction(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Square strict contraction with singular values in [0.2, 1 - 1e-6].

    The negative-q order claims need K invertible (the rank of
    K(K*AK)^{q-1}K* must match A^{q-1}), so the spectrum is kept away
    from zero rather than drawn from rescaled Gaussians.
    """
    u = random_unitary(dim, rng)
    v = random_unitary(dim, rng)
    s = rng.uniform(0.2, 1.0 - 1e-6, size=dim)
    return (u * s) @ v.conj().T


# ---------------------------------------------------------------------------
# entropy suites


def _suite_theorem1(config: RunConfig) -> PropertyReport:
    def context(rng, dim):
        k = random_contraction(dim, _columns(rng, dim), rng)
        return (float(rng.uniform(0.5, 1.5)) * k,)

    fut = FunctionalUnderTest(
        name="entropy-observation-gap",
        arity=1,
        evaluator=entropy_gap,
        samplers=(pd_sampler(),),
        context=context,
    )
    return jensen_test(
        fut,
        CONVEX,
        trials=config.trials,
        dim=config.dim,
        seed=config.seed,
        tol=_tol(config, "theorem1"),
        suite="theorem1",
    )


def _suite_residual_entropy(config: RunConfig) -> PropertyReport:
    blocks = _count(config, "blocks", 3)
    if blocks < 2:
        raise ArgumentError(f"residual entropy needs >= 2 blocks, got {blocks}")
    fut = FunctionalUnderTest(
        name="residual-entropy",
        arity=blocks,
        evaluator=lambda *parts: residual_entropy(parts),
        samplers=(pd_sampler(),) * blocks,
    )
    return jensen_test(
        fut,
        JOINTLY_CONVEX,
        trials=config.trials,
        dim=config.dim,
        seed=config.seed,
        tol=_tol(config, "residual-entropy"),
        suite="residual-entropy",
    )


def _suite_entropy_gain(config: RunConfig) -> PropertyReport:
    kraus = _count(config, "kraus", 3)
    if kraus < 1:
        raise ArgumentError(f"kraus count must be >= 1, got {kraus}")

    def context(rng, dim):
        low = -(-dim // kraus)
        m = int(rng.integers(low, dim + 1)) if low <= dim else dim
        return (random_channel(dim, m, kraus, rng),)

    fut = FunctionalUnderTest(
        name="entropy-gain",
        arity=1,
        evaluator=lambda a, channel: entropy_gain(channel, a),
        samplers=(pd_sampler(),),
        context=context,
    )
    return jensen_test(
        fut,
        CONVEX,
        trials=config.trials,
        dim=config.dim,
        seed=config.seed,
        tol=_tol(config, "entropy-gain"),
        suite="entropy-gain",
    )


def _suite_multi_channel_gain(config: RunConfig) -> PropertyReport:
    count = _count(config, "channels", 2)
    if count < 1:
        raise ArgumentError(f"channel count must be >= 1, got {count}")

    def context(rng, dim):
        m = int(rng.integers(-(-dim // 2), dim + 1))
        return tuple(
            random_channel(dim, m, int(rng.integers(2, 4)), rng) for _ in range(count)
        )

    def evaluator(*args):
        return multi_channel_gain(args[count:], args[:count])

    fut = FunctionalUnderTest(
        name="multi-channel-gain",
        arity=count,
        evaluator=evaluator,
        samplers=(pd_sampler(),) * count,
        context=context,
    )
    return jensen_test(
        fut,
        JOINTLY_CONVEX,
        trials=config.trials,
        dim=config.dim,
        seed=config.seed,
        tol=_tol(config, "multi-channel-gain"),
        suite="multi-channel-gain",
    )


# ---------------------------------------------------------------------------
# power-sum suites


def _pr_pairs(config: RunConfig, convex: bool) -> list[PRParams]:
    if convex:
        ps = _grid(config, "p", (1.0, 1.3, 1.7, 2.0))
        rs = _grid(config, "r", ps)
        pairs = [PRParams(p, r) for p in ps for r in rs if p == r]
    else:
        ps = _grid(config, "p", (0.3, 0.5, 0.7, 1.0))
        rs = _grid(config, "r", ps)
        pairs = [PRParams(p, r) for p in ps for r in rs if p <= r <= 1.0]
    if not pairs:
        raise ArgumentError("no admissible (p, r) pairs in the requested grid")
    return pairs


def _suite_carlen(config: RunConfig, suite: str, convex: bool) -> PropertyReport:
    tol = _tol(config, suite)
    claim = JOINTLY_CONVEX if convex else JOINTLY_CONCAVE
    pieces = []
    for idx, params in enumerate(_pr_pairs(config, convex)):
        fut = FunctionalUnderTest(
            name=suite,
            arity=2,
            evaluator=lambda a, b, pr=params: trace_power_sum(a, b, pr),
            samplers=(pd_sampler(), pd_sampler()),
        )
        report = jensen_test(
            fut,
            claim,
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite=suite,
        )
        pieces.append((report, {"p": params.p, "r": params.r}))
    return _aggregate(suite, config, tol, pieces)


def _suite_carlen_concave(config: RunConfig) -> PropertyReport:
    return _suite_carlen(config, "carlen-concave", convex=False)


def _suite_carlen_convex(config: RunConfig) -> PropertyReport:
    return _suite_carlen(config, "carlen-convex", convex=True)


def _suite_eq1_kform_concave(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "eq1-kform-concave")

    def context(rng, dim):
        k = random_contraction(dim, dim, rng)
        return (float(rng.uniform(0.5, 1.5)) * k,)

    pieces = []
    for idx, params in enumerate(_pr_pairs(config, convex=False)):
        fut = FunctionalUnderTest(
            name="eq1-kform-concave",
            arity=2,
            evaluator=lambda a, b, k, pr=params: kweighted_power_sum(a, b, k, pr),
            samplers=(pd_sampler(), pd_sampler()),
            context=context,
        )
        report = jensen_test(
            fut,
            JOINTLY_CONCAVE,
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite="eq1-kform-concave",
        )
        pieces.append((report, {"p": params.p, "r": params.r}))
    return _aggregate("eq1-kform-concave", config, tol, pieces)


def _suite_variational(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "variational")
    ps = _grid(config, "p", (0.3, 0.5, 0.8))
    for p in ps:
        if not 0.0 < p < 1.0:
            raise ArgumentError(f"variational exponent must lie in (0, 1), got {p}")
    start = time.perf_counter()
    max_violation = -np.inf
    witness: dict | None = None
    total = 0
    for idx, p in enumerate(ps):
        for trial in range(config.trials):
            rng = make_rng(config.seed + idx, stream=trial)
            a = random_pd(config.dim, rng)
            b = random_pd(config.dim, rng)
            x = random_unit_interval_matrix(config.dim, rng)
            total += 1
            try:
                lhs, rhs = variational_bound(a, b, x, p)
            except Exception as exc:  # noqa: BLE001 - evaluator failure fails the suite
                max_violation = np.inf
                witness = {"params": {"p": p}, "trial": trial, "error": repr(exc)}
                break
            violation = (lhs - rhs) / (1.0 + max(abs(lhs), abs(rhs)))
            if violation > max_violation:
                max_violation = violation
                witness = {
                    "params": {"p": p},
                    "trial": trial,
                    "lhs": lhs,
                    "rhs": rhs,
                    "a": a,
                    "b": b,
                    "x": x,
                }
        if max_violation == np.inf:
            break
    return PropertyReport(
        suite="variational",
        claim=PSD,
        trials=total,
        dim=config.dim,
        seed=config.seed,
        tol=tol,
        max_violation=float(max_violation),
        verdict="pass" if max_violation <= tol else "fail",
        witness=witness,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


# ---------------------------------------------------------------------------
# matrix-order suites


def _suite_op_monotone_proot(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "op-monotone-proot")
    pieces = []
    for idx, p in enumerate(_grid(config, "p", _QUARTERS_01)):
        report = op_monotone_check(
            PowerPlusOneRoot(p),
            config.dim,
            config.trials,
            config.seed + idx,
            tol=tol,
            suite="op-monotone-proot",
        )
        pieces.append((report, {"p": p}))
    return _aggregate("op-monotone-proot", config, tol, pieces)


def _suite_op_convex_proot(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "op-convex-proot")
    pieces = []
    for idx, p in enumerate(_grid(config, "p", (1.0, 1.25, 1.5, 1.75, 2.0))):
        report = op_convex_check(
            PowerPlusOneRoot(p),
            config.dim,
            config.trials,
            config.seed + idx,
            tol=tol,
            suite="op-convex-proot",
        )
        pieces.append((report, {"p": p}))
    return _aggregate("op-convex-proot", config, tol, pieces)


def _suite_divided_diff_concave(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "divided-diff-concave")
    pieces = []
    for idx, p in enumerate(_grid(config, "p", _QUARTERS_01)):
        if not 0.0 < p <= 1.0:
            raise ArgumentError(f"divided-difference exponent must lie in (0, 1], got {p}")
        fut = FunctionalUnderTest(
            name="divided-diff-concave",
            arity=2,
            evaluator=lambda a, b, pp=p: divided_diff_trace(a, b, pp),
            samplers=(pd_sampler(), pd_sampler()),
        )
        report = jensen_test(
            fut,
            JOINTLY_CONCAVE,
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite="divided-diff-concave",
        )
        pieces.append((report, {"p": p}))
    return _aggregate("divided-diff-concave", config, tol, pieces)


# ---------------------------------------------------------------------------
# Frechet suites


def _hermitian_context(rng, dim):
    return (random_hermitian(dim, rng),)


def _suite_thm41_concave(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "thm41-concave")
    pieces = []
    for idx, p in enumerate(_grid(config, "p", _QUARTERS_01)):
        if not 0.0 < p <= 1.0:
            raise ArgumentError(f"exponent must lie in (0, 1], got {p}")
        fut = FunctionalUnderTest(
            name="thm41-concave",
            arity=1,
            evaluator=lambda x, h, pp=p: quad_form_inv(Power(pp), x, h),
            samplers=(pd_sampler(),),
            context=_hermitian_context,
        )
        report = jensen_test(
            fut,
            CONCAVE,
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite="thm41-concave",
        )
        pieces.append((report, {"p": p}))
    return _aggregate("thm41-concave", config, tol, pieces)


def _suite_thm42_joint_convex(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "thm42-joint-convex")
    pieces = []
    for idx, p in enumerate(_grid(config, "p", _QUARTERS_01)):
        if not 0.0 < p <= 1.0:
            raise ArgumentError(f"exponent must lie in (0, 1], got {p}")
        fut = FunctionalUnderTest(
            name="thm42-joint-convex",
            arity=2,
            evaluator=lambda x, h, pp=p: quad_form(Power(pp), x, h),
            samplers=(pd_sampler(), hermitian_sampler()),
        )
        report = jensen_test(
            fut,
            JOINTLY_CONVEX,
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite="thm42-joint-convex",
        )
        pieces.append((report, {"p": p}))
    return _aggregate("thm42-joint-convex", config, tol, pieces)


def _suite_power_mixture(config: RunConfig) -> PropertyReport:
    nodes = _count(config, "nodes", 64)
    if nodes < 2:
        raise ArgumentError(f"mixture needs >= 2 quadrature nodes, got {nodes}")
    mix = PowerMixture.lebesgue(nodes)
    fut = FunctionalUnderTest(
        name="power-mixture",
        arity=2,
        evaluator=lambda x, h: quad_form(mix, x, h),
        samplers=(pd_sampler(), hermitian_sampler()),
    )
    return jensen_test(
        fut,
        JOINTLY_CONVEX,
        trials=config.trials,
        dim=config.dim,
        seed=config.seed,
        tol=_tol(config, "power-mixture"),
        suite="power-mixture",
    )


def _suite_logmean_concave(config: RunConfig) -> PropertyReport:
    fut = FunctionalUnderTest(
        name="logmean-concave",
        arity=1,
        evaluator=logmean_quad_form,
        samplers=(pd_sampler(),),
        context=_hermitian_context,
    )
    return jensen_test(
        fut,
        CONCAVE,
        trials=config.trials,
        dim=config.dim,
        seed=config.seed,
        tol=_tol(config, "logmean-concave"),
        suite="logmean-concave",
    )


# ---------------------------------------------------------------------------
# contraction-compression suites


def _check_q_grid(values) -> tuple[float, ...]:
    for q in values:
        if not -1.0 <= q <= 1.0:
            raise ArgumentError(f"exponent q must lie in [-1, 1], got {q}")
    return values


def _suite_psi_psd(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "psi-psd")
    pieces = []
    for idx, q in enumerate(_check_q_grid(_grid(config, "q", _Q_GRID))):

        def matrix_fn(rng, dim, qq=q):
            a = random_pd(dim, rng)
            k = _invertible_contraction(rng, dim)
            return monotonicity_certificate(a, k, qq), {"q": qq, "a": a, "k": k}

        report = psd_claim_test(
            matrix_fn,
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite="psi-psd",
        )
        pieces.append((report, {"q": q}))
    return _aggregate("psi-psd", config, tol, pieces)


def _suite_phiq_decreasing(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "phiq-decreasing")

    def context(rng, dim):
        return (_invertible_contraction(rng, dim),)

    pieces = []
    for idx, q in enumerate(_check_q_grid(_grid(config, "q", _Q_GRID))):
        fut = FunctionalUnderTest(
            name="phiq-decreasing",
            arity=1,
            evaluator=lambda a, k, qq=q: power_trace_gap(a, k, qq),
            samplers=(pd_sampler(),),
            context=context,
        )
        report = order_monotone_test(
            fut,
            "decreasing",
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite="phiq-decreasing",
        )
        pieces.append((report, {"q": q}))
    return _aggregate("phiq-decreasing", config, tol, pieces)


def _suite_jensen_contraction(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "jensen-contraction")
    pieces = []
    for idx, s in enumerate(_grid(config, "s", _S_GRID)):
        if not 0.0 <= s <= 2.0:
            raise ArgumentError(f"exponent s must lie in [0, 2], got {s}")

        def matrix_fn(rng, dim, ss=s):
            a = random_pd(dim, rng)
            k = random_contraction(dim, _columns(rng, dim), rng)
            compressed = hermitian_part(k.conj().T @ a @ k)
            outer = apply_fn(Power(ss), compressed)
            inner = hermitian_part(k.conj().T @ apply_fn(Power(ss), a) @ k)
            difference = outer - inner if ss <= 1.0 else inner - outer
            return difference, {"s": ss, "a": a, "k": k}

        report = psd_claim_test(
            matrix_fn,
            trials=config.trials,
            dim=config.dim,
            seed=config.seed + idx,
            tol=tol,
            suite="jensen-contraction",
        )
        pieces.append((report, {"s": s}))
    return _aggregate("jensen-contraction", config, tol, pieces)


# ---------------------------------------------------------------------------
# deterministic identity suites


def _suite_eq2_reconstruction(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "eq2-reconstruction")
    ps = _grid(config, "p", _QUARTERS_02)
    ts = _grid(config, "t", _T_GRID)
    for p in ps:
        if not 0.0 < p < 2.0:
            raise ArgumentError(f"exponent p must lie in (0, 2), got {p}")
    for t in ts:
        if t < 0.0:
            raise ArgumentError(f"t must be nonnegative, got {t}")
    start = time.perf_counter()
    max_violation = -np.inf
    witness: dict | None = None
    points = 0
    for p in ps:
        target = PowerPlusOneRoot(p)
        for t in ts:
            points += 1
            try:
                rebuilt = integral_representation(t, p)
                closed = float(target.value(t))
                violation = abs(rebuilt - closed) / (1.0 + abs(closed))
            except Exception as exc:  # noqa: BLE001 - a stalled quadrature fails the suite
                violation = np.inf
                witness = {"params": {"p": p, "t": t}, "error": repr(exc)}
                max_violation = violation
                break
            if violation > max_violation:
                max_violation = violation
                witness = {
                    "params": {"p": p, "t": t},
                    "closed_form": closed,
                    "reconstructed": rebuilt,
                }
        if max_violation == np.inf:
            break
    return PropertyReport(
        suite="eq2-reconstruction",
        claim=IDENTITY,
        trials=points,
        dim=1,
        seed=config.seed,
        tol=tol,
        max_violation=float(max_violation),
        verdict="pass" if max_violation <= tol else "fail",
        witness=witness,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


def _suite_dd_integral_identity(config: RunConfig) -> PropertyReport:
    tol = _tol(config, "dd-integral-identity")
    ps = _grid(config, "p", _QUARTERS_01)
    ts = _grid(config, "t", (0.1, 0.5, 1.0, 2.0, 10.0))
    ss = _grid(config, "s", ts)
    for p in ps:
        if not 0.0 < p <= 1.0:
            raise ArgumentError(f"exponent p must lie in (0, 1], got {p}")
    for value in (*ts, *ss):
        if value <= 0.0:
            raise ArgumentError(f"grid points must be positive, got {value}")
    start = time.perf_counter()
    max_violation = -np.inf
    witness: dict | None = None
    points = 0
    for p in ps:
        for t in ts:
            for s in ss:
                points += 1
                closed, quad = divided_difference_quadrature(t, s, p)
                violation = abs(closed - quad) / (1.0 + abs(closed))
                if violation > max_violation:
                    max_violation = violation
                    witness = {
                        "params": {"p": p, "t": t, "s": s},
                        "closed_form": closed,
                        "quadrature": quad,
                    }
    return PropertyReport(
        suite="dd-integral-identity",
        claim=IDENTITY,
        trials=points,
        dim=1,
        seed=config.seed,
        tol=tol,
        max_violation=float(max_violation),
        verdict="pass" if max_violation <= tol else "fail",
        witness=witness,
        runtime_ms=(time.perf_counter() - start) * 1e3,
    )


SUITES: dict[str, Callable[[RunConfig], PropertyReport]] = {
    "theorem1": _suite_theorem1,
    "residual-entropy": _suite_residual_entropy,
    "entropy-gain": _suite_entropy_gain,
    "multi-channel-gain": _suite_multi_channel_gain,
    "carlen-concave": _suite_carlen_concave,
    "carlen-convex": _suite_carlen_convex,
    "eq1-kform-concave": _suite_eq1_kform_concave,
    "variational": _suite_variational,
    "op-monotone-proot": _suite_op_monotone_proot,
    "op-convex-proot": _suite_op_convex_proot,
    "divided-diff-concave": _suite_divided_diff_concave,
    "thm41-concave": _suite_thm41_concave,
    "thm42-joint-convex": _suite_thm42_joint_convex,
    "power-mixture": _suite_power_mixture,
    "logmean-concave": _suite_logmean_concave,
    "psi-psd": _suite_psi_psd,
    "phiq-decreasing": _suite_phiq_decreasing,
    "jensen-contraction": _suite_jensen_contraction,
    "eq2-reconstruction": _suite_eq2_reconstruction,
    "dd-integral-identity": _suite_dd_integral_identity,
}


def suite_names() -> tuple[str, ...]:
    return tuple(SUITES)


def run_suite(name: str, config: RunConfig) -> PropertyReport:
    """Run one registered suite by name."""
    try:
        runner = SUITES[name]
    except KeyError:
        raise ArgumentError(
            f"unknown suite {name!r}; choose from {', '.join(SUITES)}"
        ) from None
    return runner(config)


# ---------------------------------------------------------------------------
# scans: parameter sweeps reported as tables, no verdict


def _scan_identity_gap(config: RunConfig):
    ps = _grid(config, "p", (0.5,))
    rs = _grid(config, "r", (0.7,))
    header = ("p", "r", "trial", "dim", "plain_trace", "kform_trace", "gap")
    rows = []
    eye = np.eye(config.dim)
    for p in ps:
        for r in rs:
            params = PRParams(p, r)
            for trial in range(config.trials):
                rng = make_rng(config.seed, stream=trial)
                a = random_pd(config.dim, rng)
                b = random_pd(config.dim, rng)
                plain = trace_power_sum(a, b, params)
                kform = kweighted_power_sum(a, b, eye, params)
                rows.append((p, r, trial, config.dim, plain, kform, abs(plain - kform)))
    return header, rows


def _scan_hp_sign(config: RunConfig):
    ps = _grid(config, "p", _QUARTERS_02)
    lams = _grid(config, "lambda", tuple(np.geomspace(1e-3, 1e3, 25)))
    header = ("p", "lambda", "h_p")
    rows = []
    for p in ps:
        dens = weight_density(np.asarray(lams), p)
        rows.extend((p, lam, float(h)) for lam, h in zip(lams, dens))
    return header, rows


def _scan_eq2_error(config: RunConfig):
    ps = _grid(config, "p", _QUARTERS_02)
    ts = _grid(config, "t", _T_GRID)
    header = ("p", "max_abs_err", "max_rel_err")
    rows = []
    for p in ps:
        target = PowerPlusOneRoot(p)
        abs_err = rel_err = 0.0
        for t in ts:
            closed = float(target.value(t))
            gap = abs(integral_representation(t, p) - closed)
            abs_err = max(abs_err, gap)
            rel_err = max(rel_err, gap / (1.0 + abs(closed)))
        rows.append((p, abs_err, rel_err))
    return header, rows


def _scan_variational_gap(config: RunConfig):
    ps = _grid(config, "p", (0.3, 0.5, 0.8))
    header = ("p", "trial", "dim", "lhs", "rhs", "gap")
    rows = []
    for p in ps:
        if not 0.0 < p < 1.0:
            raise ArgumentError(f"variational exponent must lie in (0, 1), got {p}")
        for trial in range(config.trials):
            rng = make_rng(config.seed, stream=trial)
            a = random_pd(config.dim, rng)
            b = random_pd(config.dim, rng)
            x = random_unit_interval_matrix(config.dim, rng)
            lhs, rhs = variational_bound(a, b, x, p)
            rows.append((p, trial, config.dim, lhs, rhs, rhs - lhs))
    return header, rows


SCANS = {
    "identity-gap": _scan_identity_gap,
    "hp-sign": _scan_hp_sign,
    "eq2-error": _scan_eq2_error,
    "variational-gap": _scan_variational_gap,
}


def run_scan(name: str, config: RunConfig):
    """Run one registered scan; returns (header, rows)."""
    try:
        runner = SCANS[name]
    except KeyError:
        raise ArgumentError(
            f"unknown scan {name!r}; choose from {', '.join(SCANS)}"
        ) from None
    return runner(config)


# ---------------------------------------------------------------------------
# tabulations: plain function tables


def _single_param(config: RunConfig, key: str, default: float) -> float:
    values = config.params.get(key)
    if values is None:
        return default
    if len(values) != 1:
        raise ArgumentError(f"parameter {key!r} takes a single value")
    return values[0]


def _tabulate_f_proot(config: RunConfig):
    p = _single_param(config, "p", 0.5)
    ts = _grid(config, "t", tuple(0.25 * i for i in range(0, 41)))
    f = PowerPlusOneRoot(p)
    header = ("t", "f")
    return header, [(t, float(f.value(t))) for t in ts]


def _tabulate_h_weight(config: RunConfig):
    p = _single_param(config, "p", 0.5)
    lams = _grid(config, "lambda", tuple(np.geomspace(1e-3, 1e3, 61)))
    dens = weight_density(np.asarray(lams), p)
    header = ("lambda", "h")
    return header, [(lam, float(h)) for lam, h in zip(lams, dens)]


def _tabulate_logmean(config: RunConfig):
    ts = _grid(config, "t", tuple(0.1 * i for i in range(1, 51)))
    ss = config.params.get("s")
    kernel = LogMean()
    header = ("t", "s", "logmean")
    if ss is None:
        pairs = [(t, t) for t in ts]
    else:
        pairs = [(t, s) for t in ts for s in ss]
    for t, s in pairs:
        if t <= 0 or s <= 0:
            raise ArgumentError(f"grid points must be positive, got ({t}, {s})")
    return header, [(t, s, float(kernel.value(t, s))) for t, s in pairs]


TABULATIONS = {
    "f-proot": _tabulate_f_proot,
    "h-weight": _tabulate_h_weight,
    "logmean": _tabulate_logmean,
}


def run_tabulation(name: str, config: RunConfig):
    """Run one registered tabulation; returns (header, rows)."""
    try:
        runner = TABULATIONS[name]
    except KeyError:
        raise ArgumentError(
            f"unknown tabulation {name!r}; choose from {', '.join(TABULATIONS)}"
        ) from None
    return runner(config)
