import dataclasses

import pytest

from tracelab import RunConfig, run_scan, run_suite, run_tabulation
from tracelab.errors import ArgumentError
from tracelab.suites import SCANS, SUITES, TABULATIONS

EXPECTED_SUITES = [
    "theorem1",
    "residual-entropy",
    "entropy-gain",
    "multi-channel-gain",
    "carlen-concave",
    "carlen-convex",
    "eq1-kform-concave",
    "variational",
    "op-monotone-proot",
    "op-convex-proot",
    "divided-diff-concave",
    "thm41-concave",
    "thm42-joint-convex",
    "power-mixture",
    "logmean-concave",
    "psi-psd",
    "phiq-decreasing",
    "jensen-contraction",
    "eq2-reconstruction",
    "dd-integral-identity",
]

SMALL = RunConfig(dim=3, trials=8, seed=42)


def test_registry_names_and_order():
    assert list(SUITES) == EXPECTED_SUITES
    assert list(SCANS) == ["identity-gap", "hp-sign", "eq2-error", "variational-gap"]
    assert list(TABULATIONS) == ["f-proot", "h-weight", "logmean"]


def test_run_suite_unknown_name():
    with pytest.raises(ArgumentError, match="unknown suite"):
        run_suite("no-such-suite", SMALL)


def test_run_config_validation():
    with pytest.raises(ArgumentError):
        RunConfig(dim=0, trials=10, seed=1)
    with pytest.raises(ArgumentError):
        RunConfig(dim=17, trials=10, seed=1)
    with pytest.raises(ArgumentError):
        RunConfig(dim=3, trials=0, seed=1)
    with pytest.raises(ArgumentError):
        RunConfig(dim=3, trials=10, seed=1, tol=0.0)


@pytest.mark.parametrize(
    "name",
    [n for n in EXPECTED_SUITES if n not in ("op-convex-proot", "eq2-reconstruction")],
)
def test_each_suite_passes_at_small_config(name):
    report = run_suite(name, SMALL)
    assert report.suite == name
    assert report.verdict == "pass", report.witness
    assert report.seed == SMALL.seed
    assert report.runtime_ms >= 0.0


def test_eq2_reconstruction_passes_below_one():
    config = dataclasses.replace(SMALL, params={"p": [0.25, 0.5, 0.75, 1.0]})
    report = run_suite("eq2-reconstruction", config)
    assert report.verdict == "pass"
    assert report.tol == 1e-5


def test_eq2_reconstruction_default_grid_reports_the_defect():
    """Above p = 1 the half-line density cannot reproduce the map; the
    default grid therefore ends in an honest failure with a witness."""
    report = run_suite("eq2-reconstruction", SMALL)
    assert report.verdict == "fail"
    assert report.max_violation > 1e-2
    assert report.witness is not None


def test_op_convex_proot_splits_by_exponent():
    ok = run_suite(
        "op-convex-proot", dataclasses.replace(SMALL, params={"p": [1.0, 1.25, 1.5]})
    )
    assert ok.verdict == "pass"
    # near the top of the exponent range midpoint violations are routine
    bad = run_suite("op-convex-proot", RunConfig(params={"p": [1.75, 2.0]}))
    assert bad.verdict == "fail"
    assert bad.max_violation > 1e-4


def test_suite_determinism_modulo_runtime():
    a = run_suite("theorem1", SMALL).to_dict()
    b = run_suite("theorem1", SMALL).to_dict()
    a.pop("runtime_ms")
    b.pop("runtime_ms")
    assert a == b


def test_grid_suites_aggregate_trials():
    report = run_suite("carlen-concave", SMALL)
    # ten (p, r) pairs at eight trials each
    assert report.trials == 80
    assert "params" in report.witness


def test_tol_override_applies():
    config = dataclasses.replace(SMALL, tol=1e-2)
    report = run_suite("theorem1", config)
    assert report.tol == 1e-2


def test_run_scan_identity_gap_shape():
    header, rows = run_scan("identity-gap", dataclasses.replace(SMALL, trials=3))
    assert tuple(header) == ("p", "r", "trial", "dim", "plain_trace", "kform_trace", "gap")
    assert rows
    assert all(len(r) == len(header) for r in rows)
    assert all(r[-1] >= 0.0 for r in rows)


def test_run_scan_eq2_error_columns():
    header, rows = run_scan("eq2-error", SMALL)
    assert header[0] == "p"
    ps = [r[0] for r in rows]
    assert ps == sorted(ps)


def test_run_scan_unknown_name():
    with pytest.raises(ArgumentError, match="unknown scan"):
        run_scan("bogus", SMALL)


def test_run_tabulation_f_proot_values():
    config = dataclasses.replace(SMALL, params={"p": [1.0], "t": [0.0, 1.0, 3.0]})
    header, rows = run_tabulation("f-proot", config)
    assert tuple(header) == ("t", "f")
    got = dict(rows)
    assert got[0.0] == 1.0
    assert got[3.0] == 4.0


def test_run_tabulation_logmean_diagonal():
    config = dataclasses.replace(SMALL, params={"t": [2.0], "s": [2.0]})
    header, rows = run_tabulation("logmean", config)
    assert rows[0][-1] == pytest.approx(2.0, rel=1e-12)


def test_run_tabulation_unknown_name():
    with pytest.raises(ArgumentError, match="unknown tabulation"):
        run_tabulation("bogus", SMALL)
