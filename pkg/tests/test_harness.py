"""Registry coverage, runner behavior, reports, and the CLI."""

import json
import re
from fractions import Fraction as F

import pytest

from qrr import ConfigError, UnknownIdentityError, UnsupportedModeError
from qrr.cli import main
from qrr.harness import (CENSUS, ENTRIES, RunSettings, SuiteConfig,
                         emit_report, get_entry, list_identities,
                         parse_report, planned_checks, run_check, run_info,
                         run_suite, sample_params)
from qrr.harness.sampling import annulus_pair, entry_rng, rational_in

FAST_IDS = ["st-5.7", "sw-symmetry", "finite-qbinom", "schur-cd"]


def test_registry_size_and_ordering():
    entries = list_identities()
    assert len(entries) >= 30
    assert [e.id for e in entries] == sorted(e.id for e in entries)
    assert get_entry("RR1").statement.startswith("sum q^{n^2}")
    assert any(e.id == "ms-17" for e in entries)


def test_census_covers_registry():
    ids = {e.id for e in ENTRIES}
    seen = set()
    for tag, kind, target in CENSUS:
        assert kind in ("entry", "def", "oos"), tag
        assert tag not in seen, f"duplicate census tag {tag}"
        seen.add(tag)
        if kind == "entry":
            for eid in target:
                assert eid in ids, f"census {tag} points at unknown {eid}"
    covered = {eid for _, kind, target in CENSUS if kind == "entry"
               for eid in target}
    assert covered == ids, ids ^ covered  # census and registry agree exactly


def test_every_entry_has_modes_and_checker():
    for e in ENTRIES:
        assert e.modes and all(m in ("formal", "exact", "numeric")
                               for m in e.modes)
        assert callable(e.check)
        assert e.statement and e.title


def test_unknown_identity():
    with pytest.raises(UnknownIdentityError):
        get_entry("definitely-not-registered")


def test_unsupported_mode():
    with pytest.raises(UnsupportedModeError):
        run_check("ms-14", "formal", RunSettings())


def test_evaluator_error_becomes_skipped():
    rep = run_check("RR1", "numeric", RunSettings(q_values=("1.5",)))
    assert rep.status == "SKIPPED"
    assert "DomainError" in rep.note


def test_sampling_is_deterministic_and_respects_margins():
    r1 = entry_rng(7, "psi11", "numeric")
    r2 = entry_rng(7, "psi11", "numeric")
    for _ in range(5):
        assert annulus_pair(r1) == annulus_pair(r2)
    rng = entry_rng(7, "other", "numeric")
    for _ in range(50):
        a, b, z = annulus_pair(rng)
        assert b / a < z < 1
        assert z - b / a >= 1 / 20 and 1 - z >= 1 / 20
    assert entry_rng(7, "x", "numeric").random() != entry_rng(8, "x", "numeric").random()


def test_rational_in_is_strictly_inside():
    rng = entry_rng(3, "bounds", "exact")
    for _ in range(100):
        v = rational_in(rng, 0, 1)
        assert 0 < v < 1


def test_sample_params_annulus_and_determinism():
    draw = sample_params("psi11", 42)
    assert draw == sample_params("psi11", 42)
    assert draw["b"] / draw["a"] + F(1, 20) <= draw["z"] <= F(19, 20)
    assert sample_params("psi11", 43) != draw


def test_sample_params_avoids_poles():
    # factors 1 - a q^{-j} of (aq;q)_n must stay bounded away from zero
    q = F(3, 10)
    for seed in range(8):
        a = sample_params("um-recurrence", seed)["a"]
        for j in range(1, 40):
            if abs(q) ** -j > 4:
                break
            assert abs(1 - a * q ** -j) > 0
            assert abs(a - q ** -j) > F(1, 20) * max(F(1), q ** -j)


def test_sample_params_fixed_grid_entries():
    fixed = sample_params("bessel-sv-4", 0)
    assert fixed == dict(get_entry("bessel-sv-4").domains)


def test_emit_report_propagates_io_errors():
    with pytest.raises(OSError):
        emit_report([], {}, fmt="json", path="/no/such/dir/report.json")


def test_planned_checks_filters_modes():
    cfg = SuiteConfig.from_dict({"ids": ["RR1", "st-5.7"], "modes": ["formal"]})
    assert planned_checks(cfg) == [("RR1", "formal"), ("st-5.7", "formal")]


def test_empty_selection_exits_zero():
    reports, summary, code = run_suite(SuiteConfig.from_dict({"ids": []}))
    assert reports == [] and code == 0 and summary["total"] == 0


def test_forced_bad_tolerance_fails_suite():
    cfg = SuiteConfig.from_dict({"ids": ["sw-symmetry"], "modes": ["numeric"],
                                 "tolerance_exponent": 200})
    reports, summary, code = run_suite(cfg)
    assert code == 1
    assert any(r.status == "FAIL" for r in reports)


def test_suite_parallel_matches_sequential():
    seq = SuiteConfig.from_dict({"ids": FAST_IDS})
    par = SuiteConfig.from_dict({"ids": FAST_IDS, "jobs": 2})
    rs, *_ = run_suite(seq)
    rp, *_ = run_suite(par)
    strip = lambda r: (r.id, r.mode, r.status, r.max_abs_deviation, r.params)
    assert [strip(r) for r in rs] == [strip(r) for r in rp]


def _normalized_json(cfg):
    reports, _, _ = run_suite(cfg)
    text = emit_report(reports, run_info(cfg, timestamp="T"), fmt="json")
    return re.sub(r'"wall_time_ms": [0-9.]+', '"wall_time_ms": 0', text)


def test_json_determinism_modulo_timing():
    cfg = SuiteConfig.from_dict({"ids": FAST_IDS, "seed": 99})
    assert _normalized_json(cfg) == _normalized_json(cfg)


def test_seed_changes_sampled_parameters():
    a = run_check("ms-1", "exact", RunSettings(seed=1))
    b = run_check("ms-1", "exact", RunSettings(seed=2))
    assert a.params != b.params
    assert a.status == b.status == "PASS"


def test_report_round_trip():
    cfg = SuiteConfig.from_dict({"ids": FAST_IDS})
    reports, _, _ = run_suite(cfg)
    info = run_info(cfg, timestamp="T0")
    text = emit_report(reports, info, fmt="json")
    info2, reports2 = parse_report(text)
    assert info2 == info
    assert reports2 == reports


def test_empty_report_is_valid_json():
    text = emit_report([], {"q": ["0.3"]}, fmt="json")
    info, reports = parse_report(text)
    assert reports == [] and info["q"] == ["0.3"]


def test_text_table_shape():
    cfg = SuiteConfig.from_dict({"ids": ["st-5.7"]})
    reports, _, _ = run_suite(cfg)
    text = emit_report(reports, run_info(cfg), fmt="text")
    assert "status" in text.splitlines()[1]
    assert any("st-5.7" in line for line in text.splitlines())


def test_config_validation():
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict({"nope": 1})
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict({"modes": ["sideways"]})
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict({"ids": 17})
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict({"precision": -3})
    with pytest.raises(ConfigError):
        SuiteConfig.from_dict({"q": []})


def test_cli_list(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out
    assert "RR1" in out and len(out.splitlines()) >= 30


def test_cli_check_pass_and_usage(capsys):
    assert main(["check", "st-5.7", "--mode", "exact"]) == 0
    assert main(["check", "no-such-id"]) == 2
    assert main(["check", "ms-14", "--mode", "formal"]) == 2


def test_cli_suite_json_output(tmp_path, capsys):
    out = tmp_path / "report.json"
    code = main(["suite", "--ids", "st-5.7", "sw-symmetry", "--format",
                 "json", "--out", str(out)])
    assert code == 0
    info, reports = parse_report(out.read_text())
    assert {r.id for r in reports} == {"st-5.7", "sw-symmetry"}
    assert all(r.status == "PASS" for r in reports)


def test_cli_suite_config_file(tmp_path):
    cfg_path = tmp_path / "cfg.json"
    cfg_path.write_text(json.dumps({"ids": ["finite-qbinom"],
                                    "modes": ["exact"], "seed": 5}))
    assert main(["suite", "--config", str(cfg_path)]) == 0
    cfg_path.write_text(json.dumps({"bogus": True}))
    assert main(["suite", "--config", str(cfg_path)]) == 2


def test_cli_bad_usage_exit_code():
    assert main(["not-a-command"]) == 2


def test_cli_subprocess_end_to_end(tmp_path):
    import subprocess
    import sys

    base = [sys.executable, "-m", "qrr.cli"]
    out = subprocess.run(base + ["list"], capture_output=True, text=True)
    assert out.returncode == 0 and "RR1" in out.stdout

    rep = tmp_path / "r.json"
    out = subprocess.run(
        base + ["suite", "--ids", "st-5.7", "--format", "json",
                "--out", str(rep), "--jobs", "2"],
        capture_output=True, text=True)
    assert out.returncode == 0
    _, reports = parse_report(rep.read_text())
    assert all(r.status == "PASS" for r in reports)

    out = subprocess.run(base + ["check", "unknown-thing"],
                         capture_output=True, text=True)
    assert out.returncode == 2 and "error" in out.stderr
