"""Check execution: single identities, whole suites, configuration."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from datetime import datetime, timezone

import mpmath as mp

from ..errors import ConfigError, QrrError, UnsupportedModeError
from .registry import RunSettings, get_entry, list_identities
from .report import IdentityReport, emit_report

_CONFIG_KEYS = {"ids", "modes", "q", "precision", "order", "seed",
                "tolerance_exponent", "jobs"}


@dataclass
class SuiteConfig:
    ids: list | str = "all"
    modes: list | None = None          # None: every mode an entry declares
    q: list = field(default_factory=lambda: ["0.2", "0.3"])
    precision: int = 50
    order: int = 100
    seed: int = 20240809
    tolerance_exponent: int | None = None
    jobs: int = 1

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        unknown = set(data) - _CONFIG_KEYS
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        cfg = cls()
        if "ids" in data:
            ids = data["ids"]
            if not (ids == "all" or isinstance(ids, list)):
                raise ConfigError("ids must be 'all' or a list of entry ids")
            cfg.ids = ids
        if "modes" in data:
            modes = data["modes"]
            if isinstance(modes, str):
                modes = [modes]
            bad = set(modes) - {"formal", "exact", "numeric"}
            if bad:
                raise ConfigError(f"unknown modes: {sorted(bad)}")
            cfg.modes = modes
        if "q" in data:
            qv = data["q"]
            cfg.q = [qv] if not isinstance(qv, list) else list(qv)
            if not cfg.q:
                raise ConfigError("q list must be nonempty")
        for key in ("precision", "order", "seed", "jobs"):
            if key in data:
                val = data[key]
                if not isinstance(val, int) or val <= 0 and key != "seed":
                    raise ConfigError(f"{key} must be a positive integer")
                setattr(cfg, key, val)
        if "tolerance_exponent" in data and data["tolerance_exponent"] is not None:
            te = data["tolerance_exponent"]
            if not isinstance(te, int) or te <= 0:
                raise ConfigError("tolerance_exponent must be a positive integer")
            cfg.tolerance_exponent = te
        return cfg

    @classmethod
    def from_file(cls, path: str) -> "SuiteConfig":
        try:
            with open(path) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        return cls.from_dict(data)

    def settings(self) -> RunSettings:
        return RunSettings(precision=self.precision, order=self.order,
                           q_values=tuple(self.q), seed=self.seed,
                           tolerance_exponent=self.tolerance_exponent)


def run_check(entry_id: str, mode: str, rc: RunSettings) -> IdentityReport:
    """Run one identity in one mode; evaluator errors become SKIPPED."""
    entry = get_entry(entry_id)
    if mode not in entry.modes:
        raise UnsupportedModeError(
            f"{entry_id} supports modes {entry.modes}, not {mode!r}")
    start = time.perf_counter()
    try:
        outcome = entry.check(mode, rc)
    except Exception as exc:  # evaluator failures are reported, not raised
        outcome = None
        report = IdentityReport(
            id=entry_id, mode=mode, status="SKIPPED",
            note=f"{type(exc).__name__}: {exc}", seed=rc.seed)
    if outcome is not None:
        report = IdentityReport(
            id=entry_id, mode=mode, status=outcome.status,
            params={k: str(v) for k, v in outcome.params.items()},
            max_abs_deviation=(None if outcome.deviation is None
                               else mp.nstr(mp.mpf(outcome.deviation), 6)),
            first_differing_coefficient=outcome.first_diff,
            note=outcome.note, seed=rc.seed)
    report.wall_time_ms = (time.perf_counter() - start) * 1000.0
    return report


def planned_checks(config: SuiteConfig):
    """(id, mode) pairs the configuration selects, in deterministic order."""
    entries = list_identities()
    if config.ids != "all":
        known = {e.id for e in entries}
        missing = [i for i in config.ids if i not in known]
        if missing:
            raise ConfigError(f"unknown identity ids: {missing}")
        entries = [e for e in entries if e.id in set(config.ids)]
    plan = []
    for entry in entries:
        for mode in entry.modes:
            if config.modes is None or mode in config.modes:
                plan.append((entry.id, mode))
    return plan


def _run_one(args):
    entry_id, mode, rc = args
    return run_check(entry_id, mode, rc)


def run_suite(config: SuiteConfig):
    """Run all selected checks; returns (reports, summary, exit_code).

    Checks are independent; with jobs > 1 they run in worker processes and
    the merged report order is by (id, mode) either way.  Exit code 0 unless
    some check FAILs (documented discrepancies do not fail the suite).
    """
    rc = config.settings()
    plan = planned_checks(config)
    if config.jobs > 1 and len(plan) > 1:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            reports = list(pool.map(_run_one,
                                    [(i, m, rc) for i, m in plan]))
    else:
        reports = [run_check(i, m, rc) for i, m in plan]
    reports.sort(key=IdentityReport.sort_key)
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    summary = {"total": len(reports), **counts}
    exit_code = 1 if counts.get("FAIL") else 0
    return reports, summary, exit_code


def run_info(config: SuiteConfig, timestamp: str | None = None) -> dict:
    return {
        "timestamp": timestamp or datetime.now(timezone.utc).isoformat(),
        "q": [str(q) for q in config.q],
        "precision": config.precision,
        "order": config.order,
        "seed": config.seed,
        "tolerance_exponent": config.tolerance_exponent,
    }


__all__ = ["SuiteConfig", "run_check", "run_suite", "planned_checks",
           "run_info", "emit_report"]
