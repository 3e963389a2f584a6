"""Run the theorem suite in both modes and write JSON reports plus a summary."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field
from pathlib import Path

from hyperring.catalog import Limits, builtin_catalog
from hyperring.cli import emit
from hyperring.harness import (
    format_counterexamples, format_table, report_json, run_theorem_suite, vacuous_assertions,
)


@dataclass
class RunConfig:
    modes: tuple[str, ...] = ("c-only", "all")
    out_dir: Path = Path("results")
    include_identity_free: bool = False
    limits: Limits = field(default_factory=Limits)


def run(cfg: RunConfig) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    catalog = builtin_catalog(cfg.limits)
    worst = 0
    for mode in cfg.modes:
        start = time.perf_counter()
        verdicts = run_theorem_suite(catalog, mode=mode,
                                     include_identity_free=cfg.include_identity_free)
        elapsed = time.perf_counter() - start
        suffix = "-with-identity-free" if cfg.include_identity_free else ""
        path = cfg.out_dir / f"theorems-{mode}{suffix}.json"
        emit(report_json(verdicts, mode, catalog, cfg.include_identity_free), str(path))
        print(f"== mode {mode}: {len(catalog)} rings, {elapsed:.1f}s -> {path}")
        print(format_table(verdicts))
        print("vacuous:", ", ".join(vacuous_assertions(verdicts)) or "none")
        bad = format_counterexamples(verdicts)
        print("counterexamples:" + ("\n" + bad if bad else " none"))
        if bad:
            worst = 1
    return worst


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--out", type=Path, default=RunConfig.out_dir)
    p.add_argument("--mode", choices=("c-only", "all"), action="append")
    p.add_argument("--include-identity-free", action="store_true")
    p.add_argument("--max-n", type=int, default=Limits.max_n)
    a = p.parse_args()
    cfg = RunConfig(tuple(a.mode) if a.mode else RunConfig.modes, a.out,
                    a.include_identity_free, Limits(max_n=a.max_n))
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
