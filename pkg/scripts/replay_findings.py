"""Replay every counterexample found in a given mode and explain each one."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from hyperring.catalog import builtin_catalog
from hyperring.harness import replay, run_theorem_suite


@dataclass
class ReplayConfig:
    mode: str = "all"


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--mode", choices=("c-only", "all"), default=ReplayConfig.mode)
    cfg = ReplayConfig(p.parse_args().mode)
    catalog = builtin_catalog()
    failures = 0
    for v in run_theorem_suite(catalog, mode=cfg.mode):
        if v.outcome != "counterexample":
            continue
        hyp, concl = replay(catalog, v.theorem_id, v.ring, v.witness)
        status = "reproduced" if hyp and not concl else "NOT REPRODUCED"
        failures += status != "reproduced"
        print(f"{v.theorem_id:28} {v.ring:16} {status:15} {v.witness}")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
