"""Tabulate the built-in catalog: sizes, identities, locality, ideal counts, γ*."""
from __future__ import annotations

import argparse
from dataclasses import dataclass

from hyperring.catalog import Limits, builtin_catalog
from hyperring.construct import gamma_star
from hyperring.hypercore import label, ring_flags
from hyperring.ideals import Hyperideal, ideal_masks, is_c_hyperideal, maximal_masks


@dataclass
class SummaryConfig:
    max_n: int = 12
    gamma_cap: int = 12


def rows(cfg: SummaryConfig):
    for e in builtin_catalog(Limits(max_n=cfg.max_n)):
        r = e.ring
        ideals = ideal_masks(r)
        c_count = sum(bool(is_c_hyperideal(Hyperideal(r, m))) for m in ideals)
        gamma = len(gamma_star(r).classes) if r.n <= cfg.gamma_cap else "-"
        flags = ring_flags(r)
        yield (e.name, r.n, label(r.identities) or "-", len(maximal_masks(r)) == 1,
               flags.strongly_distributive, len(ideals), c_count, gamma)


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--max-n", type=int, default=SummaryConfig.max_n)
    cfg = SummaryConfig(max_n=p.parse_args().max_n)
    head = ("ring", "n", "identities", "local", "str.dist", "ideals", "C-ideals", "|R/γ*|")
    table = [head] + [tuple(str(v) for v in row) for row in rows(cfg)]
    widths = [max(len(r[i]) for r in table) for i in range(len(head))]
    for row in table:
        print("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())


if __name__ == "__main__":
    main()
