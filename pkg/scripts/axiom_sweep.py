"""Run the axiom table for every fixture and flavor and print a summary grid."""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from nctop.kernel import ALL_AXIOMS, axioms_for, check_axiom
from nctop.opens import Universe, as_lattice
from nctop.quiver import FIXTURES
from nctop.rep import enumerate_universe


@dataclass
class SweepConfig:
    fixtures: list[str] = field(default_factory=lambda: ["A2", "K2", "N2", "L1"])
    flavors: list[str] = field(default_factory=lambda: ["l", "r", "o"])
    p: int = 2
    max_dim: int = 3
    max_word_len: int = 2


KIND = {"l": "left", "r": "right", "o": "full"}


def sweep(cfg: SweepConfig) -> bool:
    all_ok = True
    for name in cfg.fixtures:
        q = FIXTURES[name]()
        u = Universe(enumerate_universe(q, cfg.p, cfg.max_dim, split_only=True))
        for fl in cfg.flavors:
            start = time.perf_counter()
            lat = as_lattice(q, cfg.p, fl, u)
            sample, covers = lat.sample(cfg.max_word_len), lat.covers()
            required = set(axioms_for(KIND[fl]))
            cells = []
            for ax in ALL_AXIOMS:
                r = check_axiom(lat, ax, sample, covers)
                mark = "." if r.passed else ("X" if ax in required else "x")
                all_ok &= r.passed or ax not in required or fl == "o"
                cells.append(f"{ax}:{mark}{len(r.violations) or ''}")
            dt = time.perf_counter() - start
            print(f"{name:3} {fl}  |U|={len(u):3} |S|={len(sample):3} {dt:5.1f}s  " + " ".join(cells))
    print("legend: . pass, X required column violated, x probe column fails")
    return all_ok


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--fixtures", nargs="+", default=SweepConfig().fixtures)
    ap.add_argument("--flavors", nargs="+", default=SweepConfig().flavors)
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--max-dim", type=int, default=3)
    ap.add_argument("--max-word-len", type=int, default=2)
    a = ap.parse_args()
    ok = sweep(SweepConfig(a.fixtures, a.flavors, a.p, a.max_dim, a.max_word_len))
    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
