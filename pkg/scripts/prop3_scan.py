"""Compare monoid-level and universe-level equivalence for all short singleton words.

Prints every disagreeing pair with the first monoid word that separates
the two prefixes.
"""

from __future__ import annotations

import argparse
import itertools
from dataclasses import dataclass

from nctop.monoid import check_prop3, fmt, singleton_words
from nctop.opens import Universe
from nctop.quiver import FIXTURES
from nctop.rep import enumerate_universe


@dataclass
class ScanConfig:
    fixture: str = "A2"
    p: int = 2
    max_dim: int = 3
    max_word_len: int = 2
    star_bound: int = 4


def scan(cfg: ScanConfig) -> int:
    q = FIXTURES[cfg.fixture]()
    u = Universe(enumerate_universe(q, cfg.p, cfg.max_dim, split_only=True))
    disagreements = 0
    for fl in ("l", "r"):
        words = singleton_words(q, cfg.max_word_len, fl)
        for w, w2 in itertools.combinations(words, 2):
            rep = check_prop3(w, w2, q, cfg.p, u, cfg.star_bound)
            if rep.agree:
                continue
            disagreements += 1
            line = f"{fl}: {w} vs {w2}  universe={rep.universe_equiv} monoid={rep.monoid_equiv}"
            if rep.monoid_witness is not None:
                v = rep.monoid_witness
                line += f"  separating word {fmt(v)}"
            print(line)
    print(f"{cfg.fixture}: {disagreements} disagreeing pairs (universe dim <= {cfg.max_dim}, star bound {cfg.star_bound})")
    return disagreements


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("fixture", nargs="?", default="A2")
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--max-dim", type=int, default=3)
    ap.add_argument("--max-word-len", type=int, default=2)
    ap.add_argument("--star-bound", type=int, default=4)
    a = ap.parse_args()
    n = scan(ScanConfig(a.fixture, a.p, a.max_dim, a.max_word_len, a.star_bound))
    raise SystemExit(0 if n == 0 else 1)


if __name__ == "__main__":
    main()
