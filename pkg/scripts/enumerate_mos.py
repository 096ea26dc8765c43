"""Enumerate k-uniform minimal odd-sunflowers and print each class."""

import argparse
import time
from dataclasses import dataclass
from typing import Optional

from oddsunflower.mos import MosSearchConfig, enumerate_mos


@dataclass
class Config:
    k: int = 3
    max_members: Optional[int] = None
    max_universe: Optional[int] = None


def run(cfg: Config) -> None:
    search = MosSearchConfig.default(cfg.k) if cfg.k <= 3 else None
    search = MosSearchConfig(
        cfg.k,
        cfg.max_members or search.max_members,
        cfg.max_universe or search.max_universe,
    )
    t0 = time.perf_counter()
    classes = enumerate_mos(search)
    print(f"k={cfg.k} members<={search.max_members} universe<={search.max_universe}: "
          f"{len(classes)} classes in {time.perf_counter() - t0:.2f}s")
    for c in classes:
        sets = " ".join("".join(map(str, s)) for s in c.family.as_lists())
        print(f"  {sets}   |Aut| = {c.automorphism_count}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("k", type=int, nargs="?", default=Config.k)
    ap.add_argument("--max-members", type=int)
    ap.add_argument("--max-universe", type=int)
    a = ap.parse_args()
    if a.k > 3 and (a.max_members is None or a.max_universe is None):
        ap.error("k > 3 needs --max-members and --max-universe")
    run(Config(a.k, a.max_members, a.max_universe))
