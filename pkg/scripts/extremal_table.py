"""Tabulate exact f_even, f_odd and f_oa for small n with both search modes."""

import argparse
import time
from dataclasses import dataclass

from oddsunflower.bounds import BNB_MAX_N, EXHAUSTIVE_MAX_N, KINDS, exact_extremal


@dataclass
class Config:
    max_n: int = BNB_MAX_N
    show_witnesses: bool = False


def run(cfg: Config) -> None:
    print(f"{'n':>2} " + " ".join(f"{k:>14}" for k in KINDS))
    for n in range(1, cfg.max_n + 1):
        row = []
        for kind in KINDS:
            t0 = time.perf_counter()
            rec = exact_extremal(n, kind, "bnb")
            if n <= EXHAUSTIVE_MAX_N:
                assert exact_extremal(n, kind, "exhaustive").value == rec.value
            row.append(f"{rec.value:>6} ({time.perf_counter() - t0:5.2f}s)")
            if cfg.show_witnesses:
                print(f"   n={n} {kind}: {rec.witness.as_lists()}")
        print(f"{n:>2} " + " ".join(row))


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    ap.add_argument("--witnesses", action="store_true")
    a = ap.parse_args()
    run(Config(a.max_n, a.witnesses))
