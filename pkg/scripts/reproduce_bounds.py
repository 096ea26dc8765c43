"""Print the three growth-rate lower bounds at double and 60-digit precision."""

import argparse
from dataclasses import dataclass

import mpmath

from oddsunflower.bounds import THRESHOLDS, construction3_bound_hp, growth_bounds


@dataclass
class Config:
    digits: int = 12
    hp_dps: int = 60


def run(cfg: Config) -> None:
    for i, b in growth_bounds().items():
        verdict = "above" if b.value > THRESHOLDS[i] else "NOT above"
        print(f"bound {i}: {b.value:.{cfg.digits}f}  ({verdict} {THRESHOLDS[i]})  "
              f"log size {b.log_size:.6f}, universe {b.universe}")
    hp = construction3_bound_hp(cfg.hp_dps)
    print(f"bound 3 at {cfg.hp_dps} digits: {mpmath.nstr(hp, cfg.hp_dps - 5)}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=Config.digits)
    ap.add_argument("--hp-dps", type=int, default=Config.hp_dps)
    a = ap.parse_args()
    run(Config(a.digits, a.hp_dps))
