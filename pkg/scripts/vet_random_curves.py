#!/usr/bin/env python3
"""Screen random hyperelliptic curves for decomposed Richelot isogenies.

A curve is rejected when some involution of P^1 permutes its branch points
without fixing any; the script reports how often that happens for random
curves and for curves planted in the x -> -x normal form.
"""
from __future__ import annotations

import argparse
import random
import time
from collections import Counter
from dataclasses import dataclass

from richelot.curves import new_curve
from richelot.errors import BoundExceeded, FieldTooLarge
from richelot.ff import make_field
from richelot.involution import SearchConfig, analyze
from richelot.upoly import Poly, is_squarefree


@dataclass(frozen=True)
class VetConfig:
    p: int = 7
    genus: int = 2
    curves: int = 100
    seed: int = 1
    max_ext: int = 6
    planted: bool = False


def random_curve(cfg: VetConfig, rng: random.Random):
    F = make_field(cfg.p)
    deg = 2 * cfg.genus + 2
    while True:
        if cfg.planted:
            x2 = Poly(F, [0, 0, 1])
            f = x2 - 1
            for a in rng.sample(range(2, cfg.p), cfg.genus):
                f = f * (x2 - a)
        else:
            f = Poly(F, [rng.randrange(cfg.p) for _ in range(deg)] + [1])
        if is_squarefree(f):
            return new_curve(F, f)


def run(cfg: VetConfig) -> Counter:
    rng = random.Random(cfg.seed)
    tally = Counter()
    t0 = time.perf_counter()
    for _ in range(cfg.curves):
        C = random_curve(cfg, rng)
        try:
            tally["decomposed" if analyze(C, SearchConfig(cfg.max_ext)) else "clean"] += 1
        except (BoundExceeded, FieldTooLarge):
            tally["unsplit within cap"] += 1
    tally["seconds"] = round(time.perf_counter() - t0, 2)
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(VetConfig()).items():
        kind = bool if isinstance(default, bool) else int
        if kind is bool:
            ap.add_argument(f"--{name.replace('_', '-')}", action="store_true")
        else:
            ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = VetConfig(**vars(ap.parse_args()))
    print(cfg)
    for k, v in sorted(run(cfg).items()):
        print(f"  {k}: {v}")


if __name__ == "__main__":
    main()
