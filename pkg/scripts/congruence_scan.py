#!/usr/bin/env python3
"""Superspeciality scans for the three worked families, with their congruence laws.

    python scripts/congruence_scan.py --hi 400 --out results/
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from richelot.cartier import congruence_scan, odd_primes, scan_csv


@dataclass(frozen=True)
class Family:
    name: str
    coeffs: tuple[int, ...]
    law: Callable[[int], bool]
    law_text: str


FAMILIES = (
    Family("x3_minus_x", (0, -1, 0, 1), lambda p: p % 4 == 3, "p = 3 mod 4"),
    Family("x8_minus_1", (-1, 0, 0, 0, 0, 0, 0, 0, 1), lambda p: p % 8 == 7, "p = 7 mod 8"),
    Family("x5_plus_1", (1, 0, 0, 0, 0, 1), lambda p: p % 5 == 4, "p = 4 mod 5"),
)


@dataclass(frozen=True)
class ScanConfig:
    lo: int = 3
    hi: int = 200
    out: Path | None = None


def run(cfg: ScanConfig) -> int:
    bad = 0
    for fam in FAMILIES:
        rows = congruence_scan(list(fam.coeffs), odd_primes(cfg.lo, cfg.hi))
        scored = [r for r in rows if r.superspecial is not None]
        misses = [r.p for r in scored if r.superspecial != fam.law(r.p)]
        skipped = [r.p for r in rows if r.superspecial is None]
        bad += len(misses)
        print(f"{fam.name:12s} law {fam.law_text:12s} primes {len(scored):4d} "
              f"superspecial {sum(r.superspecial for r in scored):4d} "
              f"violations {misses} singular {skipped}")
        if cfg.out:
            cfg.out.mkdir(parents=True, exist_ok=True)
            (cfg.out / f"{fam.name}.csv").write_text(scan_csv(rows))
    return 1 if bad else 0


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--lo", type=int, default=ScanConfig.lo)
    ap.add_argument("--hi", type=int, default=ScanConfig.hi)
    ap.add_argument("--out", type=Path)
    a = ap.parse_args()
    return run(ScanConfig(a.lo, a.hi, a.out))


if __name__ == "__main__":
    raise SystemExit(main())
