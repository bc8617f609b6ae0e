#!/usr/bin/env python3
"""Genus table of generalized Howe curves, built from concrete branch data.

For each (g1, g2, r) the fiber product is constructed over F_p from the
first points of F_p and its genera are read off the resulting curves.
"""
from __future__ import annotations

import argparse

from richelot.ff import make_field
from richelot.howe import HoweInput, build_howe, hyperelliptic_model


def table(max_genus: int, p: int):
    F = make_field(p)
    pool = [F(i) for i in range(p)]
    for g1 in range(1, max_genus + 1):
        for g2 in range(g1, max_genus + 1):
            n1, n2 = 2 * g1 + 2, 2 * g2 + 2
            for r in range(0, min(n1, g1 + g2 + 1) + 1):
                if n1 == n2 == r:
                    continue
                pts = pool[: n1 + n2 - r]
                rep = build_howe(HoweInput(F, pts[:r], pts[r:n1], pts[n1:]))
                model = hyperelliptic_model(rep).genus if rep.hyperelliptic else "-"
                yield g1, g2, r, rep.gC, rep.g3, rep.hyperelliptic, model, rep.within_criterion


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-genus", type=int, default=5)
    ap.add_argument("--p", type=int, default=101)
    a = ap.parse_args()
    print(f"{'g1':>3}{'g2':>4}{'r':>4}{'gC':>5}{'g3':>4}  hyperelliptic  model-genus  criterion-applies")
    for g1, g2, r, gC, g3, hyp, model, crit in table(a.max_genus, a.p):
        print(f"{g1:>3}{g2:>4}{r:>4}{gC:>5}{g3:>4}  {str(hyp):13s}  {str(model):11s}  {crit}")


if __name__ == "__main__":
    main()
