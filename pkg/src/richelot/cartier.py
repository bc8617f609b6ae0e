"""Cartier-Manin matrices of y^2 = f(x) and superspeciality verdicts.

For a genus-g curve in characteristic p, entry (i, j) of the matrix is the
coefficient of x^(i p - j) in f(x)^((p-1)/2), 1 <= i, j <= g.  The Jacobian
is superspecial iff the matrix vanishes; in genus 1 that is the Hasse
invariant test for supersingularity.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence, Union

from .curves import HyperCurve, new_curve
from .errors import BudgetExceeded, RichelotError, WrongGenus
from .ff import Fq, make_field
from .upoly import Poly

# deg f * (p-1)/2 allowed for the powering; covers deg 14 with p < 2^13
POWER_BUDGET = 14 * ((1 << 13) - 1) // 2


@dataclass(frozen=True)
class CartierMatrix:
    entries: tuple[tuple[Fq, ...], ...]
    curve: HyperCurve
    exponent: int

    @property
    def genus(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not any(e for row in self.entries for e in row)

    def rows(self) -> list[list[list[int]]]:
        return [[list(e.c) for e in row] for row in self.entries]


def cartier_matrix(C: HyperCurve, budget: int = POWER_BUDGET) -> CartierMatrix:
    p = C.ctx.p
    e = (p - 1) // 2
    if C.f.degree * e > budget:
        raise BudgetExceeded(f"deg f * (p-1)/2 = {C.f.degree * e} exceeds budget {budget}")
    h = C.f ** e
    g = C.genus
    entries = tuple(tuple(h[i * p - j] for j in range(1, g + 1)) for i in range(1, g + 1))
    return CartierMatrix(entries, C, e)


def is_superspecial(C: HyperCurve, budget: int = POWER_BUDGET) -> bool:
    return cartier_matrix(C, budget).is_zero()


def is_supersingular_elliptic(C: HyperCurve) -> bool:
    if C.genus != 1:
        raise WrongGenus(f"expected an elliptic curve, got genus {C.genus}")
    return cartier_matrix(C).is_zero()


def factors_superspecial(factors: Iterable[HyperCurve]) -> bool:
    """Verdict for C given the factors of a separable decomposed isogeny."""
    return all(is_superspecial(F) for F in factors)


@dataclass(frozen=True)
class ScanRow:
    p: int
    superspecial: Optional[bool]
    error: Optional[str] = None


Family = Union[Sequence[int], Callable[[int], HyperCurve]]


def _family_curve(family: Family, p: int) -> HyperCurve:
    if callable(family):
        return family(p)
    F = make_field(p)
    return new_curve(F, Poly(F, list(family)))


def congruence_scan(family: Family, primes: Iterable[int], budget: int = POWER_BUDGET) -> list[ScanRow]:
    """Superspeciality verdict per prime.

    ``family`` is an integer coefficient list (ascending, reduced mod each p)
    or a callable p -> HyperCurve.  Primes where the reduction is singular or
    the budget is exceeded get an error entry instead of a verdict.
    """
    rows = []
    for p in primes:
        try:
            C = _family_curve(family, p)
            rows.append(ScanRow(p, is_superspecial(C, budget)))
        except RichelotError as exc:
            rows.append(ScanRow(p, None, f"{type(exc).__name__}: {exc}"))
    return rows


def scan_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["p", "p_mod_4", "p_mod_8", "p_mod_5", "is_superspecial"])
    for row in rows:
        verdict = row.error if row.superspecial is None else str(row.superspecial).lower()
        w.writerow([row.p, row.p % 4, row.p % 8, row.p % 5, verdict])
    return buf.getvalue()


def odd_primes(lo: int, hi: int) -> list[int]:
    """Odd primes in [lo, hi)."""
    from .ff import is_prime

    return [n for n in range(max(lo, 3), hi) if is_prime(n)]
