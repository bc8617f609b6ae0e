"""Generalized Howe curves: fiber products of two hyperelliptic covers of P^1.

C1 and C2 branch over 2g1+2 and 2g2+2 points of P^1, r of them shared.  The
normalized fiber product C carries commuting involutions whose quotients are
C1, C2 and C3, where C3 branches over the symmetric difference of the two
branch sets.  The genus bookkeeping is

    g(C)  = 2(g1 + g2) + 1 - r
    g(C3) = g1 + g2 + 1 - r
    g(C)  = g1 + g2 + g3

and for g(C) >= 4, C is hyperelliptic exactly when C3 is rational.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .curves import (
    INF,
    HyperCurve,
    ProjPoint,
    branch_divisor,
    curve_from_points,
    embed_point,
    new_curve,
    point_key,
)
from .errors import (
    BoundExceeded,
    ConventionViolation,
    DuplicatePoints,
    IdenticalBranchSets,
    RangeViolation,
)
from .ff import FieldCtx, Fq, common_field, embed
from .involution import (
    DEFAULT_MAX_EXT,
    InvolutionWitness,
    MobiusMap,
    decompose,
)
from .upoly import Poly

HYPERELLIPTIC_CRITERION_MIN_GENUS = 4


@dataclass(frozen=True)
class HoweInput:
    """Branch data of C1 and C2 over a common field.

    Each list holds points of P^1 (INF allowed, standing for an odd-degree
    model).  ``lead1``/``lead2`` are the leading coefficients of the two
    right-hand sides, so twists survive the round trip.
    """

    ctx: FieldCtx
    shared: tuple[ProjPoint, ...]
    extra1: tuple[ProjPoint, ...]
    extra2: tuple[ProjPoint, ...]
    lead1: Fq = None
    lead2: Fq = None

    def __post_init__(self):
        object.__setattr__(self, "shared", tuple(self.shared))
        object.__setattr__(self, "extra1", tuple(self.extra1))
        object.__setattr__(self, "extra2", tuple(self.extra2))
        if self.lead1 is None:
            object.__setattr__(self, "lead1", self.ctx.one)
        if self.lead2 is None:
            object.__setattr__(self, "lead2", self.ctx.one)

    @property
    def r(self) -> int:
        return len(self.shared)


@dataclass(frozen=True)
class RationalCurve:
    """y^2 = f(x) with deg f <= 2: a conic, isomorphic to P^1."""

    ctx: FieldCtx
    f: Poly
    genus: int = 0

    def equation(self, x: str = "x", y: str = "y") -> str:
        return f"{y}^2 = {self.f.format(x)}"


@dataclass(frozen=True)
class HoweReport:
    C1: HyperCurve
    C2: HyperCurve
    C3: Union[HyperCurve, RationalCurve]
    r: int
    g1: int
    g2: int
    g3: int
    gC: int
    hyperelliptic: bool
    within_criterion: bool
    input: HoweInput = field(repr=False)

    @property
    def decomposition(self) -> tuple[HyperCurve, ...]:
        """Factors of the Jacobian product; a rational C3 contributes nothing."""
        if isinstance(self.C3, RationalCurve):
            return (self.C1, self.C2)
        return (self.C1, self.C2, self.C3)

    @property
    def notes(self) -> list[str]:
        out = []
        if not self.within_criterion:
            out.append(
                f"g(C) = {self.gC} < {HYPERELLIPTIC_CRITERION_MIN_GENUS}: hyperelliptic flag "
                "is outside the range of the hyperellipticity criterion"
            )
        if isinstance(self.C3, RationalCurve):
            out.append("C3 is rational; J(C) splits as J(C1) x J(C2)")
        return out


def genus_formulas(g1: int, g2: int, r: int) -> tuple[int, int, bool]:
    """(g(C), g(C3), hyperelliptic) for the fiber product data (g1, g2, r)."""
    if g1 < 1 or g2 < 1:
        raise RangeViolation(f"genera must be positive, got ({g1}, {g2})")
    if r < 0 or r > g1 + g2 + 1:
        raise RangeViolation(f"r = {r} outside 0..{g1 + g2 + 1}; the fiber product is reducible")
    gC = 2 * (g1 + g2) + 1 - r
    g3 = g1 + g2 + 1 - r
    return gC, g3, g3 == 0


def _check_points(inp: HoweInput) -> None:
    seen = set()
    for P in inp.shared + inp.extra1 + inp.extra2:
        if P in seen:
            raise DuplicatePoints(f"{P!r} appears twice in the branch data")
        seen.add(P)


def build_howe(inp: HoweInput) -> HoweReport:
    _check_points(inp)
    n1 = inp.r + len(inp.extra1)
    n2 = inp.r + len(inp.extra2)
    if n1 % 2 or n2 % 2:
        raise ConventionViolation(f"branch sets of sizes {n1}, {n2}; both must be even")
    if n1 < 4 or n2 < 4:
        raise ConventionViolation(f"branch sets of sizes {n1}, {n2}; both curves need genus >= 1")
    if not inp.extra1 and not inp.extra2:
        raise IdenticalBranchSets("C1 and C2 branch over the same points; the fiber product is reducible")
    if n1 > n2:
        inp = HoweInput(inp.ctx, inp.shared, inp.extra2, inp.extra1, inp.lead2, inp.lead1)
        n1, n2 = n2, n1
    g1, g2 = n1 // 2 - 1, n2 // 2 - 1
    gC, g3, hyper = genus_formulas(g1, g2, inp.r)

    ctx = inp.ctx
    C1 = new_curve(ctx, curve_from_points(ctx, inp.shared + inp.extra1, inp.lead1))
    C2 = new_curve(ctx, curve_from_points(ctx, inp.shared + inp.extra2, inp.lead2))
    f3 = curve_from_points(ctx, inp.extra1 + inp.extra2, inp.lead1 * inp.lead2)
    C3 = RationalCurve(ctx, f3) if g3 == 0 else new_curve(ctx, f3)
    assert C3.genus == g3 and C1.genus == g1 and C2.genus == g2
    assert gC == g1 + g2 + g3
    return HoweReport(
        C1, C2, C3, inp.r, g1, g2, g3, gC, hyper,
        gC >= HYPERELLIPTIC_CRITERION_MIN_GENUS, inp,
    )


def howe_input_from_curves(C1: HyperCurve, C2: HyperCurve, max_ext: int = DEFAULT_MAX_EXT) -> HoweInput:
    """Split the two branch divisors, over a common splitting field, into
    shared points and the points private to each curve."""
    B1, F1 = branch_divisor(C1, max_ext)
    B2, F2 = branch_divisor(C2, max_ext)
    W = common_field(F1, F2)
    if W.k > max_ext:
        raise BoundExceeded(f"common splitting field {W} exceeds cap {max_ext}")
    P1 = [embed_point(P, W) for P in B1.points]
    P2 = [embed_point(P, W) for P in B2.points]
    s2 = set(P2)
    shared = [P for P in P1 if P in s2]
    s1 = set(P1)
    return HoweInput(
        W,
        tuple(sorted(shared, key=point_key)),
        tuple(P for P in P1 if P not in s2),
        tuple(P for P in P2 if P not in s1),
        embed(C1.f.lc, W),
        embed(C2.f.lc, W),
    )


def roundtrip_from_involution(C: HyperCurve, w: InvolutionWitness) -> HoweReport:
    """C rebuilt as the fiber product of its two quotients C_sigma and C_tau."""
    dw = decompose(C, w)
    W = w.ctx
    one = W.one
    b_sigma = [one, *w.normal_params] + ([INF] if dw.C_sigma.f.degree % 2 else [])
    b_tau = [W.zero, one, *w.normal_params] + ([INF] if dw.C_tau.f.degree % 2 else [])
    s_tau = set(b_tau)
    s_sigma = set(b_sigma)
    inp = HoweInput(
        W,
        tuple(sorted((P for P in b_sigma if P in s_tau), key=point_key)),
        tuple(P for P in b_sigma if P not in s_tau),
        tuple(P for P in b_tau if P not in s_sigma),
    )
    rep = build_howe(inp)
    if not rep.hyperelliptic or rep.r != rep.g1 + rep.g2 + 1 or rep.gC != C.genus:
        raise AssertionError(f"round trip failed: r={rep.r}, gC={rep.gC}, g(C)={C.genus}")
    return rep


def hyperelliptic_model(rep: HoweReport) -> HyperCurve:
    """For rational C3, the double cover C -> C3 = P^1 as z^2 = F(t).

    C3 branches at two points e1, e2; a Mobius map mu sends them to 0 and inf,
    so x -> mu(x) = t^2 parametrizes C3.  C -> C3 then branches exactly over
    the preimages of the r shared points: z^2 = prod (t^2 - mu(a)).
    """
    if not isinstance(rep.C3, RationalCurve):
        raise ValueError("C3 is not rational; C is not hyperelliptic")
    W = rep.input.ctx
    e1, e2 = sorted(rep.input.extra1 + rep.input.extra2, key=point_key)
    one, zero = W.one, W.zero
    mu = MobiusMap.of(one, -e1, zero, one) if e2 is INF else MobiusMap.of(one, -e1, one, -e2)
    t2 = Poly(W, [0, 0, 1])
    F = Poly(W, [1])
    for a in rep.input.shared:
        F = F * (t2 - mu(a))
    return new_curve(W, F)


def plane_model(f1: Poly, f2: Poly) -> tuple[Poly, Poly]:
    """With y = y1 + y2, the fiber product satisfies y^4 + A(x) y^2 + B(x) = 0.

    From y^2 = f1 + f2 + 2 y1 y2 and (y1 y2)^2 = f1 f2:
    A = -2 (f1 + f2), B = (f1 - f2)^2.
    """
    return (f1 + f2).scale(-2), (f1 - f2) * (f1 - f2)
