"""Reproduction of the five worked examples, diffed against golden files.

Each ``example_5_*`` function recomputes the published quotient equations,
genus data and congruence laws and returns a JSON-ready dict.  The plane
quartics of 5.1 and 5.3 are never modelled as curves; instead every stated
quotient map is checked point by point over a finite field where its
coefficients exist, together with invariance under the relevant involution.
"""
from __future__ import annotations

import difflib
from importlib import resources
from typing import Callable, Optional

from .cartier import is_superspecial, is_supersingular_elliptic, odd_primes
from .curves import HyperCurve, branch_divisor, curve_from_ints, descend_curve
from .ff import FieldCtx, Fq, make_field
from .howe import build_howe, howe_input_from_curves, hyperelliptic_model, plane_model
from .involution import MobiusMap, analyze, cross_ratio, geometrically_isomorphic
from .report import SCHEMA_VERSION, dumps
from .upoly import Poly

NAMES = ("5.1", "5.2", "5.3", "5.4", "5.5")
# prime large enough that the integer coefficients of the plane models survive reduction
_WIDE_PRIME = 10007


def _check_map(points, phi, target, aut=None) -> dict:
    """phi sends points into the curve target(u, v) = 0; aut-orbits collapse."""
    checked = 0
    ok = True
    for P in points:
        img = phi(*P)
        if img is None:
            continue
        checked += 1
        if target(*img):
            ok = False
        if aut is not None:
            Q = aut(*P)
            if Q is not None and phi(*Q) is not None and phi(*Q) != img:
                ok = False
    return {"points_checked": checked, "holds": ok and checked > 0}


def _plane_points(F: FieldCtx, eq) -> list[tuple[Fq, Fq]]:
    elems = list(F.elements())
    return [(x, y) for x in elems for y in elems if not eq(x, y)]


def _hyper_points(f: Poly, F: FieldCtx) -> list[tuple[Fq, Fq]]:
    f = f.embed(F)
    out = []
    for x in F.elements():
        s = f(x).sqrt()
        if s is None:
            continue
        out.append((x, s))
        if s:
            out.append((x, -s))
    return out


def _fourth_root(a: Fq) -> Optional[Fq]:
    for c in a.ctx.elements():
        if c ** 4 == a:
            return c
    return None


def _ints_poly(coeffs) -> Poly:
    F = make_field(_WIDE_PRIME)
    return Poly(F, coeffs)


def example_5_1() -> dict:
    # x^4 + y^4 + x^2 y^2 + 1 = 0 with u = 3^(1/4) y / sqrt 2, v = x^2 + y^2/2
    for p in odd_primes(5, 200):
        F = make_field(p)
        r2, c = F(2).sqrt(), _fourth_root(F(3))
        if r2 is not None and c is not None:
            break
    quartic = lambda x, y: x ** 4 + y ** 4 + x * x * y * y + 1
    pts = _plane_points(F, quartic)
    half = F(2).inverse()
    e_sig = lambda u, v: v * v + u ** 4 + 1
    e_st = lambda u, v: v * v + u ** 4 + u * u + 1
    sigma = lambda x, y: (-x, y)
    tau = lambda x, y: (x, -y)
    checks = {
        "E_sigma: v^2 + u^4 + 1 = 0": _check_map(pts, lambda x, y: (c * y / r2, x * x + y * y * half), e_sig, sigma),
        "E_tau: v^2 + u^4 + 1 = 0": _check_map(pts, lambda x, y: (c * x / r2, y * y + x * x * half), e_sig, tau),
        "E_sigma_tau: v^2 + u^4 + u^2 + 1 = 0": _check_map(
            pts, lambda x, y: None if not x else (y / x, (x * x).inverse()), e_st,
            lambda x, y: (-x, -y)),
    }
    quotients = {
        "E_sigma": curve_from_ints(p, [-1, 0, 0, 0, -1]),
        "E_sigma_tau": curve_from_ints(p, [-1, 0, -1, 0, -1]),
    }
    return {
        "example": "5.1",
        "curve": "x^4 + y^4 + x^2 y^2 + 1 = 0",
        "verification_prime": p,
        "quotient_maps": checks,
        "quotient_genera": {name: C.genus for name, C in quotients.items()},
        "genus_sum": 2 * quotients["E_sigma"].genus + quotients["E_sigma_tau"].genus,
        "completely_decomposed": True,
    }


def _j_invariant(E: HyperCurve) -> Fq:
    """j of a genus-1 curve from the cross-ratio of its four branch points."""
    B, F = branch_divisor(E)
    lam = cross_ratio(*B.points, F)
    return 256 * (lam * lam - lam + 1) ** 3 / (lam * lam * (lam - 1) ** 2)


def _elem_text(a: Fq) -> str:
    return str(int(a)) if a.in_prime_field() else repr(a)


def _named_decompositions(p: int) -> tuple[dict, FieldCtx, list]:
    C = curve_from_ints(p, [1, 0, 0, 0, 1, 0, 0, 0, 1])
    refs = {
        "v^2 = u^4 + u^2 + 1": curve_from_ints(p, [1, 0, 1, 0, 1]),
        "v^2 = u(u^4 + u^2 + 1)": curve_from_ints(p, [0, 1, 0, 1, 0, 1]),
        "v^2 = u^4 - 4u^2 + 3": curve_from_ints(p, [3, 0, -4, 0, 1]),
        "v^2 = u^4 + 4u^2 + 3": curve_from_ints(p, [3, 0, 4, 0, 1]),
    }
    witnesses = analyze(C)
    F = witnesses[0].involution.ctx
    named = {
        "sigma: x -> -x": MobiusMap.negation(F),
        "tau: x -> 1/x": MobiusMap.reciprocal(F),
        "sigma*tau: x -> -1/x": MobiusMap.negation(F) @ MobiusMap.reciprocal(F),
    }
    by_map = {dw.involution.m: dw for dw in witnesses}
    out = {}
    for label, m in named.items():
        dw = by_map[m]
        out[label] = {
            "genus_split": list(dw.genus_split),
            "genus_sum": sum(dw.genus_split),
            "C_sigma_j": _elem_text(_j_invariant(dw.C_sigma)),
            "C_sigma_isomorphic_to": [n for n, R in refs.items() if geometrically_isomorphic(dw.C_sigma, R)],
            "C_tau_isomorphic_to": [n for n, R in refs.items() if geometrically_isomorphic(dw.C_tau, R)],
        }
    ref_j = {n: _elem_text(_j_invariant(R)) for n, R in refs.items() if R.genus == 1}
    return {"field": str(F), "involutions_found": len(witnesses), "reference_j": ref_j,
            "decompositions": out}, F, witnesses


def example_5_2() -> dict:
    p = 11
    C = curve_from_ints(p, [1, 0, 0, 0, 1, 0, 0, 0, 1])
    small, F, _ = _named_decompositions(p)
    # mod 11 all three elliptic quotients share j = 2; mod 1009 (where x^8 + x^4 + 1
    # already splits) E_sigma and E_tau are distinguished by j
    wide, _, _ = _named_decompositions(1009)

    pts = _hyper_points(C.f, F)
    u4 = lambda c: lambda u, v: v * v - (u ** 4 + c * u * u + 3)
    maps = {
        "E_sigma: (x^2, y) -> v^2 = u^4 + u^2 + 1": _check_map(
            pts, lambda x, y: (x * x, y), lambda u, v: v * v - (u ** 4 + u * u + 1), lambda x, y: (-x, y)),
        "C_sigma_iota: (x^2, x y) -> v^2 = u(u^4 + u^2 + 1)": _check_map(
            pts, lambda x, y: (x * x, x * y), lambda u, v: v * v - u * (u ** 4 + u * u + 1), lambda x, y: (-x, -y)),
        "E_tau: (x + 1/x, y/x^2) -> v^2 = u^4 - 4u^2 + 3": _check_map(
            pts, lambda x, y: None if not x else (x + x.inverse(), y / (x * x)), u4(-4),
            lambda x, y: None if not x else (x.inverse(), y / x ** 4)),
        "E_sigma_tau: (x - 1/x, y/x^2) -> v^2 = u^4 + 4u^2 + 3": _check_map(
            pts, lambda x, y: None if not x else (x - x.inverse(), y / (x * x)), u4(4),
            lambda x, y: None if not x else (-x.inverse(), y / x ** 4)),
    }
    elliptic = [d["genus_split"][0] for d in small["decompositions"].values()]
    return {
        "example": "5.2",
        "curve": C.equation(),
        "field": str(C.ctx),
        "genus": C.genus,
        "over_p_11": small,
        "over_p_1009": wide,
        "quotient_maps": maps,
        "complete_decomposition_genera": elliptic,
        "complete_decomposition_sum": sum(elliptic),
    }


def example_5_3() -> dict:
    # Fermat quartic x^4 + y^4 + 1 = 0; every quotient is v^2 + u^4 + 1 = 0
    p = 13
    F = make_field(p)
    pts = _plane_points(F, lambda x, y: x ** 4 + y ** 4 + 1)
    e = lambda u, v: v * v + u ** 4 + 1
    checks = {
        "E_sigma: (y, x^2)": _check_map(pts, lambda x, y: (y, x * x), e, lambda x, y: (-x, y)),
        "E_tau: (x, y^2)": _check_map(pts, lambda x, y: (x, y * y), e, lambda x, y: (x, -y)),
        "E_sigma_tau: (y/x, 1/x^2)": _check_map(
            pts, lambda x, y: None if not x else (y / x, (x * x).inverse()), e, lambda x, y: (-x, -y)),
    }
    primes = odd_primes(3, 200)
    iso = {}
    for q in odd_primes(5, 60):
        iso[q] = geometrically_isomorphic(curve_from_ints(q, [-1, 0, 0, 0, -1]), curve_from_ints(q, [0, -1, 0, 1]))
    e0 = {q: is_supersingular_elliptic(curve_from_ints(q, [0, -1, 0, 1])) for q in primes}
    quartic_model = {q: is_supersingular_elliptic(curve_from_ints(q, [-1, 0, 0, 0, -1])) for q in primes}
    return {
        "example": "5.3",
        "curve": "x^4 + y^4 + 1 = 0",
        "verification_prime": p,
        "quotient_maps": checks,
        "E_isomorphic_to_E0 (y^2 = x^3 - x)": all(iso.values()),
        "isomorphism_primes_checked": sorted(iso),
        "E0_supersingular_primes_below_200": [q for q in primes if e0[q]],
        "law_p_mod_4_eq_3_holds": all(e0[q] == (q % 4 == 3) for q in primes),
        "quartic_model_agrees": all(e0[q] == quartic_model[q] for q in primes),
        "superspecial_when_p_mod_4_eq_3": all(e0[q] for q in primes if q % 4 == 3),
    }


def _howe_summary(rep) -> dict:
    return {
        "r": rep.r, "g1": rep.g1, "g2": rep.g2, "g3": rep.g3, "gC": rep.gC,
        "hyperelliptic": rep.hyperelliptic,
        "C3": "y3^2 = " + rep.C3.f.descend().format("x"),
        "jacobian_factors": len(rep.decomposition),
    }


def _plane_model_text(f1: list[int], f2: list[int]) -> dict:
    A, B = plane_model(_ints_poly(f1), _ints_poly(f2))
    return {"A(x)": A.format(), "B(x)": B.format(), "equation": "y^4 + A(x) y^2 + B(x) = 0"}


def example_5_4() -> dict:
    p = 7
    C1 = curve_from_ints(p, [1, 0, 0, 0, 1])
    C2 = curve_from_ints(p, [-1, 0, 0, 0, 1])
    rep = build_howe(howe_input_from_curves(C1, C2))
    primes = [7, 17, 23, 31, 41, 47]
    c3 = {q: is_superspecial(curve_from_ints(q, [-1, 0, 0, 0, 0, 0, 0, 0, 1])) for q in primes}
    e1 = {q: is_supersingular_elliptic(curve_from_ints(q, [1, 0, 0, 0, 1])) for q in odd_primes(3, 100)}
    e2 = {q: is_supersingular_elliptic(curve_from_ints(q, [-1, 0, 0, 0, 1])) for q in odd_primes(3, 100)}
    all_p = odd_primes(3, 100)
    whole = {
        q: (e1[q] and e2[q] and is_superspecial(curve_from_ints(q, [-1, 0, 0, 0, 0, 0, 0, 0, 1])))
        for q in all_p
    }
    model = _plane_model_text([1, 0, 0, 0, 1], [-1, 0, 0, 0, 1])
    return {
        "example": "5.4",
        "C1": "y1^2 = x^4 + 1",
        "C2": "y2^2 = x^4 - 1",
        "howe": _howe_summary(rep),
        "plane_model": model,
        "C3_superspecial": {str(q): c3[q] for q in primes},
        "C1_C2_supersingular_iff_p_mod_4_eq_3": all(e1[q] == e2[q] == (q % 4 == 3) for q in all_p),
        "C_superspecial_primes_below_100": [q for q in all_p if whole[q]],
        "law_p_mod_8_eq_7_holds": all(whole[q] == (q % 8 == 7) for q in all_p),
    }


def example_5_5() -> dict:
    p = 19
    C1 = curve_from_ints(p, [1, 0, 0, 0, 0, 1])
    C2 = curve_from_ints(p, [0, 1, 0, 0, 0, 0, 1])
    rep = build_howe(howe_input_from_curves(C1, C2))
    model = descend_curve(hyperelliptic_model(rep))
    A, B = plane_model(_ints_poly([1, 0, 0, 0, 0, 1]), _ints_poly([0, 1, 0, 0, 0, 0, 1]))
    f1, x = _ints_poly([1, 0, 0, 0, 0, 1]), _ints_poly([0, 1])
    expect_A = (f1 * (x + 1)).scale(-2)
    expect_B = f1 * f1 * (x - 1) * (x - 1)
    all_p = odd_primes(7, 100)
    ss = {q: is_superspecial(curve_from_ints(q, [1, 0, 0, 0, 0, 1])) for q in all_p}
    ss2 = {q: is_superspecial(curve_from_ints(q, [0, 1, 0, 0, 0, 0, 1])) for q in all_p}
    return {
        "example": "5.5",
        "C1": "y1^2 = x^5 + 1",
        "C2": "y2^2 = x^6 + x",
        "C1_isomorphic_to_C2": geometrically_isomorphic(C1, C2),
        "howe": _howe_summary(rep),
        "model_over_C3": {"equation": model.equation("y3", "z"), "genus": model.genus},
        "plane_model": {
            "A(x)": A.format(), "B(x)": B.format(),
            "matches -2(x^5+1)(x+1), (x^5+1)^2 (x-1)^2": A == expect_A and B == expect_B,
        },
        "factors_superspecial_primes_7_to_100": [q for q in all_p if ss[q] and ss2[q]],
        "law_p_mod_5_eq_4_holds": all((ss[q] and ss2[q]) == (q % 5 == 4) for q in all_p),
    }


EXAMPLES: dict[str, Callable[[], dict]] = {
    "5.1": example_5_1,
    "5.2": example_5_2,
    "5.3": example_5_3,
    "5.4": example_5_4,
    "5.5": example_5_5,
}


def render(name: str) -> str:
    body = EXAMPLES[name]()
    return dumps({"schema_version": SCHEMA_VERSION, "command": "examples", "input": {"example": name}, "result": body})


def golden_name(name: str) -> str:
    return "example" + name.replace(".", "_") + ".json"


def golden_text(name: str) -> str:
    return resources.files("richelot").joinpath("golden", golden_name(name)).read_text()


def diff_against_golden(name: str) -> tuple[str, list[str]]:
    """(fresh output, unified diff lines; empty when identical)."""
    fresh = render(name)
    try:
        gold = golden_text(name)
    except FileNotFoundError:
        gold = ""
    diff = list(difflib.unified_diff(
        gold.splitlines(keepends=True), fresh.splitlines(keepends=True),
        fromfile=f"golden/{golden_name(name)}", tofile=f"computed/{golden_name(name)}",
    ))
    return fresh, diff
