"""JSON records for analyze / howe / cartier reports.

Every report is a plain dict dumped with sorted keys, so identical inputs give
byte-identical output.  Field elements are written as lists of k integers,
the point at infinity as the string "inf".
"""
from __future__ import annotations

import json
from typing import Any

from .cartier import CartierMatrix, ScanRow
from .curves import (
    INF,
    HyperCurve,
    curve_from_record,
    curve_record,
    descend_curve,
    elem_record,
    field_from_record,
    field_record,
    point_from_record,
    point_record,
    poly_record,
)
from .ff import FieldCtx
from .howe import HoweInput, HoweReport, RationalCurve, hyperelliptic_model
from .involution import DecompositionWitness, MobiusMap, klein_triples

SCHEMA_VERSION = 1


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def mobius_record(m: MobiusMap) -> list[list[int]]:
    return [elem_record(v) for v in m.matrix()]


def mobius_from_record(ctx: FieldCtx, rec) -> MobiusMap:
    return MobiusMap.of(*(ctx.from_coeffs(v) for v in rec))


def witness_record(dw: DecompositionWitness) -> dict:
    w = dw.involution
    return {
        "field": field_record(w.ctx),
        "involution": mobius_record(w.m),
        "pairing": [[point_record(P), point_record(Q)] for P, Q in w.pairing],
        "fixed_points": [point_record(P) for P in w.fixed_points],
        "conjugator": mobius_record(w.conjugator),
        "normal_params": [elem_record(a) for a in w.normal_params],
        "cross_ratio_invariants": [elem_record(a) for a in w.cross_ratio_invariants()],
        "genus_split": list(dw.genus_split),
        "C_sigma": curve_record(dw.C_sigma),
        "C_tau": curve_record(dw.C_tau),
        "equations": {
            "normal_form": "y^2 = " + w.normal_form().format("x"),
            "C_sigma": dw.C_sigma.equation("u", "v"),
            "C_tau": dw.C_tau.equation("u", "v"),
        },
    }


def witness_from_record(rec: dict) -> dict:
    """Parse a witness record back into field-level objects."""
    ctx = field_from_record(rec["field"])
    return {
        "field": ctx,
        "involution": mobius_from_record(ctx, rec["involution"]),
        "pairing": tuple(tuple(point_from_record(ctx, P) for P in pair) for pair in rec["pairing"]),
        "normal_params": tuple(ctx.from_coeffs(a) for a in rec["normal_params"]),
        "C_sigma": curve_from_record(rec["C_sigma"]),
        "C_tau": curve_from_record(rec["C_tau"]),
        "genus_split": tuple(rec["genus_split"]),
    }


def analyze_report(C: HyperCurve, searched: FieldCtx, witnesses: list[DecompositionWitness]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "analyze",
        "input": curve_record(C),
        "genus": C.genus,
        "searched_field": field_record(searched),
        "verdict": "DECOMPOSED" if witnesses else "NO-DECOMPOSITION-FOUND",
        "witnesses": [witness_record(dw) for dw in witnesses],
        "klein_four_subgroups": _klein_records(witnesses),
    }


def _klein_records(witnesses: list[DecompositionWitness]) -> list[dict]:
    """Commuting triples {a, b, ab} of found involutions.  The C_sigma
    quotients of the three are the candidate three-factor decomposition."""
    if not witnesses:
        return []
    top = max((dw.involution.ctx for dw in witnesses), key=lambda F: F.k)
    maps = [dw.involution.m.embed(top) for dw in witnesses]
    out = []
    for triple in klein_triples(maps):
        genera = [witnesses[i].genus_split[0] for i in triple]
        out.append({"witnesses": list(triple), "C_sigma_genera": genera, "genus_sum": sum(genera)})
    return out


def howe_input_record(inp: HoweInput) -> dict:
    rec = field_record(inp.ctx)
    rec.update(
        shared=[point_record(P) for P in inp.shared],
        extra1=[point_record(P) for P in inp.extra1],
        extra2=[point_record(P) for P in inp.extra2],
        lead1=elem_record(inp.lead1),
        lead2=elem_record(inp.lead2),
    )
    return rec


def _point_at(ctx: FieldCtx, rec, where: str):
    try:
        return point_from_record(ctx, rec)
    except ValueError as exc:
        raise ValueError(f"field '{where}': {exc}") from None


def howe_input_from_record(rec: dict) -> HoweInput:
    ctx = field_from_record(rec)
    for key in ("shared", "extra1", "extra2"):
        if not isinstance(rec.get(key), list):
            raise ValueError(f"missing point list '{key}'")
    pts = {key: tuple(_point_at(ctx, rec[key][i], f"{key}[{i}]") for i in range(len(rec[key])))
           for key in ("shared", "extra1", "extra2")}
    lead = {key: _point_at(ctx, rec[key], key) if key in rec else None for key in ("lead1", "lead2")}
    for key, c in lead.items():
        if c is INF or (c is not None and not c):
            raise ValueError(f"field '{key}': leading coefficient must be a nonzero field element")
    return HoweInput(ctx, pts["shared"], pts["extra1"], pts["extra2"], lead["lead1"], lead["lead2"])


def _any_curve_record(C) -> dict:
    if isinstance(C, RationalCurve):
        rec = field_record(C.ctx)
        rec["f"] = poly_record(C.f)
        rec["rational"] = True
        return rec
    return curve_record(C)


def howe_report_record(rep: HoweReport, echo: dict) -> dict:
    curves = {"C1": curve_record(rep.C1), "C2": curve_record(rep.C2), "C3": _any_curve_record(rep.C3)}
    out = {
        "schema_version": SCHEMA_VERSION,
        "command": "howe",
        "input": echo,
        "r": rep.r,
        "g1": rep.g1,
        "g2": rep.g2,
        "g3": rep.g3,
        "gC": rep.gC,
        "hyperelliptic": rep.hyperelliptic,
        "within_hyperellipticity_criterion": rep.within_criterion,
        "curves": curves,
        "equations": {
            "C1": descend_curve(rep.C1).equation("x", "y1"),
            "C2": descend_curve(rep.C2).equation("x", "y2"),
            "C3": "y3^2 = " + rep.C3.f.descend().format("x"),
        },
        "jacobian_factors": ["C1", "C2"] if isinstance(rep.C3, RationalCurve) else ["C1", "C2", "C3"],
        "notes": rep.notes,
    }
    if rep.hyperelliptic:
        model = hyperelliptic_model(rep)
        out["hyperelliptic_model"] = {
            "curve": curve_record(model),
            "equation": descend_curve(model).equation("t", "z"),
            "genus": model.genus,
        }
    return out


def cartier_report(M: CartierMatrix) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "cartier",
        "input": curve_record(M.curve),
        "genus": M.genus,
        "exponent": M.exponent,
        "matrix": M.rows(),
        "superspecial": M.is_zero(),
    }


def scan_report(family: list[int], rows: list[ScanRow]) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "cartier",
        "input": {"f": list(family)},
        "rows": [
            {"p": r.p, "p_mod_4": r.p % 4, "p_mod_8": r.p % 8, "p_mod_5": r.p % 5,
             "is_superspecial": r.superspecial, **({"error": r.error} if r.error else {})}
            for r in rows
        ],
    }
