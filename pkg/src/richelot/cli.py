"""richelot command line: analyze | howe | cartier | examples.

Exit codes: 0 ran, 1 golden mismatch, 2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import examples as ex
from .cartier import cartier_matrix, congruence_scan, odd_primes, scan_csv
from .curves import branch_divisor, curve_from_record
from .errors import RichelotError
from .howe import build_howe, howe_input_from_curves
from .involution import DEFAULT_MAX_EXT, SearchConfig, analyze
from .report import (
    analyze_report,
    cartier_report,
    dumps,
    howe_input_from_record,
    howe_report_record,
    scan_report,
)


class InputError(ValueError):
    pass


def _load(path: str) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        rec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(rec, dict):
        raise InputError(f"{path}: top level must be a JSON object")
    return rec


def _analyze_text(rep: dict) -> str:
    lines = [
        f"curve: genus {rep['genus']}",
        f"searched field: GF({rep['searched_field']['p']}^{rep['searched_field']['k']})",
        f"verdict: {rep['verdict']}",
    ]
    for i, w in enumerate(rep["witnesses"]):
        eq = w["equations"]
        lines.append(f"[{i}] involution {w['involution']}  genus split {w['genus_split']}")
        lines.append(f"    normal form  {eq['normal_form']}")
        lines.append(f"    C_sigma      {eq['C_sigma']}")
        lines.append(f"    C_tau        {eq['C_tau']}")
    for t in rep["klein_four_subgroups"]:
        lines.append(f"Klein four-group {t['witnesses']}: C_sigma genera {t['C_sigma_genera']}")
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    rec = _load(args.curve)
    C = curve_from_record(rec)
    _, F = branch_divisor(C, args.max_ext)
    witnesses = analyze(C, SearchConfig(max_ext=args.max_ext))
    rep = analyze_report(C, F, witnesses)
    sys.stdout.write(dumps(rep) if args.format == "json" else _analyze_text(rep))
    return 0


def _howe_input(rec: dict, max_ext: int):
    if "C1" in rec or "C2" in rec:
        curves = []
        for key in ("C1", "C2"):
            if not isinstance(rec.get(key), dict):
                raise InputError(f"missing curve object '{key}'")
            sub = {k: v for k, v in rec.items() if k in ("p", "k", "modulus")}
            sub.update(rec[key])
            try:
                curves.append(curve_from_record(sub))
            except (RichelotError, ValueError) as exc:
                raise type(exc)(f"curve '{key}': {exc}") from None
        return howe_input_from_curves(*curves, max_ext=max_ext)
    return howe_input_from_record(rec)


def cmd_howe(args) -> int:
    rec = _load(args.input)
    rep = build_howe(_howe_input(rec, args.max_ext))
    out = howe_report_record(rep, rec)
    if args.format == "json":
        sys.stdout.write(dumps(out))
    else:
        eq = out["equations"]
        sys.stdout.write(
            f"{eq['C1']}\n{eq['C2']}\n{eq['C3']}\n"
            f"r={rep.r} g1={rep.g1} g2={rep.g2} g3={rep.g3} gC={rep.gC} hyperelliptic={rep.hyperelliptic}\n"
            + "".join(f"note: {n}\n" for n in out["notes"])
        )
    return 0


def _prime_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(v) for v in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _family(rec: dict) -> list[int]:
    f = rec.get("f")
    if not isinstance(f, list) or not f:
        raise InputError("field 'f': expected a nonempty list of integers")
    out = []
    for i, c in enumerate(f):
        if isinstance(c, list) and len(c) == 1:
            c = c[0]
        if isinstance(c, bool) or not isinstance(c, int):
            raise InputError(f"field 'f[{i}]': scans need integer coefficients, got {c!r}")
        out.append(c)
    return out


def cmd_cartier(args) -> int:
    rec = _load(args.curve)
    if args.prime_range is None:
        args.format = args.format or "json"
        M = cartier_matrix(curve_from_record(rec))
        if args.format == "csv":
            raise InputError("--format csv needs --prime-range")
        rep = cartier_report(M)
        if args.format == "json":
            sys.stdout.write(dumps(rep))
        else:
            for row in rep["matrix"]:
                sys.stdout.write(" ".join(str(e if len(e) > 1 else e[0]) for e in row) + "\n")
            sys.stdout.write(f"superspecial: {str(rep['superspecial']).lower()}\n")
        return 0
    family = _family(rec)
    rows = congruence_scan(family, odd_primes(*args.prime_range))
    fmt = "json" if args.format == "json" else "csv"
    sys.stdout.write(scan_csv(rows) if fmt == "csv" else dumps(scan_report(family, rows)))
    return 0


def cmd_examples(args) -> int:
    names = ex.NAMES if args.name == "all" else (args.name,)
    status = 0
    for name in names:
        fresh, diff = ex.diff_against_golden(name)
        if args.update_golden:
            (Path(ex.__file__).parent / "golden" / ex.golden_name(name)).write_text(fresh)
            sys.stdout.write(f"{name}: golden updated\n")
            continue
        if args.format == "json":
            sys.stdout.write(fresh)
        if diff:
            sys.stderr.writelines(diff)
            sys.stdout.write(f"{name}: MISMATCH\n")
            status = 1
        elif args.format != "json":
            sys.stdout.write(f"{name}: ok\n")
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="richelot", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="search for decomposed Richelot isogenies")
    p.add_argument("curve", help="CurveFile JSON")
    p.add_argument("--max-ext", type=int, default=DEFAULT_MAX_EXT)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("howe", help="generalized Howe curve from two hyperelliptic curves")
    p.add_argument("input", help="JSON with C1/C2 curves or shared/extra1/extra2 points")
    p.add_argument("--max-ext", type=int, default=DEFAULT_MAX_EXT)
    p.add_argument("--format", choices=("json", "text"), default="json")
    p.set_defaults(func=cmd_howe)

    p = sub.add_parser("cartier", help="Cartier-Manin matrix or superspeciality scan")
    p.add_argument("curve", help="CurveFile JSON, or {\"f\": [ints]} with --prime-range")
    p.add_argument("--prime-range", type=_prime_range, metavar="LO:HI")
    p.add_argument("--format", choices=("json", "text", "csv"), help="default: json, or csv for scans")
    p.set_defaults(func=cmd_cartier)

    p = sub.add_parser("examples", help="reproduce the worked examples against golden files")
    p.add_argument("name", choices=ex.NAMES + ("all",))
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--update-golden", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_examples)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "max_ext", 1) < 1:
        print("error: --max-ext must be positive", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (RichelotError, ValueError, KeyError, TypeError) as exc:
        name = type(exc).__name__
        print(f"error: {name}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
