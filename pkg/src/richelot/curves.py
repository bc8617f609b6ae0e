"""Hyperelliptic models y^2 = f(x) and their branch divisors on P^1."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Union

from .errors import DegreeTooSmall, NotSquarefree
from .ff import FieldCtx, Fq, embed, make_field
from .upoly import Poly, is_squarefree, roots_in_field, splitting_context


class _Infinity:
    """The point at infinity of P^1 (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()
ProjPoint = Union[Fq, _Infinity]


def point_key(P: ProjPoint) -> tuple:
    """Total order on P^1: finite points lexicographically, then infinity."""
    return (1,) if P is INF else (0,) + P.c


def embed_point(P: ProjPoint, target: FieldCtx) -> ProjPoint:
    return INF if P is INF else embed(P, target)


@dataclass(frozen=True)
class HyperCurve:
    ctx: FieldCtx
    f: Poly
    genus: int

    def __repr__(self):
        return f"HyperCurve(y^2 = {self.f.format()} over {self.ctx}, genus {self.genus})"

    def equation(self, x: str = "x", y: str = "y") -> str:
        return f"{y}^2 = {self.f.format(x)}"

    def embed(self, target: FieldCtx) -> "HyperCurve":
        return HyperCurve(target, self.f.embed(target), self.genus)


def genus_of_degree(d: int) -> int:
    return (d - 1) // 2


def new_curve(ctx: FieldCtx, f: Poly) -> HyperCurve:
    if f.ctx != ctx:
        f = f.embed(ctx)
    if f.degree < 3:
        raise DegreeTooSmall(f"deg f = {f.degree}; a curve needs degree >= 3")
    if not is_squarefree(f):
        raise NotSquarefree(f"{f.format()} has a repeated root")
    return HyperCurve(ctx, f, genus_of_degree(f.degree))


def curve_from_ints(p: int, coeffs: list[int], k: int = 1, modulus=None) -> HyperCurve:
    """Curve over F_{p^k} from integer (prime-field) coefficients, ascending."""
    ctx = make_field(p, k, modulus)
    return new_curve(ctx, Poly(ctx, coeffs))


@dataclass(frozen=True)
class BranchDivisor:
    finite_points: tuple[Fq, ...]
    includes_infinity: bool

    @property
    def points(self) -> list[ProjPoint]:
        return list(self.finite_points) + ([INF] if self.includes_infinity else [])

    def __len__(self):
        return len(self.finite_points) + int(self.includes_infinity)

    @classmethod
    def from_points(cls, points) -> "BranchDivisor":
        finite = sorted((P for P in points if P is not INF), key=point_key)
        return cls(tuple(finite), any(P is INF for P in points))


def branch_divisor(C: HyperCurve, max_degree: int = 8) -> tuple[BranchDivisor, FieldCtx]:
    """All 2g+2 branch points over the splitting context of f."""
    F = splitting_context(C.f, max(max_degree, C.ctx.k))
    roots = roots_in_field(C.f, F)
    B = BranchDivisor(tuple(roots), C.f.degree % 2 == 1)
    assert len(B) == 2 * C.genus + 2
    return B, F


def curve_from_points(ctx: FieldCtx, points, lead: Union[Fq, int] = 1) -> Poly:
    """The polynomial lead * prod(x - a) over the finite points (infinity dropped)."""
    return Poly.from_roots(ctx, [P for P in points if P is not INF], lead)


# -- serialization: {p, k, modulus?, f: [[c_0..c_{k-1}], ...]} --

def elem_record(a: Fq) -> list[int]:
    return list(a.c)


def point_record(P: ProjPoint) -> Any:
    return "inf" if P is INF else elem_record(P)


def point_from_record(ctx: FieldCtx, rec: Any) -> ProjPoint:
    if rec == "inf":
        return INF
    if isinstance(rec, bool):
        raise ValueError(f"coefficient {rec!r} is not an integer")
    if isinstance(rec, int) and ctx.k == 1:
        return ctx.from_coeffs([rec])
    if not isinstance(rec, list):
        raise ValueError(f"coefficient {rec!r} is not a vector of {ctx.k} integers")
    return ctx.from_coeffs(rec)


def field_record(ctx: FieldCtx) -> dict:
    rec = {"p": ctx.p, "k": ctx.k}
    if ctx.k > 1:
        rec["modulus"] = list(ctx.modulus)
    return rec


def field_from_record(rec: dict) -> FieldCtx:
    for key in ("p",):
        if key not in rec:
            raise ValueError(f"missing field '{key}'")
    p, k = rec["p"], rec.get("k", 1)
    if not isinstance(p, int) or not isinstance(k, int):
        raise ValueError("'p' and 'k' must be integers")
    return make_field(p, k, rec.get("modulus"))


def poly_record(f: Poly) -> list[list[int]]:
    return [elem_record(c) for c in f.coeffs]


def poly_from_record(ctx: FieldCtx, coeffs: list, name: str = "f") -> Poly:
    if not isinstance(coeffs, list):
        raise ValueError(f"'{name}' must be a list of coefficient vectors")
    out = []
    for i, c in enumerate(coeffs):
        if c == "inf":
            raise ValueError(f"field '{name}[{i}]': 'inf' is not a coefficient")
        try:
            out.append(point_from_record(ctx, c))
        except ValueError as exc:
            raise ValueError(f"field '{name}[{i}]': {exc}") from None
    return Poly(ctx, out)


def curve_record(C: HyperCurve) -> dict:
    rec = field_record(C.ctx)
    rec["f"] = poly_record(C.f)
    return rec


def curve_from_record(rec: dict) -> HyperCurve:
    if "f" not in rec:
        raise ValueError("missing field 'f'")
    ctx = field_from_record(rec)
    return new_curve(ctx, poly_from_record(ctx, rec["f"]))


def descend_curve(C: HyperCurve) -> HyperCurve:
    """Rewrite over F_p when every coefficient lies in the prime field."""
    g = C.f.descend()
    return C if g is C.f else HyperCurve(g.ctx, g, C.genus)
