"""Order-2 automorphisms of hyperelliptic curves and the two-factor split.

An involution sigma of C other than the hyperelliptic one descends to an
involution m of P^1 preserving the branch divisor B.  When m moves every
point of B, conjugating m to x -> -x puts C in the shape

    y^2 = (x^2 - 1)(x^2 - a_1)...(x^2 - a_g)

and the quotients by sigma and sigma*iota are

    C_sigma: v^2 = (u - 1) prod (u - a_i)        (u = x^2, v = y)
    C_tau:   v^2 = u (u - 1) prod (u - a_i)      (u = x^2, v = x y)

whose Jacobians receive a decomposed Richelot isogeny from J(C).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .curves import (
    INF,
    BranchDivisor,
    HyperCurve,
    ProjPoint,
    branch_divisor,
    embed_point,
    new_curve,
    point_key,
)
from .errors import BoundExceeded, DegenerateQuotient, FixedBranchPoint, WrongGenus
from .ff import FieldCtx, Fq, common_field, embed, make_field
from .upoly import Poly, splitting_context, roots_in_field

DEFAULT_MAX_EXT = 8


@dataclass(frozen=True)
class SearchConfig:
    """Limits for the involution search.

    max_ext caps the absolute degree [F : F_p] of every field the search
    or the normalization is allowed to build.
    """

    max_ext: int = DEFAULT_MAX_EXT


@dataclass(frozen=True, eq=False)
class MobiusMap:
    """x -> (a x + b) / (c x + d), scaled so the first nonzero entry is 1."""

    a: Fq
    b: Fq
    c: Fq
    d: Fq

    @classmethod
    def of(cls, a, b, c, d) -> "MobiusMap":
        if not a * d - b * c:
            raise ValueError("degenerate Mobius matrix")
        for s in (a, b, c, d):
            if s:
                inv = s.inverse()
                return cls(a * inv, b * inv, c * inv, d * inv)
        raise AssertionError

    @classmethod
    def identity(cls, ctx: FieldCtx) -> "MobiusMap":
        return cls.of(ctx.one, ctx.zero, ctx.zero, ctx.one)

    @classmethod
    def negation(cls, ctx: FieldCtx) -> "MobiusMap":
        return cls.of(ctx.one, ctx.zero, ctx.zero, -ctx.one)

    @classmethod
    def reciprocal(cls, ctx: FieldCtx) -> "MobiusMap":
        return cls.of(ctx.zero, ctx.one, ctx.one, ctx.zero)

    @property
    def ctx(self) -> FieldCtx:
        return self.a.ctx

    def key(self) -> tuple:
        return (self.a.c, self.b.c, self.c.c, self.d.c)

    def __eq__(self, other):
        if not isinstance(other, MobiusMap):
            return NotImplemented
        return self.ctx == other.ctx and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"MobiusMap([[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]] over {self.ctx})"

    def __call__(self, P: ProjPoint) -> ProjPoint:
        return apply_mobius(self, P)

    def __matmul__(self, other: "MobiusMap") -> "MobiusMap":
        """Composition: (self @ other)(P) = self(other(P))."""
        return MobiusMap.of(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "MobiusMap":
        return MobiusMap.of(self.d, -self.b, -self.c, self.a)

    def is_identity(self) -> bool:
        return not self.b and not self.c and self.a == self.d

    def is_involution(self) -> bool:
        # p odd: m^2 is scalar iff trace 0 or m scalar
        return not self.is_identity() and not (self.a + self.d)

    def embed(self, target: FieldCtx) -> "MobiusMap":
        return MobiusMap.of(*(embed(v, target) for v in (self.a, self.b, self.c, self.d)))

    def matrix(self) -> tuple[Fq, Fq, Fq, Fq]:
        return (self.a, self.b, self.c, self.d)


def apply_mobius(m: MobiusMap, P: ProjPoint) -> ProjPoint:
    if P is INF:
        return INF if not m.c else m.a / m.c
    den = m.c * P + m.d
    if not den:
        return INF
    return (m.a * P + m.b) / den


def _homog(P: ProjPoint, ctx: FieldCtx) -> tuple[Fq, Fq]:
    return (ctx.one, ctx.zero) if P is INF else (P, ctx.one)


def mobius_from_points(src: Sequence[ProjPoint], dst: Sequence[ProjPoint], ctx: FieldCtx) -> MobiusMap:
    """The unique map sending three distinct points src[i] to dst[i]."""

    def frame(pts):
        (x1, y1), (x2, y2), (x3, y3) = (_homog(P, ctx) for P in pts)
        det = x1 * y2 - x2 * y1
        lam = (x3 * y2 - x2 * y3) / det
        mu = (x1 * y3 - x3 * y1) / det
        # columns lam*v1, mu*v2: sends inf -> P1, 0 -> P2, 1 -> P3
        return (lam * x1, mu * x2, lam * y1, mu * y2)

    a, b, c, d = frame(src)
    s, t, u, v = frame(dst)
    # dst_frame @ adj(src_frame)
    return MobiusMap.of(s * d - t * c, -s * b + t * a, u * d - v * c, -u * b + v * a)


def cross_ratio(P1: ProjPoint, P2: ProjPoint, P3: ProjPoint, P4: ProjPoint, ctx: FieldCtx) -> Fq:
    """(P1, P2; P3, P4) = (P3 - P1)(P4 - P2) / ((P3 - P2)(P4 - P1))."""
    h = [_homog(P, ctx) for P in (P1, P2, P3, P4)]

    def br(i, j):
        return h[i][0] * h[j][1] - h[j][0] * h[i][1]

    return (br(2, 0) * br(3, 1)) / (br(2, 1) * br(3, 0))


def pair_invariant(pair1, pair2, ctx: FieldCtx) -> Fq:
    """lambda + 1/lambda: invariant under reordering inside and between the pairs."""
    lam = cross_ratio(pair1[0], pair1[1], pair2[0], pair2[1], ctx)
    return lam + lam.inverse()


def cross_ratio_invariants(pairing, ctx: FieldCtx) -> list[Fq]:
    out = []
    for i in range(len(pairing)):
        for j in range(i + 1, len(pairing)):
            out.append(pair_invariant(pairing[i], pairing[j], ctx))
    return sorted(out, key=lambda a: a.c)


def _moves_all_within(m: MobiusMap, pts: list[ProjPoint], members: set) -> bool:
    for P in pts:
        Q = m(P)
        if Q == P or Q not in members:
            return False
    return True


def find_branch_involutions(B, ctx: Optional[FieldCtx] = None) -> list[MobiusMap]:
    """All involutions of P^1 that preserve B and fix none of its points.

    Such a map sends the first point P of B to some Q != P and a third point
    R to some S outside {P, Q, R}; each choice (Q, S) fixes a unique candidate,
    so O(|B|^2) candidates with O(|B|) checks each cover the whole set.
    """
    pts = B.points if isinstance(B, BranchDivisor) else list(B)
    if len(pts) < 4:
        return []
    if ctx is None:
        ctx = next(P for P in pts if P is not INF).ctx
    members = set(pts)
    P = pts[0]
    found: dict[tuple, MobiusMap] = {}
    for Q in pts[1:]:
        R = pts[1] if Q is not pts[1] else pts[2]
        for S in pts:
            if S is P or S is Q or S is R:
                continue
            m = mobius_from_points((P, Q, R), (Q, P, S), ctx)
            if m.key() not in found and _moves_all_within(m, pts, members):
                assert m.is_involution()
                found[m.key()] = m
    return sorted(found.values(), key=MobiusMap.key)


def _common_setting(C: HyperCurve, m: MobiusMap, max_ext: int):
    B, F = branch_divisor(C, max_ext)
    W = common_field(F, m.ctx)
    if W.k > max_ext:
        raise BoundExceeded(f"working field {W} exceeds the extension cap {max_ext}")
    pts = [embed_point(P, W) for P in B.points]
    return pts, m.embed(W), W


def lift_count(C: HyperCurve, m: MobiusMap, max_ext: int = DEFAULT_MAX_EXT) -> int:
    """Number of automorphisms of C over m: always the pair {sigma, sigma*iota}.

    Raises FixedBranchPoint when m fixes a branch point; the lifts then have
    order 4 (y -> +-sqrt(-1) y in the normalized model).
    """
    pts, m, _ = _common_setting(C, m, max_ext)
    members = set(pts)
    for P in pts:
        Q = m(P)
        if Q == P:
            raise FixedBranchPoint(f"{m!r} fixes the branch point {P!r}")
        if Q not in members:
            raise ValueError(f"{m!r} does not preserve the branch divisor")
    return 2


def fixed_points(m: MobiusMap) -> Optional[tuple[ProjPoint, ProjPoint]]:
    """The two fixed points of an involution over m.ctx, or None if irrational."""
    a, b, c, d = m.matrix()
    if not c:
        return (b / (d - a), INF)
    disc = (d - a) * (d - a) + 4 * b * c
    s = disc.sqrt()
    if s is None:
        return None
    two_c = 2 * c
    return ((a - d + s) / two_c, (a - d - s) / two_c)


@dataclass(frozen=True)
class InvolutionWitness:
    ctx: FieldCtx
    curve: HyperCurve
    m: MobiusMap
    pairing: tuple[tuple[ProjPoint, ProjPoint], ...]
    fixed_points: tuple[ProjPoint, ProjPoint]
    conjugator: MobiusMap
    normal_params: tuple[Fq, ...]

    @property
    def genus(self) -> int:
        return self.curve.genus

    def normal_form(self) -> Poly:
        """(x^2 - 1) prod (x^2 - a_i) over the working field."""
        x2 = Poly(self.ctx, [0, 0, 1])
        out = x2 - 1
        for a in self.normal_params:
            out = out * (x2 - a)
        return out

    def cross_ratio_invariants(self) -> list[Fq]:
        return cross_ratio_invariants(self.pairing, self.ctx)


def normalize_involution(C: HyperCurve, m: MobiusMap, config: SearchConfig = SearchConfig()) -> InvolutionWitness:
    pts, m, W = _common_setting(C, m, config.max_ext)
    if not m.is_involution():
        raise ValueError(f"{m!r} is not an involution")
    members = set(pts)
    for P in pts:
        if m(P) == P:
            raise FixedBranchPoint(f"{m!r} fixes the branch point {P!r}")
        if m(P) not in members:
            raise ValueError(f"{m!r} does not preserve the branch divisor")

    fps = fixed_points(m)
    if fps is None:
        if 2 * W.k > config.max_ext:
            raise BoundExceeded(f"fixed points of {m!r} need degree {2 * W.k} > {config.max_ext}")
        W = make_field(W.p, 2 * W.k)
        pts = [embed_point(P, W) for P in pts]
        m = m.embed(W)
        fps = fixed_points(m)
    P1, P2 = sorted(fps, key=point_key)
    one, zero = W.one, W.zero
    # t sends P1 -> 0 and P2 -> inf (P1 is finite after sorting)
    t = MobiusMap.of(one, -P1, zero, one) if P2 is INF else MobiusMap.of(one, -P1, one, -P2)
    assert t @ m @ t.inverse() == MobiusMap.negation(W)

    images = [t(P) for P in pts]
    squares = sorted({(s * s).c: s * s for s in images}.values(), key=lambda a: a.c)
    w0 = squares[0]
    s0 = w0.sqrt()
    conj = MobiusMap.of(one, zero, zero, s0) @ t
    params = tuple(sorted((w / w0 for w in squares[1:]), key=lambda a: a.c))

    pairing = []
    for P in pts:
        Q = m(P)
        pair = tuple(sorted((P, Q), key=point_key))
        if pair not in pairing:
            pairing.append(pair)
    pairing.sort(key=lambda pr: (point_key(pr[0]), point_key(pr[1])))
    return InvolutionWitness(W, C, m, tuple(pairing), (P1, P2), conj, params)


@dataclass(frozen=True)
class DecompositionWitness:
    C_sigma: HyperCurve
    C_tau: HyperCurve
    genus_split: tuple[int, int]
    involution: InvolutionWitness = field(repr=False)


def decompose(C: HyperCurve, w: InvolutionWitness) -> DecompositionWitness:
    W = w.ctx
    base = Poly(W, [-1, 1])
    for a in w.normal_params:
        base = base * Poly(W, [-a, 1])
    f_tau = base * Poly(W, [0, 1])
    if base.degree < 3:
        raise DegenerateQuotient(f"C_sigma: v^2 = {base.format('u')} is rational")
    C_sigma = new_curve(W, base)
    C_tau = new_curve(W, f_tau)
    split = (C_sigma.genus, C_tau.genus)
    if sum(split) != C.genus:
        raise AssertionError(f"genus split {split} does not add up to {C.genus}")
    return DecompositionWitness(C_sigma, C_tau, split, w)


def analyze(C: HyperCurve, config: SearchConfig = SearchConfig()) -> list[DecompositionWitness]:
    """Every decomposed Richelot isogeny visible from a P^1-involution.

    An empty list is the verdict "nothing found over the searched field".
    """
    if C.genus < 2:
        raise WrongGenus(f"analyze needs genus >= 2, got {C.genus}")
    B, F = branch_divisor(C, config.max_ext)
    out = []
    for m in find_branch_involutions(B, F):
        w = normalize_involution(C, m, config)
        out.append(decompose(C, w))
    return out


def branch_sets_equivalent(B1: Sequence[ProjPoint], B2: Sequence[ProjPoint], ctx: FieldCtx) -> Optional[MobiusMap]:
    """A Mobius map g with g(B1) = B2, or None."""
    B1, B2 = list(B1), list(B2)
    if len(B1) != len(B2) or len(B1) < 3:
        return None
    target = set(B2)
    src = B1[:3]
    for i, Q1 in enumerate(B2):
        for j, Q2 in enumerate(B2):
            if j == i:
                continue
            for k, Q3 in enumerate(B2):
                if k == i or k == j:
                    continue
                g = mobius_from_points(src, (Q1, Q2, Q3), ctx)
                if all(g(P) in target for P in B1[3:]):
                    return g
    return None


def geometrically_isomorphic(C1: HyperCurve, C2: HyperCurve, max_ext: int = DEFAULT_MAX_EXT) -> bool:
    """Isomorphism over the algebraic closure, decided by PGL_2-equivalence of
    branch divisors inside a common splitting field."""
    if C1.genus != C2.genus or C1.f.degree % 2 + C1.f.degree != C2.f.degree % 2 + C2.f.degree:
        return False
    F = common_field(C1.ctx, C2.ctx)
    f1, f2 = C1.f.embed(F), C2.f.embed(F)
    S1 = splitting_context(f1, max_ext)
    S2 = splitting_context(f2, max_ext)
    W = common_field(S1, S2)
    if W.k > max_ext:
        raise BoundExceeded(f"common splitting field {W} exceeds cap {max_ext}")
    pts1 = roots_in_field(f1, W) + ([INF] if f1.degree % 2 else [])
    pts2 = roots_in_field(f2, W) + ([INF] if f2.degree % 2 else [])
    return branch_sets_equivalent(pts1, pts2, W) is not None


def klein_triples(maps: Sequence[MobiusMap]) -> list[tuple[int, int, int]]:
    """Index triples (i, j, k), i < j < k, with maps[i] and maps[j] commuting
    and maps[k] their product: the Klein four-subgroups of the list."""
    index = {m: i for i, m in enumerate(maps)}
    out = set()
    for i, a in enumerate(maps):
        for b in maps[i + 1:]:
            ab = a @ b
            if ab == b @ a and ab in index:
                out.add(tuple(sorted((i, index[b], index[ab]))))
    return sorted(out)
