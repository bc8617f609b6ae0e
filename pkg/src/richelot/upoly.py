"""Dense univariate polynomials over a FieldCtx."""
from __future__ import annotations

from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .errors import BoundExceeded, DivisionByZero, FieldTooLarge, MixedFields, ZeroPolynomial
from .ff import FieldCtx, Fq, embed, make_field

ROOT_BOUND = 1 << 20
# above this degree, prime-field products go through Kronecker substitution
_KRONECKER_MIN = 24


class Poly:
    """Immutable polynomial; ``coeffs`` ascending, no trailing zeros."""

    __slots__ = ("ctx", "coeffs")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable[Union[Fq, int]]):
        cs = [ctx(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.ctx = ctx
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, ctx: FieldCtx, coeffs: list[Fq]) -> "Poly":
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.ctx = ctx
        obj.coeffs = tuple(coeffs)
        return obj

    @classmethod
    def x(cls, ctx: FieldCtx) -> "Poly":
        return cls(ctx, [0, 1])

    @classmethod
    def from_roots(cls, ctx: FieldCtx, roots: Iterable[Fq], lead: Union[Fq, int] = 1) -> "Poly":
        out = cls(ctx, [lead])
        for r in roots:
            out = out * cls(ctx, [-r, 1])
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fq:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fq:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.ctx.zero

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == Poly(self.ctx, [other])
        return NotImplemented

    def __hash__(self):
        return hash(tuple(c.c for c in self.coeffs))

    def __repr__(self):
        return f"Poly({self.format()} over {self.ctx})"

    def _coerce(self, other) -> Optional["Poly"]:
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise MixedFields(f"{self.ctx} vs {other.ctx}")
            return other
        if isinstance(other, (int, Fq)):
            return Poly(self.ctx, [other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Poly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ctx, [-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly._raw(self.ctx, [])
        if self.ctx.k == 1 and min(len(a), len(b)) > _KRONECKER_MIN:
            return _kronecker_mul(self, o)
        ctx = self.ctx
        out = [ctx.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = out[i + j] + x * y
        return Poly._raw(ctx, out)

    __rmul__ = __mul__

    def scale(self, c: Union[Fq, int]) -> "Poly":
        c = self.ctx(c)
        return Poly._raw(self.ctx, [c * v for v in self.coeffs])

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self.scale(self.lc.inverse())

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise DivisionByZero("polynomial division by zero")
        ctx = self.ctx
        rem = list(self.coeffs)
        dg = o.degree
        if len(rem) - 1 < dg:
            return Poly._raw(ctx, []), self
        inv_lc = o.lc.inverse()
        quo = [ctx.zero] * (len(rem) - dg)
        for shift in range(len(rem) - 1 - dg, -1, -1):
            c = rem[shift + dg] * inv_lc
            quo[shift] = c
            if c:
                for i, gi in enumerate(o.coeffs):
                    rem[shift + i] = rem[shift + i] - c * gi
        return Poly._raw(ctx, quo), Poly._raw(ctx, rem[:dg])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e: int) -> "Poly":
        if e < 0:
            raise ValueError("negative polynomial power")
        if self.ctx.k == 1 and self.coeffs:
            p = self.ctx.p
            out = _int_pow([c.c[0] for c in self.coeffs], e, p)
            return Poly._raw(self.ctx, [Fq(self.ctx, (v,)) for v in out])
        acc = Poly(self.ctx, [1])
        base = self
        while e:
            if e & 1:
                acc = acc * base
            e >>= 1
            if e:
                base = base * base
        return acc

    def powmod(self, e: int, m: "Poly") -> "Poly":
        acc = Poly(self.ctx, [1]) % m
        base = self % m
        while e:
            if e & 1:
                acc = (acc * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return acc

    def derivative(self) -> "Poly":
        return Poly._raw(self.ctx, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = x.ctx.zero if isinstance(x, Fq) else self.ctx.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def embed(self, target: FieldCtx) -> "Poly":
        if target == self.ctx:
            return self
        return Poly._raw(target, [embed(c, target) for c in self.coeffs])

    def in_prime_field(self) -> bool:
        return all(c.in_prime_field() for c in self.coeffs)

    def descend(self) -> "Poly":
        """Same polynomial over F_p when every coefficient lies there."""
        if self.ctx.k == 1 or not self.in_prime_field():
            return self
        base = make_field(self.ctx.p)
        return Poly._raw(base, [base(c.c[0]) for c in self.coeffs])

    def int_coeffs(self, signed: bool = False) -> list[int]:
        p = self.ctx.p
        out = []
        for c in self.coeffs:
            v = int(c)
            out.append(v - p if signed and v > p // 2 else v)
        return out

    def format(self, var: str = "x") -> str:
        """Human-readable form; prime-field coefficients shown in (-p/2, p/2]."""
        if not self.coeffs:
            return "0"
        p = self.ctx.p
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if c.in_prime_field():
                v = c.c[0]
                v = v - p if v > p // 2 else v
                sign = "-" if v < 0 else "+"
                mag = abs(v)
                body = mono if mag == 1 and mono else (f"{mag}{mono}" if mono else str(mag))
            else:
                sign = "+"
                body = f"({c!r}){mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def _kronecker_mul(f: Poly, g: Poly) -> Poly:
    out = _int_mul([c.c[0] for c in f.coeffs], [c.c[0] for c in g.coeffs], f.ctx.p)
    return Poly._raw(f.ctx, [Fq(f.ctx, (v,)) for v in out])


def _int_mul(a: list[int], b: list[int], p: int) -> list[int]:
    """Product of two F_p coefficient lists via one big-integer multiplication."""
    n = min(len(a), len(b))
    if n <= _KRONECKER_MIN:
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [v % p for v in out]
    bits = (n * (p - 1) ** 2).bit_length() + 1
    nbytes = (bits + 7) // 8
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    size = len(a) + len(b) - 1
    raw = prod.to_bytes(size * nbytes + 1, "little")
    return [int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") % p for i in range(size)]


def _pack(vals: Sequence[int], nbytes: int) -> int:
    return int.from_bytes(b"".join(v.to_bytes(nbytes, "little") for v in vals), "little")


def _int_pow(a: list[int], e: int, p: int) -> list[int]:
    acc = [1]
    while e:
        if e & 1:
            acc = _int_mul(acc, a, p)
        e >>= 1
        if e:
            a = _int_mul(a, a, p)
    while len(acc) > 1 and acc[-1] == 0:
        acc.pop()
    return acc


def is_squarefree(f: Poly) -> bool:
    if not f:
        raise ZeroPolynomial("square-freeness of the zero polynomial")
    return f.gcd(f.derivative()).degree == 0


def _all_coords(ctx: FieldCtx) -> np.ndarray:
    grids = np.indices((ctx.p,) * ctx.k).reshape(ctx.k, -1).T
    return grids.astype(np.int64)


def _vec_mul(A: np.ndarray, B: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    p, k = ctx.p, ctx.k
    prod = np.zeros((A.shape[0], 2 * k - 1), dtype=np.int64)
    for i in range(k):
        for j in range(k):
            prod[:, i + j] = (prod[:, i + j] + A[:, i] * B[:, j]) % p
    m = ctx.modulus
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[:, d]
        for j in range(k):
            if m[j]:
                prod[:, d - k + j] = (prod[:, d - k + j] - c * m[j]) % p
    return prod[:, :k]


def roots_in_field(f: Poly, ctx: Optional[FieldCtx] = None, bound: int = ROOT_BOUND) -> list[Fq]:
    """Every r in ``ctx`` with f(r) = 0, by exhaustive evaluation, sorted lexicographically."""
    if not f:
        raise ZeroPolynomial("roots of the zero polynomial")
    ctx = ctx or f.ctx
    if ctx.q > bound:
        raise FieldTooLarge(f"{ctx} has {ctx.q} elements, exhaustion bound is {bound}")
    f = f.embed(ctx)
    X = _all_coords(ctx)
    acc = np.zeros_like(X)
    for c in reversed(f.coeffs):
        acc = _vec_mul(acc, X, ctx) if ctx.k > 1 else (acc * X) % ctx.p
        acc = (acc + np.array(c.c, dtype=np.int64)) % ctx.p
    hits = np.flatnonzero(~acc.any(axis=1))
    # np.indices enumerates with the first coordinate slowest: lexicographic order
    return [Fq(ctx, tuple(int(v) for v in X[i])) for i in hits]


def count_roots(f: Poly, degree: int) -> int:
    """Number of distinct roots of f in the degree-``degree`` extension of f.ctx."""
    x = Poly.x(f.ctx)
    e = f.ctx.q ** degree
    h = x.powmod(e, f) - x
    return f.gcd(h).degree if h else f.monic().degree


def splitting_context(f: Poly, max_degree: int = 8) -> FieldCtx:
    """Smallest F_{p^K} (K a multiple of f.ctx.k, K <= max_degree) over which f splits.

    ``max_degree`` bounds the absolute degree K over F_p.
    """
    if not is_squarefree(f):
        raise ValueError("splitting_context needs a squarefree polynomial")
    base = f.ctx
    d = 1
    while base.k * d <= max_degree:
        if count_roots(f, d) == f.degree:
            return base if d == 1 else make_field(base.p, base.k * d)
        d += 1
    raise BoundExceeded(f"{f.format()} does not split over any F_{base.p}^K with K <= {max_degree}")
