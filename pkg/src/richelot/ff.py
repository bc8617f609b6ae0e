"""Exact arithmetic in prime fields F_p and extensions F_p[x]/(m).

Elements carry their coordinates in the power basis of the modulus as a
tuple of ``k`` residues in ``[0, p)``.  Contexts are immutable and cached,
so two calls to :func:`make_field` with the same arguments return the same
object.

For extension fields up to :data:`TABLE_LIMIT` elements, multiplication and
inversion go through discrete log / antilog tables built on first use.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    IncompatibleDegrees,
    MixedFields,
    NotPrime,
    ReducibleModulus,
)

TABLE_LIMIT = 1 << 17


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p as ascending int lists (only used to vet moduli) --

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _prem(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim([x % p for x in a])
    dm = len(m) - 1
    inv_lc = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lc % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mi) % p
        _trim(a)
    return a


def _pmulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _prem(out, m, p)


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _prem(a, b, p)
    return a


def _eval_int(coeffs: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % p
    return acc


def _is_irreducible(m: Sequence[int], p: int) -> bool:
    # Ben-Or: no factor of degree d <= k/2 divides m.
    m = list(m)
    k = len(m) - 1
    if k == 1:
        return True
    h = [0, 1]
    for _ in range(k // 2):
        acc, base, e = [1], h, p
        while e:
            if e & 1:
                acc = _pmulmod(acc, base, m, p)
            base = _pmulmod(base, base, m, p)
            e >>= 1
        h = acc
        diff = list(h) + [0] * max(0, 2 - len(h))
        diff[1] = (diff[1] - 1) % p
        if len(_pgcd(m, _trim(diff), p)) > 1:
            return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """The field F_p[x]/(modulus); ``modulus`` is ascending and monic."""

    p: int
    k: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p ** self.k

    def __repr__(self) -> str:
        return f"GF({self.p})" if self.k == 1 else f"GF({self.p}^{self.k})"

    def __call__(self, value: Union[int, Sequence[int], "Fq"]) -> "Fq":
        if isinstance(value, Fq):
            if value.ctx is not self and value.ctx != self:
                raise MixedFields(f"{value.ctx} element given to {self}")
            return value
        if isinstance(value, int):
            return Fq(self, (value % self.p,) + (0,) * (self.k - 1))
        coords = [int(v) % self.p for v in value]
        if len(coords) > self.k:
            raise ValueError(f"{len(coords)} coordinates for degree-{self.k} field")
        return Fq(self, tuple(coords) + (0,) * (self.k - len(coords)))

    def from_coeffs(self, coords: Sequence[int]) -> "Fq":
        """Strict constructor: exactly k integers in [0, p)."""
        if len(coords) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {len(coords)}")
        for v in coords:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.p:
                raise ValueError(f"coordinate {v!r} not in [0, {self.p})")
        return Fq(self, tuple(coords))

    @property
    def zero(self) -> "Fq":
        return Fq(self, (0,) * self.k)

    @property
    def one(self) -> "Fq":
        return Fq(self, (1,) + (0,) * (self.k - 1))

    @property
    def gen(self) -> "Fq":
        """Class of x (equals the constant -modulus[0] when k = 1)."""
        if self.k == 1:
            return self(-self.modulus[0])
        return Fq(self, (0, 1) + (0,) * (self.k - 2))

    def elements(self) -> Iterator["Fq"]:
        """All q elements, in lexicographic order of coordinate vectors."""
        for c in itertools.product(range(self.p), repeat=self.k):
            yield Fq(self, c)

    def random(self, rng: random.Random) -> "Fq":
        return Fq(self, tuple(rng.randrange(self.p) for _ in range(self.k)))

    # tuple-level arithmetic; callers guarantee matching contexts

    def _add(self, a, b):
        p = self.p
        if self.k == 1:
            return ((a[0] + b[0]) % p,)
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a, b):
        p = self.p
        if self.k == 1:
            return ((a[0] - b[0]) % p,)
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a):
        p = self.p
        return tuple(-x % p for x in a)

    def _mul(self, a, b):
        if self.k == 1:
            return (a[0] * b[0] % self.p,)
        t = _tables(self)
        if t is None:
            return _slow_mul(self, a, b)
        log, exp = t
        la = log.get(a)
        lb = log.get(b)
        if la is None or lb is None:
            return (0,) * self.k
        return exp[la + lb]

    def _inv(self, a):
        if not any(a):
            raise DivisionByZero(f"inverse of zero in {self}")
        if self.k == 1:
            return (pow(a[0], self.p - 2, self.p),)
        t = _tables(self)
        if t is None:
            return _slow_pow(self, a, self.q - 2)
        log, exp = t
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def _pow(self, a, e: int):
        if e < 0:
            a, e = self._inv(a), -e
        if e == 0:
            return self.one.c
        if not any(a):
            return a
        if self.k == 1:
            return (pow(a[0], e, self.p),)
        t = _tables(self)
        if t is None:
            return _slow_pow(self, a, e)
        log, exp = t
        return exp[log[a] * e % (self.q - 1)]


def _slow_mul(ctx: FieldCtx, a, b):
    p, k, m = ctx.p, ctx.k, ctx.modulus
    prod = [0] * (2 * k - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    for d in range(2 * k - 2, k - 1, -1):
        c = prod[d] % p
        if c:
            for j in range(k):
                prod[d - k + j] -= c * m[j]
    return tuple(v % p for v in prod[:k])


def _slow_pow(ctx: FieldCtx, a, e: int):
    acc = ctx.one.c
    while e:
        if e & 1:
            acc = _slow_mul(ctx, acc, a)
        a = _slow_mul(ctx, a, a)
        e >>= 1
    return acc


@functools.lru_cache(maxsize=None)
def _tables(ctx: FieldCtx):
    if ctx.k == 1 or ctx.q > TABLE_LIMIT:
        return None
    n = ctx.q - 1
    one = ctx.one.c
    factors = prime_factors(n)
    for cand in itertools.product(range(ctx.p), repeat=ctx.k):
        if not any(cand):
            continue
        if all(_slow_pow(ctx, cand, n // ell) != one for ell in factors):
            g = cand
            break
    exp = [one]
    for _ in range(n - 1):
        exp.append(_slow_mul(ctx, exp[-1], g))
    log = {c: i for i, c in enumerate(exp)}
    # doubled so that exp[la + lb] needs no reduction
    return log, exp + exp


@functools.lru_cache(maxsize=None)
def _nonresidue(ctx: FieldCtx) -> "Fq":
    half = (ctx.q - 1) // 2
    minus_one = -ctx.one
    for z in ctx.elements():
        if z and z ** half == minus_one:
            return z
    raise AssertionError("odd-order field without a non-residue")


class Fq:
    """An element of a :class:`FieldCtx`."""

    __slots__ = ("ctx", "c")

    def __init__(self, ctx: FieldCtx, c: tuple[int, ...]):
        self.ctx = ctx
        self.c = c

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.c

    def key(self) -> tuple[int, ...]:
        """Sort key: lexicographic order of the coordinate vector."""
        return self.c

    def _other(self, other):
        if isinstance(other, Fq):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise MixedFields(f"{self.ctx} vs {other.ctx}")
            return other.c
        if isinstance(other, int):
            return self.ctx(other).c
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fq(self.ctx, self.ctx._add(self.c, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fq(self.ctx, self.ctx._sub(self.c, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fq(self.ctx, self.ctx._sub(o, self.c))

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fq(self.ctx, self.ctx._mul(self.c, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fq(self.ctx, self.ctx._mul(self.c, self.ctx._inv(o)))

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Fq(self.ctx, self.ctx._mul(o, self.ctx._inv(self.c)))

    def __neg__(self):
        return Fq(self.ctx, self.ctx._neg(self.c))

    def __pow__(self, e: int):
        return Fq(self.ctx, self.ctx._pow(self.c, e))

    def inverse(self) -> "Fq":
        return Fq(self.ctx, self.ctx._inv(self.c))

    def __eq__(self, other):
        if isinstance(other, Fq):
            return self.c == other.c and (self.ctx is other.ctx or self.ctx == other.ctx)
        if isinstance(other, int):
            return self.c == self.ctx(other).c
        return NotImplemented

    def __hash__(self):
        return hash(self.c)

    def __bool__(self):
        return any(self.c)

    def __int__(self):
        if any(self.c[1:]):
            raise ValueError(f"{self!r} is not in the prime field")
        return self.c[0]

    def in_prime_field(self) -> bool:
        return not any(self.c[1:])

    def __repr__(self):
        if self.ctx.k == 1:
            return str(self.c[0])
        terms = []
        for i, v in enumerate(self.c):
            if v:
                mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
                if not mono:
                    terms.append(str(v))
                else:
                    terms.append(mono if v == 1 else f"{v}*{mono}")
        return "+".join(terms) if terms else "0"

    def frobenius(self) -> "Fq":
        return self ** self.ctx.p

    def is_square(self) -> bool:
        return not self or self ** ((self.ctx.q - 1) // 2) == 1

    def sqrt(self) -> Optional["Fq"]:
        """A square root, the lexicographically smaller of the pair; None for non-squares."""
        ctx = self.ctx
        if not self:
            return self
        t = _tables(ctx)
        if t is not None:
            la = t[0][self.c]
            if la % 2:
                return None
            r = Fq(ctx, t[1][la // 2])
        else:
            r = _tonelli_shanks(self)
            if r is None:
                return None
        s = -r
        return r if r.c <= s.c else s


def _tonelli_shanks(a: Fq) -> Optional[Fq]:
    ctx = a.ctx
    q = ctx.q
    if a ** ((q - 1) // 2) != 1:
        return None
    Q, S = q - 1, 0
    while Q % 2 == 0:
        Q //= 2
        S += 1
    z = _nonresidue(ctx)
    M, c, t, R = S, z ** Q, a ** Q, a ** ((Q + 1) // 2)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2
            i += 1
        b = c ** (1 << (M - i - 1))
        M, c = i, b * b
        t, R = t * c, R * b
    return R


def make_field(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Build (or fetch the cached) context for F_{p^k}.

    ``modulus`` is an ascending coefficient list of length k+1 with leading 1.
    When omitted for k > 1, the lexicographically smallest monic irreducible
    (coefficient vector c_0..c_{k-1} compared as a tuple) is used.
    """
    mod = None if modulus is None else tuple(int(c) for c in modulus)
    return _make_field(int(p), int(k), mod)


@functools.lru_cache(maxsize=None)
def _make_field(p: int, k: int, modulus: Optional[tuple[int, ...]]) -> FieldCtx:
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p >= 1 << 31:
        raise ValueError(f"p = {p} exceeds the machine-integer bound 2^31")
    if k < 1:
        raise ValueError("extension degree must be >= 1")
    if k == 1:
        if modulus is not None and (len(modulus) != 2 or modulus[1] % p != 1):
            raise ReducibleModulus(f"degree-1 modulus must be monic linear, got {modulus}")
        return FieldCtx(p, 1, (0, 1))
    if modulus is None:
        # c_0 = 0 would make x a factor
        for low in itertools.product(range(1, p), *[range(p)] * (k - 1)):
            cand = low + (1,)
            if any(_eval_int(cand, x, p) == 0 for x in range(1, p)):
                continue
            if _is_irreducible(cand, p):
                return FieldCtx(p, k, cand)
        raise AssertionError("no irreducible polynomial found")
    modulus = tuple(c % p for c in modulus)
    if len(modulus) != k + 1 or modulus[-1] != 1:
        raise ReducibleModulus(f"modulus must be monic of degree {k}: {modulus}")
    if not _is_irreducible(modulus, p):
        raise ReducibleModulus(f"{modulus} is reducible over F_{p}")
    return FieldCtx(p, k, modulus)


# Polynomials over a FieldCtx as coefficient lists (low degree first), used
# only to split the source modulus inside the target field.

def _fq_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _fq_divmod(a, b):
    a, q = list(a), [None] * max(len(a) - len(b) + 1, 0)
    inv = b[-1].inverse()
    for d in range(len(a) - len(b), -1, -1):
        c = a[d + len(b) - 1] * inv
        q[d] = c
        if c:
            for i, e in enumerate(b):
                a[d + i] = a[d + i] - c * e
    return q, _fq_trim(a[: len(b) - 1])


def _fq_mulmod(a, b, m):
    if not a or not b:
        return []
    prod = [a[0].ctx.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = prod[i + j] + x * y
    return _fq_divmod(_fq_trim(prod), m)[1]


def _fq_gcd(a, b):
    while b:
        a, b = b, _fq_divmod(a, b)[1]
    return a


def _one_root(g, target: FieldCtx) -> "Fq":
    """A root of the squarefree, fully split g by equal-degree splitting."""
    rng = random.Random(0)
    half = (target.q - 1) // 2
    while len(g) > 2:
        a = target.random(rng)
        base, acc, e = [a, target.one], [target.one], half
        while e:
            if e & 1:
                acc = _fq_mulmod(acc, base, g)
            base = _fq_mulmod(base, base, g)
            e >>= 1
        if not acc:
            continue
        acc[0] = acc[0] - target.one
        d = _fq_gcd(g, _fq_trim(acc))
        if 1 < len(d) < len(g):
            other = _fq_divmod(g, d)[0]
            g = d if len(d) <= len(other) else other
    return -g[0] / g[1]


@functools.lru_cache(maxsize=None)
def _basis_images(src: FieldCtx, target: FieldCtx) -> tuple[Fq, ...]:
    if src.k == 1:
        return (target.one,)
    # the roots are one root and its Frobenius conjugates, so the
    # lex-smallest can be picked without enumerating the target
    g = [target(c) for c in src.modulus]
    r = _one_root(g, target)
    conj = [r]
    for _ in range(src.k - 1):
        conj.append(conj[-1].frobenius())
    r = min(conj, key=Fq.key)
    images = [target.one]
    for _ in range(src.k - 1):
        images.append(images[-1] * r)
    return tuple(images)


def embed(a: Fq, target: FieldCtx) -> Fq:
    """Image of ``a`` under the embedding sending x to the lex-smallest root of
    the source modulus in ``target``."""
    src = a.ctx
    if src is target or src == target:
        return a
    if src.p != target.p or target.k % src.k:
        raise IncompatibleDegrees(f"cannot embed {src} into {target}")
    out = target.zero
    for c, img in zip(a.c, _basis_images(src, target)):
        if c:
            out = out + img * c
    return out


def common_field(a: FieldCtx, b: FieldCtx) -> FieldCtx:
    """Smallest default-modulus field containing copies of both."""
    if a.p != b.p:
        raise MixedFields(f"{a} and {b} have different characteristic")
    if a == b:
        return a
    if a.k % b.k == 0:
        return a
    if b.k % a.k == 0:
        return b
    from math import lcm

    return make_field(a.p, lcm(a.k, b.k))
