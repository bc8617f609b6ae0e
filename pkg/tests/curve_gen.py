"""Seeded generators of curves whose branch points are all rational."""
from __future__ import annotations

import random

from richelot.curves import INF, curve_from_points, new_curve
from richelot.ff import make_field
from richelot.involution import MobiusMap

# (p, k) with q <= 125
SMALL_FIELDS = [(7, 1), (11, 1), (13, 1), (17, 1), (19, 1), (23, 1), (29, 1), (31, 1),
                (3, 2), (5, 2), (7, 2), (11, 2), (3, 3), (5, 3), (37, 1), (101, 1), (113, 1)]


def _field(rng, n_points):
    while True:
        p, k = rng.choice(SMALL_FIELDS)
        if p ** k + 1 >= n_points + 2:
            return make_field(p, k)


def _projective(F):
    return list(F.elements()) + [INF]


def random_split_curve(rng: random.Random, genus=None):
    """y^2 = lead * prod (x - P) over distinct random P in P^1(F_q)."""
    g = genus or rng.choice([2, 3])
    F = _field(rng, 2 * g + 2)
    pts = rng.sample(_projective(F), 2 * g + 2)
    lead = F.random(rng)
    while not lead:
        lead = F.random(rng)
    return new_curve(F, curve_from_points(F, pts, lead)), F


def random_involution(rng: random.Random, F):
    while True:
        a, b, c = (F.random(rng) for _ in range(3))
        if -a * a - b * c:
            return MobiusMap.of(a, b, c, -a)


def symmetric_curve(rng: random.Random, genus=None):
    """Branch set made of orbits {P, m(P)} of a random involution m."""
    g = genus or rng.choice([2, 3])
    F = _field(rng, 2 * g + 2 + 2)
    m = random_involution(rng, F)
    free = [P for P in _projective(F) if m(P) != P]
    rng.shuffle(free)
    pts = []
    for P in free:
        if P not in pts:
            pts += [P, m(P)]
        if len(pts) == 2 * g + 2:
            break
    if len(pts) < 2 * g + 2:
        return symmetric_curve(rng, genus)
    return new_curve(F, curve_from_points(F, pts)), F
