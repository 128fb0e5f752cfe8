"""Shared oracles and random generators for the test suite.

The pair oracle models ordinals below w^2 as integer pairs (a, b) for
w*a + b, with closed-form arithmetic.  It is kept deliberately
independent of the library code it cross-checks.
"""

from __future__ import annotations

import random

from ordhomeo.homeo import compose, identity, interval_swap, span, swap_points
from ordhomeo.ordinals import OMEGA, Ordinal, omega_pow, parse_ordinal, rank

# ---------------------------------------------------------------------------
# pair oracle (ordinals below w^2)


def pair_add(x, y):
    a, b = x
    c, d = y
    if c > 0:
        return (a + c, d)
    return (a, b + d)


def pair_sub(x, y):
    """xi with x + xi = y; requires x <= y (lexicographic)."""
    a, b = x
    c, d = y
    assert x <= y
    if a == c:
        return (0, d - b)
    return (c - a, d)


def pair_mul(x, y):
    """Product, or None when it leaves the pair-representable range."""
    a, b = x
    c, d = y
    if (a, b) == (0, 0) or (c, d) == (0, 0):
        return (0, 0)
    if c == 0:
        return (a * d, b) if a else (0, b * d)
    if a == 0:
        # finite times infinite: b*(w*c + d) = w*c + b*d, since b*w = w
        return (c, b * d) if b > 1 else (c, d)
    return None


def pair_to_ordinal(x) -> Ordinal:
    a, b = x
    return OMEGA * a + b


def all_pairs(max_coef):
    return [(a, b) for a in range(max_coef + 1) for b in range(max_coef + 1)]


# ---------------------------------------------------------------------------
# random ordinals


def random_ordinal(rng: random.Random, max_rank=3, max_coef=9) -> Ordinal:
    """A random CNF value with finite exponents up to max_rank."""
    value = Ordinal(0)
    for e in range(max_rank, -1, -1):
        if rng.random() < 0.5:
            value = value + omega_pow(Ordinal(e)) * rng.randint(1, max_coef)
    return value


def random_point_of_rank(rng: random.Random, r: int, max_coef=6) -> Ordinal:
    """A random point whose last CNF exponent is exactly r."""
    value = Ordinal(0)
    for e in range(r + 2, r, -1):
        if rng.random() < 0.4:
            value = value + omega_pow(Ordinal(e)) * rng.randint(1, max_coef)
    return value + omega_pow(Ordinal(r)) * rng.randint(1, max_coef)


def o(text: str) -> Ordinal:
    return parse_ordinal(text)


W2 = omega_pow(Ordinal(2))

# ---------------------------------------------------------------------------
# random piecewise maps
#
# All moves are aligned to the grid {w^2*a + w*b + c : a, b, c <= 6}, so
# a map drawn here is determined by its values on the grid alone: grid
# agreement is a faithful extensional-equality oracle for these maps.

GRID = [W2 * a + OMEGA * b + c
        for a in range(7) for b in range(7) for c in range(7)]

GRID_ISOLATED = [x for x in GRID if rank(x) == Ordinal(0)]


def _rank2_block(a):
    return span(W2 * a, W2 * (a + 1))


def _rank1_block(a, b):
    return span(W2 * a + OMEGA * b, W2 * a + OMEGA * (b + 1))


def random_move(rng: random.Random):
    kind = rng.choice(["points", "rank1", "rank2"])
    if kind == "points":
        x, y = rng.sample(GRID_ISOLATED, 2)
        return swap_points(x, y)
    if kind == "rank1":
        blocks = [(a, b) for a in range(7) for b in range(6)]
        (a1, b1), (a2, b2) = rng.sample(blocks, 2)
        return interval_swap(_rank1_block(a1, b1), _rank1_block(a2, b2))
    a1, a2 = rng.sample(range(6), 2)
    return interval_swap(_rank2_block(a1), _rank2_block(a2))


def random_homeo(rng: random.Random, max_moves=4):
    g = identity()
    for _ in range(rng.randint(0, max_moves)):
        g = compose(random_move(rng), g)
    return g


def random_transitivity_problem(rng: random.Random, n_pairs=5, n_frozen=5,
                                max_rank=3):
    from ordhomeo.dynamics import TransitivityProblem
    pairs = []
    xs, ys = set(), set()
    while len(pairs) < n_pairs:
        r = rng.randint(0, max_rank)
        x = random_point_of_rank(rng, r)
        y = random_point_of_rank(rng, r)
        if x in xs or y in ys:
            continue
        pairs.append((x, y))
        xs.add(x)
        ys.add(y)
    frozen = set()
    while len(frozen) < n_frozen:
        f = random_point_of_rank(rng, rng.randint(0, max_rank))
        if f not in xs and f not in ys:
            frozen.add(f)
    return TransitivityProblem(tuple(pairs), frozenset(frozen))
