"""Shared test helpers: independent oracles and randomized samplers.

The oracles here deliberately avoid the library's counting algorithms:
root sets are regenerated by reflection-orbit closure, and graded partition
counts by plain enumeration over a multiplicity box.
"""

from __future__ import annotations

import itertools
from random import Random

from qkostant import RootSystem, Weight


def orbit_positive_roots(cartan) -> set[tuple[int, ...]]:
    """All positive roots via reflection-orbit closure from the simple roots.

    Independent of the library's height-induction construction: saturates
    the set of +-simple roots under every simple reflection
    s_i(v) = v - <v, coroot_i> alpha_i, then keeps the nonnegative vectors.
    """
    r = len(cartan)
    roots: set[tuple[int, ...]] = set()
    for i in range(r):
        unit = tuple(1 if j == i else 0 for j in range(r))
        roots.add(unit)
        roots.add(tuple(-c for c in unit))
    frontier = set(roots)
    while frontier:
        new = set()
        for v in frontier:
            for i in range(r):
                pairing = sum(cartan[i][j] * v[j] for j in range(r))
                w = list(v)
                w[i] -= pairing
                w = tuple(w)
                if w not in roots:
                    roots.add(w)
                    new.add(w)
        frontier = new
    return {v for v in roots if all(c >= 0 for c in v)}


def brute_force_pq(root_vectors, xi: tuple[int, ...]) -> tuple[int, ...]:
    """Graded partition count by enumerating the whole multiplicity box.

    Each root's usage is bounded coordinatewise; every combination in the
    product box is checked by direct summation.  Exponential, so callers
    keep xi small (the tests use rank <= 3 and height <= 8).
    """
    r = len(xi)
    bounds = []
    for v in root_vectors:
        bounds.append(min(xi[j] // v[j] for j in range(r) if v[j]))
    counts: dict[int, int] = {}
    for combo in itertools.product(*(range(b + 1) for b in bounds)):
        total = [0] * r
        for m, v in zip(combo, root_vectors):
            if m:
                for j in range(r):
                    total[j] += m * v[j]
        if tuple(total) == xi:
            k = sum(combo)
            counts[k] = counts.get(k, 0) + 1
    if not counts:
        return ()
    top = max(counts)
    return tuple(counts.get(i, 0) for i in range(top + 1))


def random_dominant_weight(rs: RootSystem, rng: Random, max_total: int = 2) -> Weight:
    """A dominant integral weight with fundamental coordinates summing to at
    most ``max_total``."""
    m = [0] * rs.rank
    for _ in range(rng.randint(0, max_total)):
        m[rng.randrange(rs.rank)] += 1
    return rs.omega_to_alpha(m)


def random_dominant_pair(
    rs: RootSystem, rng: Random, max_total: int = 2
) -> tuple[Weight, Weight]:
    """A dominant (lambda, mu) pair; half the time mu is built from lambda by
    subtracting positive roots, so the pair is root-lattice compatible and
    the alternation set is usually nonempty."""
    lam = random_dominant_weight(rs, rng, max_total)
    if rng.random() < 0.5:
        return lam, random_dominant_weight(rs, rng, max_total)
    for _ in range(40):
        beta = [0] * rs.rank
        for _ in range(rng.randint(1, 2)):
            v = rng.choice(rs.root_vectors)
            for j in range(rs.rank):
                beta[j] += v[j]
        mu = lam - Weight(beta)
        if rs.is_dominant(mu):
            return lam, mu
    return lam, rs.zero_weight()
