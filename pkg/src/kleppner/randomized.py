"""Seeded random instances: root-of-unity cocycles on finite tables and
coboundary data, for sweeps and invariance checks."""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd

from .cocycles import PhaseTableCocycle, TableBeta
from .groups.finite import FiniteTable
from .phases import Phase

DENOMINATORS = (1, 2, 3, 4, 6, 8, 12)


def random_beta_table(G: FiniteTable, rng: random.Random,
                      denominators=DENOMINATORS) -> TableBeta:
    mapping = {}
    e = G.identity()
    for g in G.elements():
        if g == e:
            mapping[g] = Phase(0)
        else:
            d = rng.choice(denominators)
            mapping[g] = Phase(Fraction(rng.randrange(d), d))
    return TableBeta(G, mapping, label="random table")


def random_table_cocycle(G: FiniteTable, rng: random.Random,
                         denominators=DENOMINATORS) -> PhaseTableCocycle:
    """A pullback of a random bicharacter along the abelianization coordinates,
    twisted by a random coboundary.  Always a valid normalized cocycle."""
    n = G.order
    values = [[Fraction(0)] * n for _ in range(n)]

    if G.ab_coords is not None:
        coords, moduli = G.ab_coords
        k = len(moduli)
        bichar = [[Fraction(0)] * k for _ in range(k)]
        for j in range(k):
            for l in range(k):
                g_ = gcd(moduli[j], moduli[l])
                if g_ > 1:
                    bichar[j][l] = Fraction(rng.randrange(g_), g_)
        for g in range(n):
            cg = coords[g]
            for h in range(n):
                ch = coords[h]
                acc = Fraction(0)
                for j in range(k):
                    if cg[j]:
                        for l in range(k):
                            if ch[l]:
                                acc += cg[j] * ch[l] * bichar[j][l]
                values[g][h] = acc

    beta = random_beta_table(G, rng)
    for g in range(n):
        bg = beta(g).rational
        for h in range(n):
            values[g][h] += bg + beta(h).rational - beta(G.mul(g, h)).rational

    table = [[Phase(values[g][h]) for h in range(n)] for g in range(n)]
    return PhaseTableCocycle(G, table)
