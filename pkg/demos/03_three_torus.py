"""Rank-3 twisted tori: when is the rank-2 corner an irreducible inclusion?

With three parameters (t1, t2, t3) the inclusion generated by the first two
unitaries is irreducible iff t3 is irrational and the span dimension
qdim over Q of (1, t1, t2, t3) is 3 or 4.  The engine sees this through the
relative Kleppner system; qdim reports the span side of the story.
"""

from fractions import Fraction

from kleppner import (FreeAbelian, IrrationalBasis, Subgroup, cstar_irreducible,
                      intermediate_lattice, parse_phase, qdim, three_torus_cocycle)

z3 = FreeAbelian(3)
corner = Subgroup.sublattice(z3, [(1, 0, 0), (0, 1, 0)])


def analyze(label, thetas):
    sigma = three_torus_cocycle(z3, thetas)
    v = cstar_irreducible(z3, corner, sigma)
    print(f"   {label}: qdim = {qdim(thetas)}, verdict {v.conclusion}"
          + (f", witness {v.witness}" if v.fails else ""))
    return sigma


print("-- three independent parameters: irreducible")
b3 = IrrationalBasis(["t1", "t2", "t3"])
sigma = analyze("independent", [b3.symbol("t1"), b3.symbol("t2"), b3.symbol("t3")])

print("-- t3 rational: the corner algebra itself is not simple")
b2 = IrrationalBasis(["t1", "t2"])
analyze("t3 = 1/2", [b2.symbol("t1"), b2.symbol("t2"), b2.rational(Fraction(1, 2))])

print("-- t1, t2 in span_Q(1, t3): span dimension 2, not irreducible")
b1 = IrrationalBasis(["t3"])
analyze("dependent", [parse_phase("1/3 + (2)t3", b1), parse_phase("1/2 + t3", b1),
                      b1.symbol("t3")])

print("-- the intermediate chain in the irreducible case is indexed by n >= 0")
lat = intermediate_lattice(z3, corner, sigma, max_entries=4)
for entry in lat.entries:
    print(f"   {entry.label}: {entry.subgroup.describe_desc()}")
print(f"   ({lat.note})")
