"""Rotation algebras: Z^2 with the angle cocycle and its sublattice inclusions.

The twisted algebra of (Z^2, sigma_theta) is simple exactly when theta is
irrational; that is Kleppner's condition, decided here by an exact linear
system over the phase coefficients.  Sublattices pZ x qZ give irreducible
inclusions whose intermediate algebras match the subgroups of Z_p x Z_q.
"""

from fractions import Fraction

from kleppner import (FreeAbelian, IrrationalBasis, Phase, Subgroup, cstar_irreducible,
                      intermediate_lattice, kleppner, relative_kleppner, rotation_cocycle)

basis = IrrationalBasis(["theta"])
z2 = FreeAbelian(2)

print("-- a formal angle: simple")
sigma = rotation_cocycle(z2, basis.symbol("theta"))
print(f"   kleppner(Z^2, sigma_theta) = {kleppner(z2, sigma).status}")

print("-- a rational angle: not simple, with a witness class")
half = rotation_cocycle(z2, Phase(Fraction(1, 2)))
k = kleppner(z2, half)
print(f"   kleppner(Z^2, sigma_1/2) = {k.status}, witness class {k.witness.elements}")

print("-- sublattice inclusions H_pq = pZ x qZ")
for (p, q) in [(1, 2), (2, 3), (3, 5)]:
    h = Subgroup.sublattice(z2, [(p, 0), (0, q)])
    rel = relative_kleppner(z2, h, sigma)
    verdict = cstar_irreducible(z2, h, sigma)
    print(f"   (p, q) = ({p}, {q}): relative Kleppner {rel.status}; "
          f"inclusion C*-irreducible: {verdict.conclusion} "
          f"[rule {verdict.chain[0].rule}]")

print("-- intermediate algebras = subgroups of the quotient Z_p x Z_q")
for (p, q) in [(1, 3), (2, 2)]:
    h = Subgroup.sublattice(z2, [(p, 0), (0, q)])
    lat = intermediate_lattice(z2, h, sigma)
    print(f"   (p, q) = ({p}, {q}): {lat.count} intermediate algebras")
    for entry in lat.entries:
        print(f"       {entry.label}: {entry.subgroup.describe_desc()}")
