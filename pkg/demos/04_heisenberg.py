"""The discrete Heisenberg group and its two-parameter cocycles.

G is Z^3 with product (a1,a2,a3)(b1,b2,b3) = (a1+b1, a2+b2, a3+b3+a1*b2);
H = {(0, a2, a3)} is an abelian normal subgroup with C_G(H) = H.  Up to
similarity a cocycle is given by two parameters (gamma, theta), and the
inclusion of the twisted algebra of H is irreducible iff theta is irrational.
"""

from fractions import Fraction

from kleppner import (Heisenberg, HeisenbergCocycle, IrrationalBasis, Phase, Subgroup,
                      centralizer_of_subgroup, cstar_irreducible, h_conjugacy_class,
                      intermediate_lattice, sigma_centralizer)

heis = Heisenberg()
h = Subgroup.coordinate_zero(heis, {0})

print("-- group structure")
print(f"   (1,0,0)*(0,1,0) = {heis.mul((1, 0, 0), (0, 1, 0))}, "
      f"(0,1,0)*(1,0,0) = {heis.mul((0, 1, 0), (1, 0, 0))}")
print(f"   class of (1,0,0) under H: {h_conjugacy_class((1, 0, 0), h).status}")
print(f"   class of (0,2,5) under H: {h_conjugacy_class((0, 2, 5), h).elements}")
print(f"   C_G(H) = {centralizer_of_subgroup(heis, h).describe_desc()}")

print("-- formal parameters: irreducible inclusion")
basis = IrrationalBasis(["gamma", "theta"])
formal = HeisenbergCocycle(heis, basis.symbol("gamma"), basis.symbol("theta"))
v = cstar_irreducible(heis, h, formal)
print(f"   verdict: {v.conclusion} via rule {v.chain[0].rule}")

print("-- theta = 1/2: the twisted centralizer S^sigma(H) is nontrivial")
half = HeisenbergCocycle(heis, Phase(0), Phase(Fraction(1, 2)))
sc = sigma_centralizer(heis, h, half)
print(f"   S^sigma(H) = {sc.description.describe_desc()}")
v2 = cstar_irreducible(heis, h, half)
print(f"   verdict: {v2.conclusion}, witness {v2.witness}")

print("-- the intermediate algebras form a chain Gamma_n, n >= 0")
lat = intermediate_lattice(heis, h, formal, max_entries=5)
for entry in lat.entries:
    print(f"   {entry.label}: {entry.subgroup.describe_desc()}")
