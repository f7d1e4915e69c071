"""F_2 x Z_2: sign cocycles from word statistics over the free factor.

The cocycle sigma_j flips sign when the Z_2 part of the first argument is 1
and the j-th exponent-sum statistic of the second argument's word is odd.
The free factor H = F_2 x {0} is C*-simple, its plain centralizer is
{e} x Z_2, and the twist kills that centralizer: the inclusion becomes
irreducible, while with the trivial cocycle it is not.
"""

from kleppner import (DirectProduct, F2Z2Cocycle, FreeGroup, Subgroup, TrivialCocycle,
                      centralizer_of_subgroup, cstar_irreducible, from_name,
                      is_sigma_regular, sigma_centralizer, sigma_regular_subgroup)

f2 = FreeGroup(2)
g = DirectProduct(f2, from_name("Z_2"))
h = Subgroup.product(g, Subgroup.full(f2), Subgroup.trivial(g.right))
e = f2.identity()

print("-- the plain centralizer survives the trivial cocycle")
print(f"   C_G(H) = {centralizer_of_subgroup(g, h).describe_desc()}")
triv = cstar_irreducible(g, h, TrivialCocycle(g))
print(f"   trivial cocycle verdict: {triv.conclusion}, witness {triv.witness}")

print("-- the sign cocycles make the central element irregular")
for j in (1, 2, 3):
    sigma = F2Z2Cocycle(g, j)
    reg = is_sigma_regular((e, 1), h, sigma)
    sc = sigma_centralizer(g, h, sigma)
    v = cstar_irreducible(g, h, sigma)
    print(f"   sigma_{j}: (e,1) regular w.r.t. H: {reg.status} "
          f"(witness {g.element_str(reg.witness)}); twisted centralizer trivial: "
          f"{sc.is_trivial.status}; verdict {v.conclusion} [rule {v.chain[0].rule}]")

print("-- H is not a sigma_j-regular subgroup of G")
for j in (1, 2, 3):
    r = sigma_regular_subgroup(g, h, F2Z2Cocycle(g, j))
    print(f"   sigma_{j}: {r.status}, witness {g.element_str(r.witness)} "
          "(regular w.r.t. H, irregular w.r.t. G)")
