import random
from fractions import Fraction

import pytest

from kleppner.cocycles import (CocycleError, F2Z2Cocycle, HeisenbergCocycle,
                               PhaseTableCocycle, ProductCocycle, RestrictionCocycle,
                               SeededBeta, TrivialCocycle, ValidationBudget, ZeroBeta,
                               check_twist_identities, commutation_phase, conj_twist,
                               rotation_cocycle, similarity_transform, three_torus_cocycle,
                               transport, validate_cocycle)
from kleppner.groups import (DirectProduct, FreeAbelian, FreeGroup, Heisenberg, Subgroup,
                             from_name)
from kleppner.phases import IrrationalBasis, Phase

B = IrrationalBasis(["theta"])
TH = B.symbol("theta")
Z2 = FreeAbelian(2)
HEIS = Heisenberg()
F2 = FreeGroup(2)
F2Z2 = DirectProduct(F2, from_name("Z_2"))


def anticommute_table(group):
    # sigma((a,b),(a',b')) = (-1)^(b a') on Z_2 x Z_2 (element index 2a+b)
    tbl = [[Phase(Fraction((g % 2) * (h // 2), 2)) for h in range(4)] for g in range(4)]
    return PhaseTableCocycle(group, tbl)


def all_shipped_variants():
    z22 = from_name("Z_2 x Z_2")
    b3 = IrrationalBasis(["t1", "t2", "t3"])
    bh = IrrationalBasis(["gamma", "theta"])
    z3 = FreeAbelian(3)
    z4 = from_name("Z_4")
    prod = DirectProduct(Z2, z4)
    rot = rotation_cocycle(Z2, TH)
    hsub = Subgroup.coordinate_zero(HEIS, {0})
    return [
        TrivialCocycle(F2),
        rot,
        three_torus_cocycle(z3, [b3.symbol("t1"), b3.symbol("t2"), b3.symbol("t3")]),
        HeisenbergCocycle(HEIS, bh.symbol("gamma"), bh.symbol("theta")),
        HeisenbergCocycle(HEIS, Phase(Fraction(1, 3)), Phase(Fraction(1, 2))),
        F2Z2Cocycle(F2Z2, 1),
        F2Z2Cocycle(F2Z2, 2),
        F2Z2Cocycle(F2Z2, 3),
        anticommute_table(z22),
        ProductCocycle(prod, rot, TrivialCocycle(z4)),
        similarity_transform(rot, SeededBeta(Z2, seed=4, denominator=8)),
        RestrictionCocycle(HeisenbergCocycle(HEIS, bh.zero(), bh.symbol("theta")), hsub),
    ]


def test_eval_examples():
    rot = rotation_cocycle(Z2, TH)
    assert rot((1, 0), (0, 1)) == Phase(0, {"theta": Fraction(1, 2)}, B)
    assert rot((0, 0), (5, -3)).is_one()
    assert rot((5, -3), (0, 0)).is_one()
    s1 = F2Z2Cocycle(F2Z2, 1)
    x = (F2.parse_element("b^3ab"), 1)
    a = (F2.gen("a"), 0)
    assert s1(x, a) == Phase(Fraction(1, 2))  # statistic of 'a' is odd
    assert s1(a, x).is_one()


def test_heisenberg_formula_restricts_to_theta_only():
    bh = IrrationalBasis(["gamma", "theta"])
    sig = HeisenbergCocycle(HEIS, bh.symbol("gamma"), bh.symbol("theta"))
    p = sig((0, 2, 3), (0, 5, 7))
    assert p == Phase(0, {"theta": 14}, bh)  # theta * a2 * b3, no gamma part


def test_validation_passes_for_all_variants():
    for sigma in all_shipped_variants():
        res = validate_cocycle(sigma, ValidationBudget(samples=250, seed=1))
        assert res.passed, (sigma.describe(), res.witness)


def test_validation_catches_corruption():
    z22 = from_name("Z_2 x Z_2")
    good = anticommute_table(z22)
    rows = [list(r) for r in good.table]
    rows[1][2] = rows[1][2] + Phase(Fraction(1, 3))  # corrupt one entry
    bad = PhaseTableCocycle(z22, rows)
    res = validate_cocycle(bad)
    assert not res.passed
    assert res.witness is not None
    g, h, k = res.witness
    lhs = bad.value(g, h) + bad.value(z22.mul(g, h), k)
    rhs = bad.value(g, z22.mul(h, k)) + bad.value(h, k)
    assert lhs != rhs  # the witness replays


def test_normalization_enforced_at_construction():
    z2t = from_name("Z_2")
    with pytest.raises(CocycleError):
        PhaseTableCocycle(z2t, [[Phase(Fraction(1, 2)), Phase(0)], [Phase(0), Phase(0)]])


def test_conj_twist_examples():
    rot = rotation_cocycle(Z2, TH)
    # commuting pair: sigma(h,g) - sigma(g,h) since hgh^-1 = g
    assert conj_twist(rot, (0, 1), (1, 0)) == Phase(0, {"theta": -1}, B)
    rng = random.Random(2)
    for sigma in all_shipped_variants():
        g = sigma.random_domain_element(rng, 4)
        e = sigma.group.identity()
        assert conj_twist(sigma, e, g).is_one()
        assert conj_twist(sigma, g, e).is_one()


def test_twist_identities_all_variants():
    for sigma in all_shipped_variants():
        res = check_twist_identities(sigma, ValidationBudget(samples=150, seed=3))
        assert res.passed, (sigma.describe(), res.witness, res.detail)


def test_similarity_zero_beta_is_pointwise_identity():
    rot = rotation_cocycle(Z2, TH)
    same = similarity_transform(rot, ZeroBeta(B))
    rng = random.Random(4)
    for _ in range(50):
        g, h = Z2.random_element(rng), Z2.random_element(rng)
        assert same(g, h) == rot(g, h)


def test_similarity_requires_normalized_beta():
    rot = rotation_cocycle(Z2, TH)
    from kleppner.cocycles import FuncBeta
    with pytest.raises(CocycleError):
        similarity_transform(rot, FuncBeta(lambda g: Phase(Fraction(1, 2)), "bad"))


def test_similarity_preserves_commutation_phase():
    rng = random.Random(5)
    rot = rotation_cocycle(Z2, TH)
    twisted = similarity_transform(rot, SeededBeta(Z2, seed=9, denominator=12))
    for _ in range(100):
        g, h = Z2.random_element(rng), Z2.random_element(rng)
        assert commutation_phase(rot, g, h) == commutation_phase(twisted, g, h)


def test_similarity_of_similarity_validates():
    rot = rotation_cocycle(Z2, TH)
    stacked = similarity_transform(similarity_transform(rot, SeededBeta(Z2, 1, 4)),
                                   SeededBeta(Z2, 2, 8))
    assert validate_cocycle(stacked, ValidationBudget(samples=150, seed=6)).passed


def test_restriction_membership_errors():
    bh = IrrationalBasis(["gamma", "theta"])
    hsub = Subgroup.coordinate_zero(HEIS, {0})
    restr = RestrictionCocycle(HeisenbergCocycle(HEIS, bh.zero(), bh.symbol("theta")), hsub)
    assert restr((0, 1, 0), (0, 0, 1)) == Phase(0, {"theta": 1}, bh)
    with pytest.raises(CocycleError):
        restr((1, 0, 0), (0, 0, 1))


def test_transport_matches_pointwise():
    rot = rotation_cocycle(Z2, TH)
    hpq = Subgroup.sublattice(Z2, [(2, 0), (0, 3)])
    restricted, asg = transport(rot, hpq)
    rng = random.Random(7)
    for _ in range(60):
        x = asg.group.random_element(rng)
        y = asg.group.random_element(rng)
        assert restricted(x, y) == rot(asg.embed(x), asg.embed(y))
