import random
from fractions import Fraction
from itertools import combinations

import pytest

from kleppner.phases import (BasisMismatchError, IrrationalBasis, Phase, PhaseParseError,
                             parse_phase, phase_add, phase_is_one, qdim)

B = IrrationalBasis(["theta"])
B3 = IrrationalBasis(["t1", "t2", "t3"])


def rand_phase(rng, basis):
    coeffs = {s: Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for s in basis.symbols}
    return Phase(Fraction(rng.randint(-12, 12), rng.randint(1, 9)), coeffs, basis)


def test_construction_reduces_mod_one():
    p = Phase(Fraction(7, 4))
    assert p.rational == Fraction(3, 4)
    q = Phase(Fraction(-1, 3))
    assert q.rational == Fraction(2, 3)
    assert Phase(5).rational == 0


def test_zero_coefficients_dropped():
    p = Phase(0, {"theta": 0}, B)
    assert p.coeffs == ()
    assert p == B.zero()


def test_add_examples():
    assert Phase(Fraction(1, 2)) + Phase(Fraction(1, 2)) == Phase(0)
    assert B.symbol("theta") + B.symbol("theta", -1) == B.zero()
    p = Phase(Fraction(3, 4), {"theta": Fraction(1, 2)}, B)
    q = Phase(Fraction(1, 2), {"theta": Fraction(1, 2)}, B)
    assert p + q == Phase(Fraction(1, 4), {"theta": 1}, B)


def test_is_one_examples():
    assert phase_is_one(Phase(0))
    assert not phase_is_one(B.symbol("theta"))
    assert not phase_is_one(Phase(Fraction(1, 3)))


def test_basis_mismatch_rejected():
    with pytest.raises(BasisMismatchError):
        phase_add(B.symbol("theta"), B3.symbol("t1"))


def test_group_laws_random():
    rng = random.Random(11)
    for _ in range(300):
        p, q, r = (rand_phase(rng, B3) for _ in range(3))
        assert (p + q) + r == p + (q + r)
        assert p + q == q + p
        assert p + B3.zero() == p
        assert phase_is_one(p + (-p))


def test_scalar_mult():
    p = Phase(Fraction(1, 3), {"theta": Fraction(1, 2)}, B)
    assert p * 2 == Phase(Fraction(2, 3), {"theta": 1}, B)
    assert p * 0 == B.zero()
    assert 3 * p == p + p + p


def test_str_and_parse_round_trip():
    rng = random.Random(5)
    for _ in range(100):
        p = rand_phase(rng, B3)
        assert parse_phase(str(p), B3) == p
    assert str(Phase(0)) == "0"
    assert str(B.symbol("theta")) == "theta"
    assert str(Phase(Fraction(1, 2), {"theta": Fraction(-1, 3)}, B)) == "1/2 + (-1/3)theta"


def test_parse_variants():
    assert parse_phase("1/2", B) == Phase(Fraction(1, 2), {}, B)
    assert parse_phase("-(1/2)theta + 1/3", B) == Phase(Fraction(1, 3), {"theta": Fraction(-1, 2)}, B)
    assert parse_phase("theta", B) == B.symbol("theta")
    assert parse_phase("2theta", B) == B.symbol("theta", 2)
    with pytest.raises(PhaseParseError):
        parse_phase("zeta", B)
    with pytest.raises(PhaseParseError):
        parse_phase("", B)


def test_parse_substitutions():
    t3 = IrrationalBasis(["t3"])
    subs = {"t1": parse_phase("1/3 + (2)t3", t3)}
    got = parse_phase("(3)t1 + 1/3", t3, subs)
    assert got == Phase(Fraction(4, 3), {"t3": 6}, t3)


def test_qdim_examples():
    assert qdim([B3.symbol("t1"), B3.symbol("t2"), B3.symbol("t3")]) == 4
    assert qdim([]) == 1
    th = B.symbol("theta")
    assert qdim([th, th * 2, B.rational(Fraction(1, 2))]) == 2


def _rank_by_minors(rows):
    # independent rank oracle: largest k with a nonzero k x k minor
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])

    def det(mat):
        if len(mat) == 1:
            return mat[0][0]
        out = 0
        for j in range(len(mat)):
            minor = [r[:j] + r[j + 1:] for r in mat[1:]]
            out += (-1) ** j * mat[0][j] * det(minor)
        return out

    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                sub = [[rows[i][j] for j in ci] for i in ri]
                if det(sub) != 0:
                    return k
    return 0


def test_qdim_against_minor_rank():
    rng = random.Random(23)
    for _ in range(60):
        nvals = rng.randint(0, 4)
        vals = []
        rows = []
        for _ in range(nvals):
            coeffs = {s: Fraction(rng.randint(-3, 3)) for s in B3.symbols}
            vals.append(Phase(Fraction(rng.randint(0, 5), rng.randint(1, 4)), coeffs, B3))
            rows.append([coeffs[s] for s in B3.symbols])
        assert qdim(vals) == 1 + _rank_by_minors(rows)


def test_qdim_invariances():
    rng = random.Random(31)
    vals = [rand_phase(rng, B3) for _ in range(4)]
    base = qdim(vals)
    shuffled = vals[::-1]
    assert qdim(shuffled) == base
    scaled = [v * Fraction(3, 7) for v in vals]
    assert qdim(scaled) == base
