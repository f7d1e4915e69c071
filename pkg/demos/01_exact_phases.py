"""Exact circle-valued phases: rationals plus formal irrational symbols.

A Phase is the exponent p of exp(2*pi*i*p), reduced mod 1.  Symbols declared
in a basis are treated as Q-linearly independent together with 1, which makes
"is this circle value equal to 1?" decidable by inspection.
"""

from fractions import Fraction

from kleppner import IrrationalBasis, Phase, parse_phase, qdim

basis = IrrationalBasis(["theta"])
theta = basis.symbol("theta")

print("-- arithmetic is exact and reduces mod 1")
p = Phase(Fraction(3, 4), {"theta": Fraction(1, 2)}, basis)
q = Phase(Fraction(1, 2), {"theta": Fraction(1, 2)}, basis)
print(f"   ({p}) + ({q}) = {p + q}")
print(f"   1/2 + 1/2 = {Phase(Fraction(1, 2)) + Phase(Fraction(1, 2))}   (an order-2 phase)")
print(f"   theta - theta = {theta - theta}")

print("-- equality with 1 is decidable")
print(f"   is_one(0):     {Phase(0).is_one()}")
print(f"   is_one(theta): {theta.is_one()}   (a formal irrational is never integral)")
print(f"   is_one(1/3):   {Phase(Fraction(1, 3)).is_one()}")

print("-- phases serialize as strings and parse back")
s = str(p)
print(f"   str: {s!r} -> parses to {parse_phase(s, basis)}")

print("-- qdim: the dimension over Q of span({1} + values)")
b3 = IrrationalBasis(["t1", "t2", "t3"])
independent = [b3.symbol("t1"), b3.symbol("t2"), b3.symbol("t3")]
print(f"   three independent symbols: qdim = {qdim(independent)}")
bt = IrrationalBasis(["t"])
dependent = [bt.symbol("t"), bt.symbol("t", 2), bt.rational(Fraction(1, 2))]
print(f"   t, 2t, 1/2 over one symbol: qdim = {qdim(dependent)}")
print(f"   no values at all:           qdim = {qdim([])}")

print("-- dependent parameters are written over a smaller basis")
t3_basis = IrrationalBasis(["t3"])
t1 = parse_phase("1/3 + (2)t3", t3_basis)
print(f"   t1 := {t1}  lives in span_Q(1, t3); no relations are ever inferred")
