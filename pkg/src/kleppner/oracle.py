"""Brute-force ground truth: the regular projective representation of a finite
group and exact commutant dimensions.

All matrices here are monomial with root-of-unity entries, so products never
leave that class and every computation is exact: an entry is either absent or
a rational phase.  The relative commutant dimension is computed along two
independent routes and any disagreement raises:

  route A: solve T lam(h) = lam(h) T over T in the span of the lam(g), read
           entrywise off the matrices; every entry equation relates exactly
           two coefficients with root-of-unity factors, so exact elimination
           is scaling propagation over components (contradiction => zero);
  route B: count the H-conjugacy classes that are regular for the cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional

from .cocycles import Cocycle
from .groups.finite import FiniteTable
from .groups.subgroups import Subgroup
from .phases import Phase

ORDER_CAP = 64


class OracleError(ValueError):
    pass


class OracleMismatchError(OracleError):
    """The two routes disagree: an implementation bug, the oracle's whole point."""

    def __init__(self, dim_a: int, dim_b: int, context: str) -> None:
        super().__init__(f"route A dimension {dim_a} != route B count {dim_b} ({context})")
        self.dim_a = dim_a
        self.dim_b = dim_b


class MonomialMatrix:
    """One nonzero root-of-unity entry per row and column.

    Stored columnwise: column k holds its row index and the phase exponent
    (a Fraction mod 1) of the entry there.
    """

    __slots__ = ("n", "row_of_col", "phase_of_col")

    def __init__(self, row_of_col: tuple[int, ...], phase_of_col: tuple[Fraction, ...]) -> None:
        self.n = len(row_of_col)
        self.row_of_col = row_of_col
        self.phase_of_col = phase_of_col
        if sorted(row_of_col) != list(range(self.n)):
            raise OracleError("not a monomial matrix: rows collide")

    @staticmethod
    def identity(n: int) -> "MonomialMatrix":
        return MonomialMatrix(tuple(range(n)), tuple(Fraction(0) for _ in range(n)))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        rows = []
        phases = []
        for k in range(self.n):
            mid = other.row_of_col[k]
            rows.append(self.row_of_col[mid])
            phases.append((self.phase_of_col[mid] + other.phase_of_col[k]) % 1)
        return MonomialMatrix(tuple(rows), tuple(phases))

    def adjoint(self) -> "MonomialMatrix":
        rows = [0] * self.n
        phases = [Fraction(0)] * self.n
        for k in range(self.n):
            r = self.row_of_col[k]
            rows[r] = k
            phases[r] = (-self.phase_of_col[k]) % 1
        return MonomialMatrix(tuple(rows), tuple(phases))

    def scaled(self, phase: Fraction) -> "MonomialMatrix":
        return MonomialMatrix(self.row_of_col,
                              tuple((p + phase) % 1 for p in self.phase_of_col))

    def entry(self, r: int, k: int) -> Optional[Fraction]:
        """Phase exponent of the (r, k) entry, None when the entry is zero."""
        if self.row_of_col[k] == r:
            return self.phase_of_col[k]
        return None

    def is_unitary(self) -> bool:
        prod = self @ self.adjoint()
        return prod == MonomialMatrix.identity(self.n)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MonomialMatrix) and self.row_of_col == other.row_of_col
                and self.phase_of_col == other.phase_of_col)

    def __hash__(self):
        return hash((self.row_of_col, self.phase_of_col))


def _rational_value(sigma: Cocycle, g, h) -> Fraction:
    p = sigma.value(g, h)
    if p.coeffs:
        raise OracleError("the finite-dimensional oracle needs root-of-unity phases; "
                          f"sigma({g},{h}) carries formal irrationals")
    return p.rational


@dataclass
class RegularRep:
    """lam(g) acting on functions on G: (lam(g) xi)(h) = sigma(g, g^-1 h) xi(g^-1 h).

    Besides the matrices, the cocycle values are cached as integers modulo a
    common denominator, so the elimination and counting routes run on exact
    integer arithmetic.
    """

    group: FiniteTable
    sigma: Cocycle
    matrices: dict
    den: int
    int_values: list  # int_values[g][h] = den * phase exponent of sigma(g, h)

    def matrix(self, g: int) -> MonomialMatrix:
        return self.matrices[g]


def build_regular_rep(G: FiniteTable, sigma: Cocycle, verify_pairs: bool | None = None) -> RegularRep:
    if not isinstance(G, FiniteTable):
        raise OracleError("the oracle works on finite table groups")
    if sigma.group is not G:
        raise OracleError("cocycle and group must be aligned")
    n = G.order
    if n > ORDER_CAP:
        raise OracleError(f"order {n} exceeds the oracle cap {ORDER_CAP}")
    values = [[_rational_value(sigma, g, k) for k in G.elements()] for g in G.elements()]
    den = 1
    for row in values:
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
    int_values = [[int(v * den) % den if den > 1 else 0 for v in row] for row in values]
    mats = {}
    for g in G.elements():
        rows = []
        for k in G.elements():
            rows.append(G.mul(g, k))
        mats[g] = MonomialMatrix(tuple(rows), tuple(values[g]))
    rep = RegularRep(G, sigma, mats, den, int_values)
    e = G.identity()
    if mats[e] != MonomialMatrix.identity(n):
        raise OracleError("lam(e) is not the identity; cocycle is not normalized")
    if verify_pairs is None:
        verify_pairs = n <= 12
    if verify_pairs:
        pairs = ((g, h) for g in G.elements() for h in G.elements())
    else:
        pairs = ((g, h) for g in G.generators() for h in G.elements())
    for g, h in pairs:
        expected = mats[G.mul(g, h)].scaled(_rational_value(sigma, g, h))
        if mats[g] @ mats[h] != expected:
            raise OracleError(f"projective relation fails at ({g},{h})")
    return rep


# ---------------------------------------------------------------------------
# route A: exact commutant via the matrices
# ---------------------------------------------------------------------------

class _ScalingUnionFind:
    """Union-find with root-of-unity potentials, the exponents stored as
    integers modulo den: f(x) = zeta^(pot(x)/den) * f(root(x))."""

    def __init__(self, n: int, den: int) -> None:
        self.parent = list(range(n))
        self.pot = [0] * n
        self.dead = [False] * n
        self.den = den

    def find(self, x: int) -> int:
        path = []
        while self.parent[x] != x:
            path.append(x)
            x = self.parent[x]
        acc = 0
        for y in reversed(path):
            acc = (acc + self.pot[y]) % self.den
            self.parent[y] = x
            self.pot[y] = acc
        return x

    def relate(self, u: int, v: int, delta: int) -> None:
        """Impose f(u) = zeta^(delta/den) * f(v)."""
        ru = self.find(u)
        pu = self.pot[u] if u != ru else 0
        rv = self.find(v)
        pv = self.pot[v] if v != rv else 0
        if ru == rv:
            if (pu - pv - delta) % self.den:
                self.dead[ru] = True
            return
        # attach rv under ru: f(rv) = zeta^((pu - delta - pv)/den) f(ru)
        self.parent[rv] = ru
        self.pot[rv] = (pu - delta - pv) % self.den
        if self.dead[rv]:
            self.dead[ru] = True

    def alive_components(self) -> dict[int, list[tuple[int, int]]]:
        comps: dict[int, list[tuple[int, int]]] = {}
        for x in range(len(self.parent)):
            r = self.find(x)
            comps.setdefault(r, []).append((x, self.pot[x] if x != r else 0))
        return {r: members for r, members in comps.items() if not self.dead[r]}


@dataclass
class CommutantSolution:
    """Exact basis of the relative commutant inside the span of the lam(g)."""

    dimension: int
    basis: tuple[dict, ...]  # coefficient functions g -> Phase (root-of-unity values)


def _route_a(rep: RegularRep, hgens: list[int]) -> CommutantSolution:
    G = rep.group
    n = G.order
    den = max(rep.den, 1)
    val = rep.int_values
    table = G.table
    inv = G.inv_table
    uf = _ScalingUnionFind(n, den)

    for h in hgens:
        hinv = inv[h]
        for k in range(n):
            # (T lam(h))[r,k] only sees column m' = h k of lam(h)
            mp = table[h][k]
            b_base = val[h][k]
            kinv = inv[k]
            mpinv = inv[mp]
            row_m = table[hinv]
            for r in range(n):
                # (lam(h) T)[r,k]: lam(h)[r, m] nonzero only at m = h^-1 r
                m = row_m[r]
                u = table[m][kinv]
                lhs = val[h][m] + val[u][k]
                v = table[r][mpinv]
                rhs = val[v][mp] + b_base
                # equation: zeta^lhs f(u) = zeta^rhs f(v)
                uf.relate(u, v, (rhs - lhs) % den)
    comps = uf.alive_components()
    basis = []
    for root in sorted(comps):
        f = {x: Phase(Fraction(pot, den)) for x, pot in sorted(comps[root])}
        basis.append(f)
    return CommutantSolution(len(basis), tuple(basis))


def _verify_solution(rep: RegularRep, hgens: list[int], f: dict) -> bool:
    """Substitute T_f into the commutation equations, entry by entry."""
    G = rep.group
    n = G.order
    sigma = rep.sigma

    def t_entry(r: int, k: int) -> Optional[Fraction]:
        u = G.mul(r, G.inv(k))
        if u not in f:
            return None
        return (f[u].rational + _rational_value(sigma, u, k)) % 1

    for h in hgens:
        lam_h = rep.matrix(h)
        for k in range(n):
            for r in range(n):
                m = G.mul(G.inv(h), r)
                left_t = t_entry(m, k)
                lhs = None if left_t is None else (lam_h.entry(r, m) + left_t) % 1
                mp = G.mul(h, k)
                right_t = t_entry(r, mp)
                rhs = None if right_t is None else (right_t + lam_h.entry(mp, k)) % 1
                if lhs != rhs:
                    return False
    return True


# ---------------------------------------------------------------------------
# route B: regular class counting
# ---------------------------------------------------------------------------

def _h_classes(G: FiniteTable, helems: list[int]) -> list[list[int]]:
    seen: set[int] = set()
    classes = []
    for g in G.elements():
        if g in seen:
            continue
        orbit = sorted({G.conj(h, g) for h in helems})
        seen.update(orbit)
        classes.append(orbit)
    return classes


def _route_b(rep: RegularRep, helems: list[int]) -> tuple[int, list[list[int]]]:
    G = rep.group
    val = rep.int_values
    table = G.table
    regular = []
    for orbit in _h_classes(G, helems):
        g = orbit[0]
        ok = True
        for h in helems:
            if table[h][g] == table[g][h] and val[g][h] != val[h][g]:
                ok = False
                break
        if ok:
            regular.append(orbit)
    return len(regular), regular


# ---------------------------------------------------------------------------
# public surface
# ---------------------------------------------------------------------------

@dataclass
class CommutantReport:
    dim_route_a: int
    dim_route_b: int
    solution: CommutantSolution
    regular_classes: list[list[int]]

    @property
    def dimension(self) -> int:
        return self.dim_route_a


def relative_commutant_dim(G: FiniteTable, H: Subgroup, sigma: Cocycle,
                           verify: bool = False,
                           rep: RegularRep | None = None) -> CommutantReport:
    """Dimension of {T in span lam(G) : T commutes with lam(H)}, both routes."""
    if rep is None:
        rep = build_regular_rep(G, sigma, verify_pairs=False)
    helems = H.enumerate_elements()
    if helems is None:
        helems = sorted(G.closure(set(H.generators())))
    hgens = list(Subgroup.finite_subset(G, helems).generators()) or [G.identity()]
    sol = _route_a(rep, hgens)
    count, regular = _route_b(rep, helems)
    if verify:
        for f in sol.basis:
            if not _verify_solution(rep, hgens, f):
                raise OracleError("route A basis element fails substitution")
    if sol.dimension != count:
        raise OracleMismatchError(sol.dimension, count,
                                  f"G={G.name}, H={H.describe_desc()}, sigma={sigma.describe()}")
    return CommutantReport(sol.dimension, count, sol, regular)


def center_dim(G: FiniteTable, sigma: Cocycle, rep: RegularRep | None = None) -> int:
    return relative_commutant_dim(G, Subgroup.full(G), sigma, rep=rep).dimension


def canonical_trace(rep: RegularRep, mat: MonomialMatrix) -> Optional[Phase]:
    """tau(T) = (T delta_e)(e), i.e. the (e, e) entry: a circle value or None for 0."""
    e = rep.group.identity()
    p = mat.entry(e, e)
    return None if p is None else Phase(p)


def span_trace(rep: RegularRep, coeffs: dict) -> Optional[Phase]:
    """tau of T = sum_g f(g) lam(g): the coefficient at the identity."""
    e = rep.group.identity()
    return coeffs.get(e)
