"""Described subgroups of catalog groups.

Each description carries exactly the structure the decision procedures can
exploit: membership, generators, enumeration (finite cases), normality and
index, plus conversion of the subgroup to a standalone catalog group together
with the embedding (``as_group``).  GeneratedBy subgroups of infinite groups
may legitimately have undecided membership; queries then return None.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, NamedTuple, Optional, Sequence

from ..intlinalg import RowLattice
from .abelian import FreeAbelian
from .base import Element, Group, GroupError
from .finite import FiniteTable
from .free import FreeGroup
from .heisenberg import Heisenberg
from .product import DirectProduct


class Infinite:
    _instance: "Infinite | None" = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "infinite"


INFINITE = Infinite()


@dataclass(frozen=True)
class Classification:
    """Outcome of an orbit computation: explicit list, infinity certificate, or cap."""

    status: str  # "finite" | "infinite" | "unknown"
    elements: tuple = ()
    certificate: str = ""
    reason: str = ""

    @property
    def finite(self) -> bool:
        return self.status == "finite"

    @property
    def infinite(self) -> bool:
        return self.status == "infinite"

    @property
    def unknown(self) -> bool:
        return self.status == "unknown"

    @property
    def size(self) -> int | None:
        return len(self.elements) if self.finite else None

    def __repr__(self) -> str:
        if self.finite:
            return f"FiniteClass{{{', '.join(str(x) for x in self.elements)}}}"
        if self.infinite:
            return f"InfiniteClass({self.certificate})"
        return f"UnknownClass({self.reason})"


def finite_class(elements) -> Classification:
    return Classification("finite", tuple(elements))


def infinite_class(certificate: str) -> Classification:
    return Classification("infinite", certificate=certificate)


def unknown_class(reason: str) -> Classification:
    return Classification("unknown", reason=reason)


class AsGroup(NamedTuple):
    group: Group
    embed: Callable[[Element], Element]      # subgroup-group element -> parent element
    retract: Optional[Callable[[Element], Element]]  # parent element of H -> subgroup-group element


class SubgroupDesc:
    kind = "abstract"

    def describe(self, parent: Group) -> str:
        return self.kind


class FullDesc(SubgroupDesc):
    kind = "full"

    def describe(self, parent: Group) -> str:
        return f"the full group {parent.name}"


class TrivialDesc(SubgroupDesc):
    kind = "trivial"

    def describe(self, parent: Group) -> str:
        return "the trivial subgroup"


@dataclass(frozen=True)
class FiniteSubsetDesc(SubgroupDesc):
    elements: tuple

    kind = "finite-subset"

    def describe(self, parent: Group) -> str:
        inner = ", ".join(parent.element_str(x) for x in self.elements)
        return f"finite subgroup {{{inner}}}"


@dataclass(frozen=True)
class SublatticeDesc(SubgroupDesc):
    columns: tuple  # generating integer vectors

    kind = "sublattice"

    def describe(self, parent: Group) -> str:
        cols = ", ".join(str(tuple(c)) for c in self.columns)
        return f"sublattice generated by {cols}"


@dataclass(frozen=True)
class CoordinateZeroDesc(SubgroupDesc):
    zero_coords: frozenset

    kind = "coordinate-zero"

    def describe(self, parent: Group) -> str:
        pattern = ["0" if i in self.zero_coords else f"a{i + 1}" for i in range(3)]
        return "{(" + ", ".join(pattern) + ")}"


@dataclass(frozen=True)
class HeisCongruenceDesc(SubgroupDesc):
    modulus: int  # elements with first coordinate divisible by modulus (>= 2)

    kind = "first-coordinate-multiple"

    def describe(self, parent: Group) -> str:
        return f"{{(a1, a2, a3) : {self.modulus} | a1}}"


@dataclass(frozen=True)
class HeisPlaneDesc(SubgroupDesc):
    """A sublattice of one of the abelian coordinate planes of the Heisenberg
    group: plane 0 is {(0, a2, a3)}, plane 1 is {(a1, 0, a3)}."""

    plane: int
    rows: tuple  # echelon basis of the lattice in the two free coordinates

    kind = "heisenberg-plane-lattice"

    def free_coords(self) -> tuple[int, int]:
        return (1, 2) if self.plane == 0 else (0, 2)

    def describe(self, parent: Group) -> str:
        i, j = self.free_coords()
        gens = ", ".join(str(self.lift(r)) for r in self.rows)
        return f"plane sublattice generated by {gens}"

    def lift(self, pair) -> tuple[int, int, int]:
        out = [0, 0, 0]
        i, j = self.free_coords()
        out[i], out[j] = pair
        return tuple(out)


@dataclass(frozen=True)
class ProductDesc(SubgroupDesc):
    left: "Subgroup"
    right: "Subgroup"

    kind = "product"

    def describe(self, parent: Group) -> str:
        return f"({self.left.describe_desc()}) x ({self.right.describe_desc()})"


@dataclass(frozen=True)
class GeneratedDesc(SubgroupDesc):
    gens: tuple

    kind = "generated"

    def describe(self, parent: Group) -> str:
        inner = ", ".join(parent.element_str(g) for g in self.gens)
        return f"subgroup generated by {inner}"


@dataclass(frozen=True)
class FreeCyclicDesc(SubgroupDesc):
    word: tuple  # nontrivial reduced word; the subgroup is <word>

    kind = "cyclic"

    def describe(self, parent: Group) -> str:
        return f"cyclic subgroup <{parent.element_str(self.word)}>"


class Subgroup:
    """A described subgroup of a catalog group."""

    def __init__(self, parent: Group, desc: SubgroupDesc) -> None:
        self.parent = parent
        self.desc = desc
        self._validate()

    # -- construction helpers --------------------------------------------
    @staticmethod
    def full(parent: Group) -> "Subgroup":
        return Subgroup(parent, FullDesc())

    @staticmethod
    def trivial(parent: Group) -> "Subgroup":
        return Subgroup(parent, TrivialDesc())

    @staticmethod
    def finite_subset(parent: Group, elements: Sequence[Element]) -> "Subgroup":
        elems = sorted({e for e in elements} | {parent.identity()}, key=parent.element_key)
        return Subgroup(parent, FiniteSubsetDesc(tuple(elems)))

    @staticmethod
    def sublattice(parent: Group, columns: Sequence[Sequence[int]]) -> "Subgroup":
        return Subgroup(parent, SublatticeDesc(tuple(tuple(int(x) for x in c) for c in columns)))

    @staticmethod
    def coordinate_zero(parent: Group, zero_coords) -> "Subgroup":
        return Subgroup(parent, CoordinateZeroDesc(frozenset(zero_coords)))

    @staticmethod
    def product(parent: DirectProduct, left: "Subgroup", right: "Subgroup") -> "Subgroup":
        return Subgroup(parent, ProductDesc(left, right))

    @staticmethod
    def generated(parent: Group, gens: Sequence[Element]) -> "Subgroup":
        gens = tuple(parent.check_element(g) for g in gens)
        gens = tuple(g for g in gens if g != parent.identity())
        if not gens:
            return Subgroup.trivial(parent)
        if isinstance(parent, FiniteTable):
            return Subgroup.finite_subset(parent, parent.closure(set(gens)))
        if isinstance(parent, FreeAbelian):
            return Subgroup.sublattice(parent, gens)
        if isinstance(parent, FreeGroup):
            cyc = _free_cyclic_normalize(parent, gens)
            if cyc is not None:
                return Subgroup(parent, FreeCyclicDesc(cyc))
        if isinstance(parent, Heisenberg):
            for plane, dead in ((0, 0), (1, 1)):
                if all(g[dead] == 0 for g in gens):
                    i, j = (1, 2) if plane == 0 else (0, 2)
                    lat = RowLattice(2, [(g[i], g[j]) for g in gens])
                    return Subgroup(parent, HeisPlaneDesc(plane, tuple(lat.basis())))
        return Subgroup(parent, GeneratedDesc(gens))

    @staticmethod
    def heis_congruence(parent: Heisenberg, modulus: int) -> "Subgroup":
        if modulus == 0:
            return Subgroup.coordinate_zero(parent, {0})
        if modulus == 1:
            return Subgroup.full(parent)
        return Subgroup(parent, HeisCongruenceDesc(modulus))

    # -- validation ---------------------------------------------------------
    def _validate(self) -> None:
        parent, desc = self.parent, self.desc
        if isinstance(desc, FiniteSubsetDesc):
            s = set(desc.elements)
            if parent.identity() not in s:
                raise GroupError("finite subset must contain the identity")
            for a in s:
                parent.check_element(a)
                if parent.inv(a) not in s:
                    raise GroupError(f"finite subset not closed under inverse at {parent.element_str(a)}")
                for b in s:
                    if parent.mul(a, b) not in s:
                        raise GroupError("finite subset not closed under multiplication")
        elif isinstance(desc, SublatticeDesc):
            if not isinstance(parent, FreeAbelian):
                raise GroupError("sublattice descriptions require a free abelian parent")
            for c in desc.columns:
                if len(c) != parent.rank:
                    raise GroupError("sublattice generator has wrong length")
        elif isinstance(desc, CoordinateZeroDesc):
            if not isinstance(parent, Heisenberg):
                raise GroupError("coordinate-zero descriptions apply to the Heisenberg parent")
            s = desc.zero_coords
            if not s <= {0, 1, 2}:
                raise GroupError("coordinate indices must lie in {0,1,2}")
            if 2 in s and not (0 in s or 1 in s):
                # third coordinate picks up a1*b2; not closed unless one of them dies
                raise GroupError("{(a1, a2, 0)} is not closed under the Heisenberg product")
        elif isinstance(desc, HeisCongruenceDesc):
            if not isinstance(parent, Heisenberg) or desc.modulus < 2:
                raise GroupError("congruence description needs Heisenberg parent and modulus >= 2")
        elif isinstance(desc, HeisPlaneDesc):
            if not isinstance(parent, Heisenberg) or desc.plane not in (0, 1):
                raise GroupError("plane lattice needs a Heisenberg parent and plane 0 or 1")
        elif isinstance(desc, ProductDesc):
            if not isinstance(parent, DirectProduct):
                raise GroupError("product subgroup needs a direct product parent")
            if desc.left.parent is not parent.left or desc.right.parent is not parent.right:
                raise GroupError("product subgroup factors must describe the parent factors")
        elif isinstance(desc, GeneratedDesc):
            for g in desc.gens:
                parent.check_element(g)
        elif isinstance(desc, FreeCyclicDesc):
            if not isinstance(parent, FreeGroup) or not desc.word:
                raise GroupError("cyclic word description needs a free parent and nontrivial word")

    # -- lattice access (free abelian parents) -----------------------------
    def lattice(self) -> RowLattice:
        if not isinstance(self.desc, SublatticeDesc):
            raise GroupError("not a sublattice subgroup")
        lat = RowLattice(self.parent.rank)
        for c in self.desc.columns:
            lat.add(c)
        return lat

    # -- membership ----------------------------------------------------------
    def contains(self, x: Element) -> bool | None:
        parent, desc = self.parent, self.desc
        parent.check_element(x)
        if isinstance(desc, FullDesc):
            return True
        if isinstance(desc, TrivialDesc):
            return x == parent.identity()
        if isinstance(desc, FiniteSubsetDesc):
            return x in desc.elements
        if isinstance(desc, SublatticeDesc):
            return self.lattice().contains(x)
        if isinstance(desc, CoordinateZeroDesc):
            return all(x[i] == 0 for i in desc.zero_coords)
        if isinstance(desc, HeisCongruenceDesc):
            return x[0] % desc.modulus == 0
        if isinstance(desc, HeisPlaneDesc):
            dead = 0 if desc.plane == 0 else 1
            if x[dead] != 0:
                return False
            i, j = desc.free_coords()
            lat = RowLattice(2, desc.rows)
            return lat.contains((x[i], x[j]))
        if isinstance(desc, ProductDesc):
            lc = desc.left.contains(x[0])
            rc = desc.right.contains(x[1])
            if lc is None or rc is None:
                return None if (lc is not False and rc is not False) else False
            return lc and rc
        if isinstance(desc, HeisPlaneDesc):
            rows = desc.rows
            if not rows:
                one = FiniteTable(((0,),), ("e",), name="1")
                return AsGroup(one, lambda x: (0, 0, 0), lambda x: 0)
            amb = FreeAbelian(len(rows))

            def embed(c, _d=desc, _rows=rows):
                pair = tuple(sum(ci * r[k] for ci, r in zip(c, _rows)) for k in range(2))
                return _d.lift(pair)

            def retract(x, _d=desc, _rows=rows):
                i, j = _d.free_coords()
                return _solve_integer_combination([tuple(r) for r in _rows], (x[i], x[j]))

            return AsGroup(amb, embed, retract)
        if isinstance(desc, FreeCyclicDesc):
            return parent.power_of(x, desc.word) is not None
        return None  # GeneratedDesc in an infinite group: possibly undecided

    # -- generators ----------------------------------------------------------
    def generators(self) -> tuple[Element, ...]:
        parent, desc = self.parent, self.desc
        if isinstance(desc, FullDesc):
            return parent.generators()
        if isinstance(desc, TrivialDesc):
            return ()
        if isinstance(desc, FiniteSubsetDesc):
            return _subset_generators(parent, desc.elements)
        if isinstance(desc, SublatticeDesc):
            return tuple(tuple(r) for r in self.lattice().rows)
        if isinstance(desc, CoordinateZeroDesc):
            gens = []
            for i in range(3):
                if i not in desc.zero_coords:
                    gens.append(tuple(1 if j == i else 0 for j in range(3)))
            return tuple(gens)
        if isinstance(desc, HeisCongruenceDesc):
            return ((desc.modulus, 0, 0), (0, 1, 0), (0, 0, 1))
        if isinstance(desc, HeisPlaneDesc):
            return tuple(desc.lift(r) for r in desc.rows)
        if isinstance(desc, ProductDesc):
            el, er = parent.left.identity(), parent.right.identity()
            out = [(g, er) for g in desc.left.generators()]
            out += [(el, g) for g in desc.right.generators()]
            return tuple(out)
        if isinstance(desc, GeneratedDesc):
            return desc.gens
        if isinstance(desc, HeisPlaneDesc):
            rows = desc.rows
            if not rows:
                one = FiniteTable(((0,),), ("e",), name="1")
                return AsGroup(one, lambda x: (0, 0, 0), lambda x: 0)
            amb = FreeAbelian(len(rows))

            def embed(c, _d=desc, _rows=rows):
                pair = tuple(sum(ci * r[k] for ci, r in zip(c, _rows)) for k in range(2))
                return _d.lift(pair)

            def retract(x, _d=desc, _rows=rows):
                i, j = _d.free_coords()
                return _solve_integer_combination([tuple(r) for r in _rows], (x[i], x[j]))

            return AsGroup(amb, embed, retract)
        if isinstance(desc, FreeCyclicDesc):
            return (desc.word,)
        raise GroupError("no generators for this description")

    # -- enumeration -----------------------------------------------------------
    def enumerate_elements(self) -> list[Element] | None:
        parent, desc = self.parent, self.desc
        if isinstance(desc, FullDesc):
            return list(parent.elements()) if parent.is_finite else None
        if isinstance(desc, TrivialDesc):
            return [parent.identity()]
        if isinstance(desc, FiniteSubsetDesc):
            return list(desc.elements)
        if isinstance(desc, ProductDesc):
            le = desc.left.enumerate_elements()
            re_ = desc.right.enumerate_elements()
            if le is None or re_ is None:
                return None
            return [(a, b) for a in le for b in re_]
        if isinstance(desc, SublatticeDesc) and not self.lattice().rows:
            return [parent.identity()]
        if isinstance(desc, HeisPlaneDesc) and not desc.rows:
            return [parent.identity()]
        return None

    # -- structural queries ------------------------------------------------------
    def is_full(self) -> bool:
        if isinstance(self.desc, FullDesc):
            return True
        if isinstance(self.desc, FiniteSubsetDesc) and self.parent.is_finite:
            return len(self.desc.elements) == self.parent.order
        if isinstance(self.desc, SublatticeDesc):
            return self.lattice().index_in_ambient() == 1
        if isinstance(self.desc, ProductDesc):
            return self.desc.left.is_full() and self.desc.right.is_full()
        if isinstance(self.desc, CoordinateZeroDesc):
            return not self.desc.zero_coords
        return False

    def is_trivial_subgroup(self) -> bool:
        if isinstance(self.desc, TrivialDesc):
            return True
        if isinstance(self.desc, FiniteSubsetDesc):
            return len(self.desc.elements) == 1
        if isinstance(self.desc, SublatticeDesc):
            return self.lattice().is_trivial()
        if isinstance(self.desc, CoordinateZeroDesc):
            return self.desc.zero_coords == {0, 1, 2}
        if isinstance(self.desc, ProductDesc):
            return self.desc.left.is_trivial_subgroup() and self.desc.right.is_trivial_subgroup()
        if isinstance(self.desc, HeisPlaneDesc):
            return not self.desc.rows
        return False

    def index(self) -> int | Infinite | None:
        """[G : H]; INFINITE or None (undecided)."""
        parent, desc = self.parent, self.desc
        if isinstance(desc, FullDesc):
            return 1
        if isinstance(desc, TrivialDesc):
            return parent.order if parent.is_finite else INFINITE
        if isinstance(desc, FiniteSubsetDesc):
            if parent.is_finite:
                return parent.order // len(desc.elements)
            return INFINITE
        if isinstance(desc, SublatticeDesc):
            idx = self.lattice().index_in_ambient()
            return INFINITE if idx is None else idx
        if isinstance(desc, CoordinateZeroDesc):
            return 1 if not desc.zero_coords else INFINITE
        if isinstance(desc, HeisCongruenceDesc):
            return desc.modulus
        if isinstance(desc, ProductDesc):
            li = desc.left.index()
            ri = desc.right.index()
            if li is None or ri is None:
                return None
            if li is INFINITE or ri is INFINITE:
                return INFINITE
            return li * ri
        if isinstance(desc, HeisPlaneDesc):
            rows = desc.rows
            if not rows:
                one = FiniteTable(((0,),), ("e",), name="1")
                return AsGroup(one, lambda x: (0, 0, 0), lambda x: 0)
            amb = FreeAbelian(len(rows))

            def embed(c, _d=desc, _rows=rows):
                pair = tuple(sum(ci * r[k] for ci, r in zip(c, _rows)) for k in range(2))
                return _d.lift(pair)

            def retract(x, _d=desc, _rows=rows):
                i, j = _d.free_coords()
                return _solve_integer_combination([tuple(r) for r in _rows], (x[i], x[j]))

            return AsGroup(amb, embed, retract)
        if isinstance(desc, FreeCyclicDesc):
            return INFINITE  # proper finite-index subgroups of F_k are never cyclic
        if isinstance(desc, HeisPlaneDesc):
            return INFINITE
        return None

    def as_group(self) -> AsGroup | None:
        """The subgroup as a standalone catalog group with its embedding."""
        parent, desc = self.parent, self.desc
        if isinstance(desc, FullDesc):
            return AsGroup(parent, lambda x: x, lambda x: x)
        if isinstance(desc, TrivialDesc):
            one = FiniteTable(((0,),), ("e",), name="1")
            e = parent.identity()
            return AsGroup(one, lambda x: e, lambda x: 0)
        if isinstance(desc, FiniteSubsetDesc):
            elems = list(desc.elements)
            index = {x: i for i, x in enumerate(elems)}
            table = [[index[parent.mul(a, b)] for b in elems] for a in elems]
            names = [parent.element_str(x) for x in elems]
            g = FiniteTable(table, names, name=f"sub({parent.name})")
            return AsGroup(g, lambda i: elems[i], lambda x: index[x])
        if isinstance(desc, SublatticeDesc):
            basis = self.lattice().basis()
            r = len(basis)
            amb = FreeAbelian(r)

            def embed(c, _b=basis, _n=self.parent.rank):
                return tuple(sum(ci * bi[k] for ci, bi in zip(c, _b)) for k in range(_n))

            def retract(x, _b=basis, _n=self.parent.rank, _r=r):
                return _solve_integer_combination(_b, x)

            return AsGroup(amb, embed, retract)
        if isinstance(desc, CoordinateZeroDesc):
            free = sorted(set(range(3)) - desc.zero_coords)
            if len(free) == 3:
                return AsGroup(parent, lambda x: x, lambda x: x)
            if not free:
                one = FiniteTable(((0,),), ("e",), name="1")
                return AsGroup(one, lambda x: (0, 0, 0), lambda x: 0)
            amb = FreeAbelian(len(free))

            def embed(c, _free=free):
                out = [0, 0, 0]
                for pos, coord in enumerate(_free):
                    out[coord] = c[pos]
                return tuple(out)

            def retract(x, _free=free):
                return tuple(x[i] for i in _free)

            return AsGroup(amb, embed, retract)
        if isinstance(desc, ProductDesc):
            lg = desc.left.as_group()
            rg = desc.right.as_group()
            if lg is None or rg is None:
                return None
            if desc.left.is_trivial_subgroup():
                el = parent.left.identity()
                return AsGroup(rg.group, lambda y, _e=el, _em=rg.embed: (_e, _em(y)),
                               (lambda p, _re=rg.retract: _re(p[1])) if rg.retract else None)
            if desc.right.is_trivial_subgroup():
                er = parent.right.identity()
                return AsGroup(lg.group, lambda y, _e=er, _em=lg.embed: (_em(y), _e),
                               (lambda p, _re=lg.retract: _re(p[0])) if lg.retract else None)
            gg = DirectProduct(lg.group, rg.group)

            def embed(pair, _l=lg.embed, _r=rg.embed):
                return (_l(pair[0]), _r(pair[1]))

            retract = None
            if lg.retract and rg.retract:
                def retract(pair, _l=lg.retract, _r=rg.retract):
                    return (_l(pair[0]), _r(pair[1]))

            return AsGroup(gg, embed, retract)
        if isinstance(desc, HeisPlaneDesc):
            rows = desc.rows
            if not rows:
                one = FiniteTable(((0,),), ("e",), name="1")
                return AsGroup(one, lambda x: (0, 0, 0), lambda x: 0)
            amb = FreeAbelian(len(rows))

            def embed(c, _d=desc, _rows=rows):
                pair = tuple(sum(ci * r[k] for ci, r in zip(c, _rows)) for k in range(2))
                return _d.lift(pair)

            def retract(x, _d=desc, _rows=rows):
                i, j = _d.free_coords()
                return _solve_integer_combination([tuple(r) for r in _rows], (x[i], x[j]))

            return AsGroup(amb, embed, retract)
        if isinstance(desc, FreeCyclicDesc):
            amb = FreeAbelian(1)
            w = desc.word

            def embed(c, _p=parent, _w=w):
                return _p.power(_w, c[0])

            def retract(x, _p=parent, _w=w):
                k = _p.power_of(x, _w)
                if k is None:
                    raise GroupError("element outside cyclic subgroup")
                return (k,)

            return AsGroup(amb, embed, retract)
        return None

    def describe_desc(self) -> str:
        return self.desc.describe(self.parent)

    def describe(self) -> str:
        return f"{self.describe_desc()} of {self.parent.name}"

    def __repr__(self) -> str:
        return f"<Subgroup: {self.describe()}>"


def _subset_generators(parent: Group, elements: tuple) -> tuple:
    e = parent.identity()
    gens: list = []
    reached = {e}
    for x in elements:
        if x not in reached:
            gens.append(x)
            frontier = list(reached | {x})
            reached = set(reached | {x})
            while frontier:
                a = frontier.pop()
                for b in list(reached):
                    for c in (parent.mul(a, b), parent.mul(b, a), parent.inv(a)):
                        if c not in reached:
                            reached.add(c)
                            frontier.append(c)
    return tuple(gens)


def _free_cyclic_normalize(parent: FreeGroup, gens: tuple) -> tuple | None:
    """If all generators commute they share a primitive root r: return r^d, d = gcd."""
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not parent.commutes(gens[i], gens[j]):
                return None
    root, _ = parent.primitive_root(gens[0])
    exps = []
    for g in gens:
        k = parent.power_of(g, root)
        if k is None:
            return None
        exps.append(k)
    from math import gcd
    d = 0
    for k in exps:
        d = gcd(d, k)
    if d == 0:
        return None
    return parent.power(root, d)


def _solve_integer_combination(basis: list[tuple[int, ...]], target) -> tuple[int, ...]:
    """Coefficients c with sum c_i * basis_i = target (basis independent)."""
    n = len(target)
    r = len(basis)
    aug = [[Fraction(basis[i][k]) for i in range(r)] + [Fraction(target[k])] for k in range(n)]
    coeffs = [Fraction(0)] * r
    row = 0
    for col in range(r):
        piv = next((i for i in range(row, n) if aug[i][col] != 0), None)
        if piv is None:
            continue
        aug[row], aug[piv] = aug[piv], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for i in range(n):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[row])]
        row += 1
    # consistency + integrality
    col_of_row = []
    rr = 0
    for col in range(r):
        if rr < n and aug[rr][col] == 1 and all(aug[i][col] == 0 for i in range(n) if i != rr):
            col_of_row.append(col)
            rr += 1
    for i in range(rr, n):
        if aug[i][r] != 0:
            raise GroupError("element outside sublattice span")
    for i, col in enumerate(col_of_row):
        val = aug[i][r]
        if val.denominator != 1:
            raise GroupError("element outside sublattice")
        coeffs[col] = val
    return tuple(int(c) for c in coeffs)
