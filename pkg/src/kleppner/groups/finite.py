"""Finite groups given by explicit multiplication tables, plus named builtins.

Tables are validated on load: Latin-square property, identity, inverses, and
associativity (exhaustive up to order 64, sampled above).  Builtins carry a
coordinate map onto their abelianization, used to synthesize root-of-unity
two-cocycles.
"""

from __future__ import annotations

import itertools
import random
import re
from typing import Callable, Sequence

from .base import Group, GroupError

Table = tuple[tuple[int, ...], ...]


class FiniteTable(Group):
    def __init__(self, table: Sequence[Sequence[int]], names: Sequence[str] | None = None,
                 name: str = "finite", validate: bool = True,
                 ab_coords: tuple[tuple[tuple[int, ...], ...], tuple[int, ...]] | None = None,
                 rng_seed: int = 0) -> None:
        self.table: Table = tuple(tuple(int(x) for x in row) for row in table)
        self.n = len(self.table)
        self.name = name
        if names is None:
            names = [str(i) for i in range(self.n)]
        self.names = tuple(names)
        if len(self.names) != self.n:
            raise GroupError("names/table size mismatch")
        # ab_coords: per-element coordinate tuples plus their moduli; the map
        # element -> coords must be a homomorphism onto prod Z_{m_i}
        self.ab_coords = ab_coords
        if validate:
            self._validate(rng_seed)
        self.e = self._find_identity()
        self.inv_table = self._build_inverses()

    # -- validation -------------------------------------------------------
    def _validate(self, rng_seed: int) -> None:
        n = self.n
        if n == 0:
            raise GroupError("empty table")
        idx = set(range(n))
        for row in self.table:
            if len(row) != n or set(row) != idx:
                raise GroupError("table rows must be permutations of 0..n-1")
        for j in range(n):
            if {self.table[i][j] for i in range(n)} != idx:
                raise GroupError("table columns must be permutations of 0..n-1")
        t = self.table
        if n <= 64:
            for a in range(n):
                ta = t[a]
                for b in range(n):
                    tab = t[ta[b]]
                    tb = t[b]
                    for c in range(n):
                        if tab[c] != ta[tb[c]]:
                            raise GroupError(f"not associative at ({a},{b},{c})")
        else:
            rng = random.Random(rng_seed)
            for _ in range(20000):
                a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise GroupError(f"not associative at ({a},{b},{c})")

    def _find_identity(self) -> int:
        for a in range(self.n):
            if all(self.table[a][b] == b and self.table[b][a] == b for b in range(self.n)):
                return a
        raise GroupError("no identity element")

    def _build_inverses(self) -> tuple[int, ...]:
        inv = [-1] * self.n
        for a in range(self.n):
            for b in range(self.n):
                if self.table[a][b] == self.e:
                    inv[a] = b
                    break
            if inv[a] < 0:
                raise GroupError(f"element {a} has no inverse")
        return tuple(inv)

    # -- Group interface ----------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inv_table[a]

    def identity(self) -> int:
        return self.e

    def contains(self, x) -> bool:
        return isinstance(x, int) and 0 <= x < self.n

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def order(self) -> int:
        return self.n

    @property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.n) for b in range(a))

    def elements(self) -> range:
        return range(self.n)

    def generators(self) -> tuple[int, ...]:
        return self.small_generating_set()

    def small_generating_set(self) -> tuple[int, ...]:
        gens: list[int] = []
        reach = {self.e}
        for x in range(self.n):
            if x not in reach:
                gens.append(x)
                reach = self.closure(reach | {x})
                if len(reach) == self.n:
                    break
        return tuple(gens)

    def closure(self, seed) -> set[int]:
        out = set(seed) | {self.e}
        frontier = list(out)
        while frontier:
            x = frontier.pop()
            for y in list(out):
                for z in (self.table[x][y], self.table[y][x], self.inv_table[x]):
                    if z not in out:
                        out.add(z)
                        frontier.append(z)
        return out

    def all_subgroups(self) -> list[frozenset[int]]:
        """Every subgroup, as frozensets of element indices (deterministic order)."""
        found = {frozenset([self.e])}
        frontier = [frozenset([self.e])]
        while frontier:
            s = frontier.pop()
            for x in range(self.n):
                if x in s:
                    continue
                bigger = frozenset(self.closure(s | {x}))
                if bigger not in found:
                    found.add(bigger)
                    frontier.append(bigger)
        return sorted(found, key=lambda s: (len(s), sorted(s)))

    def element_key(self, x: int):
        return x

    def element_str(self, x: int) -> str:
        return self.names[x]

    def parse_element(self, text: str) -> int:
        t = text.strip()
        if t in self.names:
            return self.names.index(t)
        try:
            i = int(t)
        except ValueError:
            raise GroupError(f"unknown element {text!r} of {self.name}") from None
        if 0 <= i < self.n:
            return i
        raise GroupError(f"element index {i} out of range for {self.name}")

    def random_element(self, rng: random.Random, size: int = 6) -> int:
        return rng.randrange(self.n)

    def describe(self) -> str:
        return f"{self.name} (finite, order {self.n})"


# -- builtin constructions ---------------------------------------------------

def _from_func(elems: list, mult: Callable, names: list[str], name: str,
               ab_coords=None) -> FiniteTable:
    index = {e: i for i, e in enumerate(elems)}
    table = [[index[mult(a, b)] for b in elems] for a in elems]
    return FiniteTable(table, names, name, ab_coords=ab_coords)


def cyclic(n: int) -> FiniteTable:
    if n < 1:
        raise GroupError("cyclic group needs n >= 1")
    elems = list(range(n))
    coords = (tuple((i,) for i in range(n)), (n,))
    return _from_func(elems, lambda a, b: (a + b) % n, [str(i) for i in elems],
                      f"Z_{n}", ab_coords=coords)


def cyclic_product(m: int, n: int) -> FiniteTable:
    if m < 1 or n < 1:
        raise GroupError("cyclic product needs m,n >= 1")
    elems = [(a, b) for a in range(m) for b in range(n)]
    coords = (tuple((a, b) for a, b in elems), (m, n))
    return _from_func(elems, lambda x, y: ((x[0] + y[0]) % m, (x[1] + y[1]) % n),
                      [f"({a},{b})" for a, b in elems], f"Z_{m} x Z_{n}", ab_coords=coords)


def dihedral(n: int) -> FiniteTable:
    """D_n of order 2n: rotations r^i and reflections r^i s."""
    if n < 1:
        raise GroupError("dihedral group needs n >= 1")
    elems = [(i, f) for f in (0, 1) for i in range(n)]

    def mult(x, y):
        i, f = x
        j, g = y
        # (r^i s^f)(r^j s^g): s r^j = r^-j s
        return ((i + (j if f == 0 else -j)) % n, (f + g) % 2)

    names = [f"r{i}" if f == 0 else f"s{i}" for (i, f) in elems]
    if n % 2 == 0:
        coords = (tuple((i % 2, f) for (i, f) in elems), (2, 2))
    else:
        coords = (tuple((f,) for (_i, f) in elems), (2,))
    return _from_func(elems, mult, names, f"D_{n}", ab_coords=coords)


def quaternion8() -> FiniteTable:
    """Q8 = {+-1, +-i, +-j, +-k}."""
    units = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
    # multiplication on (sign, axis) with axes 1,i,j,k
    def split(u):
        return (-1 if u.startswith("-") else 1, u.lstrip("-"))

    basic = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
             ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
             ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
             ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}

    def mult(u, v):
        su, au = split(u)
        sv, av = split(v)
        s, a = basic[(au, av)]
        s *= su * sv
        return ("" if s > 0 else "-") + a

    ij_part = {"1": (0, 0), "i": (1, 0), "j": (0, 1), "k": (1, 1)}
    coords = (tuple(ij_part[u.lstrip("-")] for u in units), (2, 2))
    return _from_func(units, mult, units, "Q8", ab_coords=coords)


def symmetric(n: int) -> FiniteTable:
    if n < 1 or n > 5:
        raise GroupError("symmetric group builtin supports 1 <= n <= 5")
    perms = sorted(itertools.permutations(range(n)))

    def mult(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(n))

    def sign(p):
        s = 0
        for i in range(n):
            for j in range(i + 1, n):
                if p[i] > p[j]:
                    s ^= 1
        return s

    names = ["(" + " ".join(str(x) for x in p) + ")" for p in perms]
    coords = (tuple((sign(p),) for p in perms), (2,))
    return _from_func(perms, mult, names, f"S_{n}", ab_coords=coords)


_NAME_RE = re.compile(r"^\s*(Z_(\d+)\s*x\s*Z_(\d+)|Z_(\d+)|D_(\d+)|Q8|S_(\d+))\s*$")


def from_name(name: str) -> FiniteTable:
    """Builtin lookup: "Z_n", "Z_m x Z_n", "D_n", "Q8", "S_3", "S_4"."""
    m = _NAME_RE.match(name)
    if not m:
        raise GroupError(f"unknown builtin group {name!r}")
    if m.group(2):
        return cyclic_product(int(m.group(2)), int(m.group(3)))
    if m.group(4):
        return cyclic(int(m.group(4)))
    if m.group(5):
        return dihedral(int(m.group(5)))
    if m.group(6):
        return symmetric(int(m.group(6)))
    return quaternion8()
