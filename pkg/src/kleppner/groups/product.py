"""Direct products of two catalog groups; elements are pairs."""

from __future__ import annotations

import random

from .base import Group, GroupError


class DirectProduct(Group):
    def __init__(self, left: Group, right: Group) -> None:
        self.left = left
        self.right = right
        self.name = f"{left.name} x {right.name}"

    def mul(self, a, b):
        return (self.left.mul(a[0], b[0]), self.right.mul(a[1], b[1]))

    def inv(self, a):
        return (self.left.inv(a[0]), self.right.inv(a[1]))

    def identity(self):
        return (self.left.identity(), self.right.identity())

    def contains(self, x) -> bool:
        return (isinstance(x, tuple) and len(x) == 2
                and self.left.contains(x[0]) and self.right.contains(x[1]))

    def commutes(self, a, b) -> bool:
        return self.left.commutes(a[0], b[0]) and self.right.commutes(a[1], b[1])

    @property
    def is_abelian(self) -> bool:
        return self.left.is_abelian and self.right.is_abelian

    @property
    def is_finite(self) -> bool:
        return self.left.is_finite and self.right.is_finite

    @property
    def order(self) -> int | None:
        lo, ro = self.left.order, self.right.order
        if lo is None or ro is None:
            return None
        return lo * ro

    def elements(self):
        return [(a, b) for a in self.left.elements() for b in self.right.elements()]

    def generators(self):
        el, er = self.left.identity(), self.right.identity()
        out = [(g, er) for g in self.left.generators()]
        out += [(el, g) for g in self.right.generators()]
        return tuple(out)

    def element_key(self, x):
        return (self.left.element_key(x[0]), self.right.element_key(x[1]))

    def element_str(self, x) -> str:
        return f"({self.left.element_str(x[0])}, {self.right.element_str(x[1])})"

    def parse_element(self, text: str):
        t = text.strip()
        if not (t.startswith("(") and t.endswith(")")):
            raise GroupError(f"product element must look like (left; right): {text!r}")
        body = t[1:-1]
        if ";" not in body:
            raise GroupError(f"product element needs ';' separator: {text!r}")
        ls, rs = body.split(";", 1)
        return (self.left.parse_element(ls), self.right.parse_element(rs))

    def random_element(self, rng: random.Random, size: int = 6):
        return (self.left.random_element(rng, size), self.right.random_element(rng, size))

    def describe(self) -> str:
        return f"direct product ({self.left.describe()}) x ({self.right.describe()})"
