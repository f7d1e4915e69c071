"""Free groups on k >= 2 generators with reduced-word normal forms.

A word is a tuple of (letter_index, exponent) pairs with nonzero exponents and
no two consecutive equal letters.  Centralizers of nontrivial elements are
cyclic, generated by the maximal root, which is computed exactly by cyclic
reduction plus minimal-period extraction.
"""

from __future__ import annotations

import random
import re
import string

from .base import Group, GroupError

Word = tuple[tuple[int, int], ...]


def _merge(word: list[tuple[int, int]], letter: int, exp: int) -> None:
    if exp == 0:
        return
    if word and word[-1][0] == letter:
        s = word[-1][1] + exp
        if s == 0:
            word.pop()
        else:
            word[-1] = (letter, s)
    else:
        word.append((letter, exp))


class FreeGroup(Group):
    def __init__(self, rank: int, letters: tuple[str, ...] | None = None) -> None:
        if rank < 2:
            raise GroupError("free group catalog requires rank >= 2")
        if letters is None:
            if rank > 26:
                raise GroupError("at most 26 generators")
            letters = tuple(string.ascii_lowercase[:rank])
        if len(letters) != rank or len(set(letters)) != rank:
            raise GroupError("need distinct letters, one per generator")
        self.rank = rank
        self.letters = letters
        self.name = f"F_{rank}"

    def mul(self, a: Word, b: Word) -> Word:
        out = list(a)
        for letter, exp in b:
            _merge(out, letter, exp)
        return tuple(out)

    def inv(self, a: Word) -> Word:
        return tuple((letter, -exp) for letter, exp in reversed(a))

    def identity(self) -> Word:
        return ()

    def contains(self, x) -> bool:
        if not isinstance(x, tuple):
            return False
        prev = None
        for item in x:
            if (not isinstance(item, tuple) or len(item) != 2
                    or not isinstance(item[0], int) or not isinstance(item[1], int)):
                return False
            letter, exp = item
            if not (0 <= letter < self.rank) or exp == 0 or letter == prev:
                return False
            prev = letter
        return True

    @property
    def is_abelian(self) -> bool:
        return False

    def generators(self) -> tuple[Word, ...]:
        return tuple(((i, 1),) for i in range(self.rank))

    def gen(self, name: str) -> Word:
        return ((self.letters.index(name), 1),)

    # -- word structure -----------------------------------------------------
    def word_length(self, w: Word) -> int:
        return sum(abs(e) for _, e in w)

    def flatten(self, w: Word) -> list[int]:
        """Signed single letters: letter i as i+1, inverse as -(i+1)."""
        out: list[int] = []
        for letter, exp in w:
            tok = letter + 1 if exp > 0 else -(letter + 1)
            out.extend([tok] * abs(exp))
        return out

    def from_flat(self, flat: list[int]) -> Word:
        out: list[tuple[int, int]] = []
        for tok in flat:
            _merge(out, abs(tok) - 1, 1 if tok > 0 else -1)
        return tuple(out)

    def cyclic_reduce(self, w: Word) -> tuple[Word, Word]:
        """Return (u, c) with w = u c u^-1 and c cyclically reduced."""
        flat = self.flatten(w)
        i, j = 0, len(flat)
        while j - i >= 2 and flat[i] == -flat[j - 1]:
            i += 1
            j -= 1
        u = self.from_flat(flat[:i])
        c = self.from_flat(flat[i:j])
        return u, c

    def primitive_root(self, w: Word) -> tuple[Word, int]:
        """Maximal root: (r, n) with r^n = w, n maximal, r primitive."""
        if not w:
            raise GroupError("identity has no primitive root")
        u, c = self.cyclic_reduce(w)
        flat = self.flatten(c)
        length = len(flat)
        for d in range(1, length + 1):
            if length % d:
                continue
            if all(flat[i] == flat[i % d] for i in range(length)):
                root_c = self.from_flat(flat[:d])
                root = self.mul(self.mul(u, root_c), self.inv(u))
                return root, length // d
        raise AssertionError("unreachable")

    def centralizer_root(self, w: Word) -> Word:
        """Generator of the (cyclic) centralizer of a nontrivial w."""
        root, _ = self.primitive_root(w)
        return root

    def power_of(self, x: Word, w: Word) -> int | None:
        """k with x == w^k, if any (w nontrivial)."""
        if not x:
            return 0
        lw = self.word_length(w)
        if lw == 0:
            return None
        # |w^k| >= k for nontrivial w, so the exponent is bounded
        bound = self.word_length(x) + 1
        acc = self.identity()
        for k in range(1, bound + 1):
            acc = self.mul(acc, w)
            if acc == x:
                return k
        acc = self.identity()
        winv = self.inv(w)
        for k in range(1, bound + 1):
            acc = self.mul(acc, winv)
            if acc == x:
                return -k
        return None

    # -- presentation ---------------------------------------------------------
    def element_key(self, x: Word):
        flat = self.flatten(x)
        return (len(flat), tuple((abs(t), 1 if t < 0 else 0) for t in flat))

    def element_str(self, x: Word) -> str:
        if not x:
            return "e"
        bits = []
        for letter, exp in x:
            bits.append(self.letters[letter] + (f"^{exp}" if exp != 1 else ""))
        return "".join(bits)

    _TOKEN = re.compile(r"([A-Za-z])(?:\^(-?\d+))?")

    def parse_element(self, text: str) -> Word:
        t = text.strip().replace(" ", "").replace("*", "")
        if t in ("e", "1", ""):
            return ()
        pos = 0
        out: list[tuple[int, int]] = []
        while pos < len(t):
            m = self._TOKEN.match(t, pos)
            if not m:
                raise GroupError(f"cannot parse word {text!r} at position {pos}")
            letter = m.group(1)
            if letter not in self.letters:
                raise GroupError(f"unknown generator {letter!r} in {text!r}")
            exp = int(m.group(2)) if m.group(2) else 1
            _merge(out, self.letters.index(letter), exp)
            pos = m.end()
        return tuple(out)

    def random_element(self, rng: random.Random, size: int = 6) -> Word:
        length = rng.randrange(size + 1)
        flat: list[int] = []
        for _ in range(length):
            while True:
                tok = rng.choice([s * (i + 1) for i in range(self.rank) for s in (1, -1)])
                if not flat or flat[-1] != -tok:
                    break
            flat.append(tok)
        return self.from_flat(flat)

    def describe(self) -> str:
        return f"free group F_{self.rank} on {', '.join(self.letters)}"


def reduce_by_stack(group: FreeGroup, tokens: list[int]) -> Word:
    """Independent reducer over signed letters, for cross-checking mul()."""
    stack: list[int] = []
    for tok in tokens:
        if stack and stack[-1] == -tok:
            stack.pop()
        else:
            stack.append(tok)
    return group.from_flat(stack)
