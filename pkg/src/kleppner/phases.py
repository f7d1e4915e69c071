"""Exact circle-group arithmetic.

A Phase stores the exponent of exp(2*pi*i*p) where p is a rational plus a
Q-linear combination of formal symbols ("irrationals"), reduced mod 1.  The
symbols of a basis are declared Q-linearly independent together with 1, so
equality with 1 is decidable by inspection: rational part 0 and no symbol
coefficients.  Dependent parameters (e.g. a theta_1 lying in span{1, theta_3})
are expressed by the caller as phases over a smaller basis; no relations are
ever inferred.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Union[int, Fraction, str]


class BasisMismatchError(ValueError):
    """Raised when phases over different symbol bases are combined."""


class PhaseParseError(ValueError):
    pass


_SYMBOL_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


class IrrationalBasis:
    """Ordered, duplicate-free list of formal symbol names (may be empty)."""

    __slots__ = ("symbols",)

    def __init__(self, symbols: Iterable[str] = ()) -> None:
        syms = tuple(symbols)
        seen = set()
        for s in syms:
            if not _SYMBOL_RE.match(s):
                raise ValueError(f"bad symbol name {s!r}")
            if s in seen:
                raise ValueError(f"duplicate symbol {s!r}")
            seen.add(s)
        self.symbols = syms

    def __contains__(self, symbol: str) -> bool:
        return symbol in self.symbols

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IrrationalBasis) and self.symbols == other.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def __repr__(self) -> str:
        return f"IrrationalBasis({list(self.symbols)!r})"

    def zero(self) -> "Phase":
        return Phase(0, {}, self)

    def rational(self, value: Rat) -> "Phase":
        return Phase(value, {}, self)

    def symbol(self, name: str, coeff: Rat = 1) -> "Phase":
        if name not in self:
            raise ValueError(f"symbol {name!r} not in basis {self.symbols}")
        return Phase(0, {name: coeff}, self)

    def parse(self, text: str) -> "Phase":
        return parse_phase(text, self)


EMPTY_BASIS = IrrationalBasis(())


class Phase:
    """Value of the circle group, written additively and reduced mod 1.

    Immutable; equality is structural on (rational part, symbol coefficients).
    The rational part lives in [0, 1) and no zero coefficients are stored,
    so structural equality is semantic equality.
    """

    __slots__ = ("basis", "rational", "coeffs", "_hash")

    def __init__(self, rational: Rat = 0, coeffs: Mapping[str, Rat] | None = None,
                 basis: IrrationalBasis = EMPTY_BASIS) -> None:
        r = Fraction(rational)
        items = []
        if coeffs:
            for sym in sorted(coeffs):
                if sym not in basis:
                    raise ValueError(f"symbol {sym!r} not in basis {basis.symbols}")
                c = Fraction(coeffs[sym])
                if c != 0:
                    items.append((sym, c))
        self.basis = basis
        self.rational = r - (r.numerator // r.denominator)  # reduce into [0,1)
        self.coeffs = tuple(items)
        self._hash = hash((self.rational, self.coeffs))

    def is_one(self) -> bool:
        """True iff the represented circle value equals 1 (exponent is integral)."""
        return self.rational == 0 and not self.coeffs

    def coeff(self, symbol: str) -> Fraction:
        for sym, c in self.coeffs:
            if sym == symbol:
                return c
        return Fraction(0)

    def _require_same_basis(self, other: "Phase") -> None:
        if self.basis != other.basis:
            raise BasisMismatchError(
                f"phases over different bases: {self.basis.symbols} vs {other.basis.symbols}")

    def __add__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        self._require_same_basis(other)
        acc = dict(self.coeffs)
        for sym, c in other.coeffs:
            acc[sym] = acc.get(sym, Fraction(0)) + c
        return Phase(self.rational + other.rational, acc, self.basis)

    def __neg__(self) -> "Phase":
        return Phase(-self.rational, {s: -c for s, c in self.coeffs}, self.basis)

    def __sub__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        return self + (-other)

    def conjugate(self) -> "Phase":
        """Exponent of the complex conjugate circle value."""
        return -self

    def with_basis(self, basis: "IrrationalBasis") -> "Phase":
        """The same value over a basis containing all used symbols."""
        if basis == self.basis:
            return self
        return Phase(self.rational, dict(self.coeffs), basis)

    def __mul__(self, scalar: Rat) -> "Phase":
        if isinstance(scalar, Phase):
            raise TypeError("phases multiply circle values via +; use p + q")
        k = Fraction(scalar)
        return Phase(self.rational * k, {s: c * k for s, c in self.coeffs}, self.basis)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Phase) and self.rational == other.rational
                and self.coeffs == other.coeffs)

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        parts = []
        if self.rational != 0 or not self.coeffs:
            parts.append(str(self.rational))
        for sym, c in self.coeffs:
            if c == 1:
                parts.append(sym)
            else:
                parts.append(f"({c}){sym}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Phase({self})"


def phase_add(p: Phase, q: Phase) -> Phase:
    return p + q


def phase_is_one(p: Phase) -> bool:
    return p.is_one()


_TERM_RE = re.compile(
    r"^\(?(?P<coef>[+-]?\d+(?:/\d+)?)\)?\s*(?P<sym>[A-Za-z_][A-Za-z_0-9]*)?$")


def parse_phase(text: str, basis: IrrationalBasis = EMPTY_BASIS,
                substitutions: Mapping[str, "Phase"] | None = None) -> Phase:
    """Parse "a/b + (c/d)sym + ..." (signs, bare symbols and bare rationals allowed).

    Names in ``substitutions`` resolve to previously defined phases instead of
    basis symbols (used for dependent parameters).
    """
    s = text.strip()
    if not s:
        raise PhaseParseError("empty phase string")
    # split into signed terms at +/- outside parentheses
    chunks: list[str] = []
    depth = 0
    cur = ""
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth = max(0, depth - 1)
        if ch in "+-" and depth == 0 and cur.strip():
            chunks.append(cur.strip())
            cur = "" if ch == "+" else "-"
            continue
        cur += ch
    if cur.strip():
        chunks.append(cur.strip())
    out = Phase(0, {}, basis)
    for chunk in chunks:
        if not chunk or chunk == "+":
            continue
        neg = chunk.startswith("-")
        body = chunk[1:].strip() if neg else chunk
        if not body:
            raise PhaseParseError(f"dangling sign in {text!r}")
        if _SYMBOL_RE.match(body):
            sym, coef = body, Fraction(1)
        else:
            m = _TERM_RE.match(body)
            if not m:
                raise PhaseParseError(f"cannot parse term {chunk!r} in {text!r}")
            coef = Fraction(m.group("coef"))
            sym = m.group("sym")
        if neg:
            coef = -coef
        if sym is None:
            out = out + Phase(coef, {}, basis)
        elif sym in basis:
            out = out + Phase(0, {sym: coef}, basis)
        elif substitutions and sym in substitutions:
            out = out + substitutions[sym].with_basis(basis) * coef
        else:
            raise PhaseParseError(f"symbol {sym!r} not declared in basis {basis.symbols}")
    return out


def _rank_over_q(rows: list[list[Fraction]]) -> int:
    """Rank of a matrix of Fractions by plain Gaussian elimination."""
    if not rows:
        return 0
    m = [row[:] for row in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(m)):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, len(m)):
            if m[i][col] != 0:
                factor = m[i][col] / pv
                for j in range(col, ncols):
                    m[i][j] -= factor * m[rank][j]
        rank += 1
        if rank == len(m):
            break
    return rank


def qdim(values: Sequence[Phase]) -> int:
    """Dimension over Q of span({1} union values), the values read as real exponents.

    Rational parts fall into the span of 1, so the answer is 1 plus the rank
    of the symbol-coefficient matrix.
    """
    vals = list(values)
    if not vals:
        return 1
    basis = vals[0].basis
    for v in vals[1:]:
        if v.basis != basis:
            raise BasisMismatchError("qdim needs all values over one basis")
    syms = basis.symbols
    rows = [[v.coeff(s) for s in syms] for v in vals]
    if not syms:
        return 1
    return 1 + _rank_over_q(rows)
