"""Variables, monomials and monomial ideals.

Monomials are sparse: a sorted tuple of ``(variable index, exponent)`` pairs
with every exponent positive.  The empty tuple is the unit monomial ``1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


@dataclass(frozen=True, order=True)
class Variable:
    """An indeterminate ``x<index>``."""

    index: int

    def __post_init__(self):
        if not isinstance(self.index, int) or self.index < 0:
            raise ValueError(f"variable index must be a nonnegative int, got {self.index!r}")

    @property
    def name(self) -> str:
        return f"x{self.index}"

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, text: str) -> "Variable":
        m = re.fullmatch(r"\s*x(\d+)\s*", text)
        if m is None:
            raise ValueError(f"not a variable name: {text!r}")
        return cls(int(m.group(1)))


def _index(v) -> int:
    return v.index if isinstance(v, Variable) else int(v)


class Monomial:
    """An immutable power product of variables."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents: Mapping | Iterable = ()):
        if isinstance(exponents, Mapping):
            items = exponents.items()
        else:
            items = exponents
        acc: dict[int, int] = {}
        for var, e in items:
            if e < 0:
                raise ValueError("negative exponent")
            if e:
                i = _index(var)
                acc[i] = acc.get(i, 0) + e
        self._exps = tuple(sorted(acc.items()))
        self._hash = hash(self._exps)

    @classmethod
    def _raw(cls, exps: tuple) -> "Monomial":
        m = object.__new__(cls)
        m._exps = exps
        m._hash = hash(exps)
        return m

    @classmethod
    def var(cls, v, e: int = 1) -> "Monomial":
        return cls(((v, e),))

    @classmethod
    def squarefree(cls, vs: Iterable) -> "Monomial":
        return cls((v, 1) for v in vs)

    @property
    def exponents(self) -> tuple:
        """Sorted ``(index, exponent)`` pairs."""
        return self._exps

    def as_dict(self) -> dict[int, int]:
        return dict(self._exps)

    def exponent(self, v) -> int:
        i = _index(v)
        for j, e in self._exps:
            if j == i:
                return e
        return 0

    @property
    def degree(self) -> int:
        return sum(e for _, e in self._exps)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self._exps)

    def is_one(self) -> bool:
        return not self._exps

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self._exps)

    def radical(self) -> "Monomial":
        return Monomial._raw(tuple((i, 1) for i, _ in self._exps))

    def __mul__(self, other: "Monomial") -> "Monomial":
        if not isinstance(other, Monomial):
            return NotImplemented
        acc = dict(self._exps)
        for i, e in other._exps:
            acc[i] = acc.get(i, 0) + e
        return Monomial._raw(tuple(sorted(acc.items())))

    def __pow__(self, k: int) -> "Monomial":
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return ONE
        return Monomial._raw(tuple((i, e * k) for i, e in self._exps))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient; raises if ``other`` does not divide ``self``."""
        acc = dict(self._exps)
        for i, e in other._exps:
            r = acc.get(i, 0) - e
            if r < 0:
                raise ValueError(f"{other} does not divide {self}")
            if r:
                acc[i] = r
            else:
                del acc[i]
        return Monomial._raw(tuple(sorted(acc.items())))

    def divides(self, other: "Monomial") -> bool:
        return divides(self, other)

    def lcm(self, other: "Monomial") -> "Monomial":
        acc = dict(self._exps)
        for i, e in other._exps:
            if e > acc.get(i, 0):
                acc[i] = e
        return Monomial._raw(tuple(sorted(acc.items())))

    def gcd(self, other: "Monomial") -> "Monomial":
        b = dict(other._exps)
        return Monomial._raw(tuple((i, min(e, b[i])) for i, e in self._exps if i in b))

    def substitute_squares(self) -> "Monomial":
        return Monomial._raw(tuple((i, 2 * e) for i, e in self._exps))

    def lex_key(self) -> tuple:
        """Sort key: larger key means earlier in canonical display order.

        Lexicographic with the lowest variable index most significant.
        """
        return _lex_key(self._exps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Monomial") -> bool:
        return self.lex_key() < other.lex_key()

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self._exps)

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self._exps)

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        text = text.strip()
        if text == "1":
            return ONE
        exps = []
        for factor in text.split("*"):
            m = _FACTOR.fullmatch(factor.strip())
            if m is None:
                raise ValueError(f"bad monomial factor {factor!r} in {text!r}")
            e = int(m.group(2)) if m.group(2) is not None else 1
            exps.append((int(m.group(1)), e))
        return cls(exps)


_FACTOR = re.compile(r"x(\d+)(?:\^(\d+))?")


def _lex_key(exps: tuple) -> tuple:
    # (i, e) pairs sorted by i; a smaller index carrying a positive exponent
    # outranks everything after it, hence the negated index.
    return tuple((-i, e) for i, e in exps)


ONE = Monomial()


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff every exponent of ``a`` is at most the matching one of ``b``."""
    if len(a._exps) > len(b._exps):
        return False
    bd = dict(b._exps)
    for i, e in a._exps:
        if bd.get(i, 0) < e:
            return False
    return True


def minimalize(ms: Iterable[Monomial]) -> frozenset[Monomial]:
    """Divisibility-minimal subset of ``ms``."""
    ordered = sorted(set(ms), key=lambda m: (m.degree, m._exps))
    kept: list[Monomial] = []
    for m in ordered:
        if not any(divides(k, m) for k in kept):
            kept.append(m)
    return frozenset(kept)


class MonomialIdeal:
    """An ideal generated by monomials, stored by its minimal generators."""

    __slots__ = ("generators",)

    def __init__(self, generators: Iterable[Monomial | str] = ()):
        gens = [Monomial.parse(g) if isinstance(g, str) else g for g in generators]
        self.generators: frozenset[Monomial] = minimalize(gens)

    def sorted_generators(self) -> list[Monomial]:
        return sorted(self.generators, key=lambda m: m.lex_key(), reverse=True)

    def is_zero(self) -> bool:
        return not self.generators

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def contains_monomial(self, m: Monomial) -> bool:
        return any(divides(g, m) for g in self.generators)

    def witness_divisor(self, m: Monomial) -> Monomial | None:
        """First generator (in canonical order) dividing ``m``, if any."""
        for g in self.sorted_generators():
            if divides(g, m):
                return g
        return None

    def support(self) -> frozenset[int]:
        out: set[int] = set()
        for g in self.generators:
            out |= g.support
        return frozenset(out)

    def __contains__(self, f) -> bool:
        return ideal_contains(f, self)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.sorted_generators())

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.generators | other.generators)

    def __repr__(self) -> str:
        return "MonomialIdeal([" + ", ".join(str(g) for g in self.sorted_generators()) + "])"


def ideal_contains(f, ideal: MonomialIdeal) -> bool:
    """Membership of a polynomial (or monomial) in a monomial ideal.

    Exact: ``f`` lies in the ideal iff each of its terms is divisible by
    some generator.
    """
    if isinstance(f, Monomial):
        return ideal.contains_monomial(f)
    return all(ideal.contains_monomial(m) for m in f.monomials())
