"""Exact sparse multivariate polynomials over the rationals.

Coefficients are :class:`fractions.Fraction`; there is no floating point
anywhere.  Terms print in canonical order: lexicographic, the lowest
variable index most significant, largest term first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .monomial import ONE, Monomial


class Polynomial:
    """An immutable element of ``Q[x0, x1, ...]``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            if isinstance(m, str):
                m = Monomial.parse(m)
            c = Fraction(c)
            if c:
                s = acc.get(m, 0) + c
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Polynomial":
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw({})

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw({ONE: Fraction(1)})

    @classmethod
    def constant(cls, c) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({ONE: c} if c else {})

    @classmethod
    def var(cls, v, e: int = 1) -> "Polynomial":
        return cls._raw({Monomial.var(v, e): Fraction(1)})

    @classmethod
    def from_monomial(cls, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        return cls._raw({m: c} if c else {})

    @classmethod
    def coerce(cls, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            return x
        if isinstance(x, Monomial):
            return cls.from_monomial(x)
        if isinstance(x, str):
            return cls.parse(x)
        if isinstance(x, (int, Fraction)):
            return cls.constant(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to Polynomial")

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical (descending lex) order."""
        return sorted(self._terms.items(), key=lambda t: t[0].lex_key(), reverse=True)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms()]

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and ONE in self._terms)

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def variables(self) -> frozenset[int]:
        out: set[int] = set()
        for m in self._terms:
            out |= m.support
        return frozenset(out)

    def content(self) -> Fraction:
        """Positive rational ``c`` with ``self / c`` primitive integral."""
        if not self._terms:
            return Fraction(0)
        num = reduce(math.gcd, (c.numerator for c in self._terms.values()))
        den = reduce(lambda a, b: a * b // math.gcd(a, b), (c.denominator for c in self._terms.values()))
        return Fraction(num, den)

    def primitive(self) -> "Polynomial":
        if not self._terms:
            return self
        c = self.content()
        return Polynomial._raw({m: v / c for m, v in self._terms.items()})

    def evaluate(self, point: Mapping[int, object]):
        """Value at ``point`` (variable index -> value); missing variables are 0."""
        total = 0
        for m, c in self._terms.items():
            v = c
            for i, e in m:
                v = v * point.get(i, 0) ** e
            total = total + v
        return total

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return Polynomial._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = m1 * m2
                s = acc.get(m, 0) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return Polynomial._raw(acc)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({m: v * c for m, v in self._terms.items()})

    def mul_monomial(self, m: Monomial, c=1) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero()
        return Polynomial._raw({t * m: v * c for t, v in self._terms.items()})

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = Polynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def square_substitution(self) -> "Polynomial":
        return square_substitution(self)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction, Monomial)):
            return self._terms == Polynomial.coerce(other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- text ---------------------------------------------------------------

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return parse_polynomial(text)


def square_substitution(f: Polynomial) -> Polynomial:
    """Substitute ``x_i -> x_i^2`` for every variable, keeping coefficients."""
    return Polynomial._raw({m.substitute_squares(): c for m, c in f._terms.items()})


def _format_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(f: Polynomial) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for k, (m, c) in enumerate(f.terms()):
        neg = c < 0
        a = -c if neg else c
        if m.is_one():
            body = _format_coef(a)
        elif a == 1:
            body = str(m)
        else:
            body = f"{_format_coef(a)}*{m}"
        if k == 0:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f" - {body}" if neg else f" + {body}")
    return "".join(parts)


_TERM = re.compile(
    r"(?:(?P<num>\d+)(?:/(?P<den>\d+))?)?"
    r"(?P<star>\*)?"
    r"(?P<mono>x\d+(?:\^\d+)?(?:\*x\d+(?:\^\d+)?)*)?"
)


def parse_polynomial(text: str) -> Polynomial:
    """Parse ``x1^2*x3 - 3/2*x1*x2 + 5`` style input."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial")
    if s == "0":
        return Polynomial.zero()
    pos = 0
    acc: dict[Monomial, Fraction] = {}
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            raise ValueError(f"expected '+' or '-' at position {pos} in {text!r}")
        m = _TERM.match(s, pos)
        num, den, star, mono = m.group("num", "den", "star", "mono")
        if m.end() == pos or (num is None and mono is None) or (star and (num is None or mono is None)):
            raise ValueError(f"malformed term at position {pos} in {text!r}")
        if num is not None and mono is not None and not star:
            raise ValueError(f"missing '*' between coefficient and monomial at position {pos} in {text!r}")
        coef = Fraction(int(num), int(den) if den else 1) if num is not None else Fraction(1)
        if den is not None and int(den) == 0:
            raise ValueError("zero denominator")
        mon = Monomial.parse(mono) if mono is not None else ONE
        val = acc.get(mon, 0) + sign * coef
        if val:
            acc[mon] = val
        else:
            acc.pop(mon, None)
        pos = m.end()
        first = False
    return Polynomial._raw(acc)


@dataclass(frozen=True)
class FieldSpec:
    """Coefficient field: the rationals (``characteristic == 0``) or GF(p)."""

    characteristic: int = 0

    def __post_init__(self):
        p = self.characteristic
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p < 0:
            raise ValueError("characteristic must be nonnegative")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        m = re.fullmatch(r"(?:fp|gf):?(\d+)", t)
        if m is None:
            raise ValueError(f"unknown field {text!r}; use 'q' or 'fp:<p>'")
        return cls(int(m.group(1)))

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    def coerce(self, c) -> int | Fraction:
        """Image of a rational in this field (ints in ``[0, p)`` for GF(p))."""
        c = Fraction(c)
        p = self.characteristic
        if not p:
            return c
        if c.denominator % p == 0:
            raise ZeroDivisionError(f"denominator of {c} vanishes mod {p}")
        return c.numerator * pow(c.denominator, -1, p) % p

    def reduce(self, f: Polynomial) -> Polynomial:
        """Coefficientwise image of ``f``; identity over the rationals."""
        if not self.characteristic:
            return f
        return Polynomial((m, self.coerce(c)) for m, c in f.as_dict().items())

    def __str__(self) -> str:
        return "q" if not self.characteristic else f"fp:{self.characteristic}"


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


class PolyMatrix:
    """A dense rectangular matrix of polynomials."""

    def __init__(self, rows: Sequence[Sequence]):
        entries = [[Polynomial.coerce(x) for x in row] for row in rows]
        if not entries or not entries[0]:
            raise ValueError("matrix must have at least one row and column")
        width = len(entries[0])
        if any(len(r) != width for r in entries):
            raise ValueError("ragged rows")
        self.entries = entries

    @classmethod
    def identity(cls, t: int, scalar=1) -> "PolyMatrix":
        s = Polynomial.coerce(scalar)
        z = Polynomial.zero()
        return cls([[s if i == j else z for j in range(t)] for i in range(t)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, ij: tuple[int, int]) -> Polynomial:
        i, j = ij
        return self.entries[i][j]

    def map(self, fn) -> "PolyMatrix":
        return PolyMatrix([[fn(x) for x in row] for row in self.entries])

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)])

    def transpose(self) -> "PolyMatrix":
        return PolyMatrix([list(col) for col in zip(*self.entries)])

    def determinant(self) -> Polynomial:
        return determinant(self)

    def to_lists(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.entries]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"PolyMatrix({self.to_lists()!r})"


def determinant(M: PolyMatrix) -> Polynomial:
    """Exact determinant by cofactor expansion.

    Columns are expanded sparsest first; minors are memoized on the mask of
    rows already used, which fixes the remaining column set.
    """
    n, m = M.shape
    if n != m:
        raise ValueError(f"determinant of a non-square {n}x{m} matrix")
    E = M.entries
    order = sorted(range(n), key=lambda j: (sum(1 for i in range(n) if E[i][j]), j))
    full = (1 << n) - 1
    memo: dict[int, Polynomial] = {full: Polynomial.one()}

    def minor(used: int) -> Polynomial:
        hit = memo.get(used)
        if hit is not None:
            return hit
        k = bin(used).count("1")
        c = order[k]
        col_pos = sum(1 for cc in order[k:] if cc < c)
        total = Polynomial.zero()
        row_pos = 0
        for r in range(n):
            if used >> r & 1:
                continue
            entry = E[r][c]
            if entry:
                sub = minor(used | (1 << r))
                if sub:
                    term = entry * sub
                    total = total - term if (row_pos + col_pos) & 1 else total + term
            row_pos += 1
        memo[used] = total
        return total

    return minor(0)
