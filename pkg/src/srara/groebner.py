"""Buchberger's algorithm, normal forms and radical membership.

The engine works on its own representation.  A monomial is packed into a
single int that is its sort key under the active term order: the key of a
product is the sum of the keys (less the key of 1), and comparing ints
compares monomials.  Over the rationals, coefficients are kept as primitive
integer vectors (fraction-free reduction); over GF(p) polynomials are kept
monic.
"""

from __future__ import annotations

import hashlib
import heapq
import json
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .monomial import Monomial
from .polyring import FieldSpec, Polynomial

QQ = FieldSpec(0)

_KINDS = ("degrevlex", "lex", "deglex")


@dataclass(frozen=True)
class TermOrder:
    """A monomial order.

    ``priority`` lists variable indices from the smallest variable to the
    largest.  Variables it omits rank above the listed ones, by ascending
    index.  The default ranks ``x0 < x1 < x2 < ...``.
    """

    kind: str = "degrevlex"
    priority: tuple[int, ...] = ()

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown term order {self.kind!r}; expected one of {_KINDS}")
        if len(set(self.priority)) != len(self.priority):
            raise ValueError("priority must not repeat variables")

    @classmethod
    def parse(cls, text: str) -> "TermOrder":
        return cls(text.strip().lower())

    def ascending(self, variables: Iterable[int]) -> list[int]:
        """``variables`` sorted from smallest to largest under this order."""
        vs = set(variables)
        listed = [v for v in self.priority if v in vs]
        rest = sorted(vs - set(listed))
        return listed + rest

    def key(self, m: Monomial, variables: Sequence[int] | None = None) -> int:
        """Sort key of ``m``; larger key means larger monomial."""
        vs = variables if variables is not None else sorted(m.support)
        ctx = _Context(self, self.ascending(set(vs) | m.support), 0, max(16, m.degree.bit_length() + 2))
        return ctx.key_of(m)

    def __str__(self) -> str:
        return self.kind


DEFAULT_ORDER = TermOrder()


class _PackOverflow(OverflowError):
    """An exponent outgrew the packed key fields; retry with wider ones."""


class _Context:
    """Key encoding for a fixed variable list, order and coefficient field.

    A monomial key is one int made of ``W``-bit fields, most significant
    first: the total degree (graded orders only), then one field per
    variable.  For degrevlex the variable fields run from the smallest
    variable up and hold ``M - e``; otherwise they run from the largest
    variable down and hold ``e``.  Integer comparison is then the term
    order, ``key(a*b) = key(a) + key(b) - key(1)``, and divisibility is one
    guarded subtraction.
    """

    def __init__(self, order: TermOrder, ascending: list[int], p: int, bits: int = 16):
        self.bits = bits
        self.M = (1 << bits) - 1
        # room for the sum of all fields plus the guard bit
        self.W = bits + max(len(ascending), 1).bit_length() + 2
        self.order = order
        self.p = p
        self.kind = order.kind
        # position 0 holds the largest variable
        self.vars = list(reversed(ascending))
        self.pos = {v: i for i, v in enumerate(self.vars)}
        n = self.n = len(self.vars)
        self.neg = self.kind == "degrevlex"
        # field slot (0 = least significant) of each variable position
        if self.neg:
            self.slot = list(range(n))  # largest variable least significant
        else:
            self.slot = [n - 1 - i for i in range(n)]
        self.graded = self.kind != "lex"
        self.E = (1 << (self.W * n)) - 1
        self.G = sum(1 << (self.W * s + self.W - 1) for s in range(n))
        self.one = self._pack([0] * n)
        self.R = sum(1 << (self.W * s) for s in range(n))
        self.low = self.G - self.R  # low self.W - 1 bits of every field
        if self.neg:
            self.C = ((1 << (self.W - 1)) - self.M) * self.R
        else:
            self.C = self.low

    # -- keys --------------------------------------------------------------

    def _pack(self, e: list[int]) -> int:
        k = 0
        neg = self.neg
        for i, x in enumerate(e):
            if x > self.M:
                raise _PackOverflow(x)
            k |= (self.M - x if neg else x) << (self.W * self.slot[i])
        if self.graded:
            k |= sum(e) << (self.W * self.n)
        return k

    def key_of(self, m: Monomial) -> int:
        e = [0] * self.n
        for i, k in m:
            e[self.pos[i]] = k
        return self._pack(e)

    def exps_of(self, key: int) -> list[int]:
        mask = (1 << self.W) - 1
        out = []
        for i in range(self.n):
            v = (key >> (self.W * self.slot[i])) & mask
            out.append(self.M - v if self.neg else v)
        return out

    def monomial_of(self, key: int) -> Monomial:
        e = self.exps_of(key)
        return Monomial((self.vars[i], k) for i, k in enumerate(e) if k)

    def divides(self, a: int, b: int) -> bool:
        E, G = self.E, self.G
        if self.neg:
            return (((a & E) | G) - (b & E)) & G == G
        return (((b & E) | G) - (a & E)) & G == G

    def _fields_max(self, a: int, b: int) -> int:
        # per field: guard bit set where a >= b, widened to a full-field mask
        d = ((a | self.G) - b) & self.G
        m = d - (d >> (self.W - 1))
        return (a & m) | (b & ~m & self.low)

    def _fields_min(self, a: int, b: int) -> int:
        d = ((b | self.G) - a) & self.G
        m = d - (d >> (self.W - 1))
        return (a & m) | (b & ~m & self.low)

    def _degree_field(self, f: int) -> int:
        if not self.n:
            return 0
        total = ((f * self.R) >> (self.W * (self.n - 1))) & ((1 << self.W) - 1)
        return self.n * self.M - total if self.neg else total

    def lcm(self, a: int, b: int) -> int:
        E = self.E
        a &= E
        b &= E
        # degrevlex stores self.M - e, so the larger exponent is the smaller field
        f = self._fields_min(a, b) if self.neg else self._fields_max(a, b)
        if self.graded:
            f |= self._degree_field(f) << (self.W * self.n)
        return f

    def nonzero(self, a: int) -> int:
        """Guard bits of the fields holding a positive exponent."""
        s = ((a & self.E) + self.C) & self.G
        return s ^ self.G if self.neg else s

    def coprime(self, a: int, b: int) -> bool:
        return not (self.nonzero(a) & self.nonzero(b))

    def mul(self, a: int, b: int) -> int:
        return a + b - self.one

    def quo(self, a: int, b: int) -> int:
        return a - b + self.one

    # -- polynomials -------------------------------------------------------

    def encode(self, f: Polynomial, exact: bool = False):
        """Integer-coefficient image of ``f``.

        With ``exact`` the result is ``(dict, s)`` where ``dict`` encodes
        ``s * f``; otherwise the normalized dict alone.
        """
        terms = f.as_dict()
        if self.p:
            out = {}
            for m, c in terms.items():
                v = QQ_to_fp(c, self.p)
                if v:
                    out[self.key_of(m)] = v
            return (out, Fraction(1)) if exact else self.normalize(out)
        den = reduce(_lcm, (c.denominator for c in terms.values()), 1)
        out = {self.key_of(m): int(c * den) for m, c in terms.items()}
        return (out, Fraction(den)) if exact else self.normalize(out)

    def decode_exact(self, f: dict, s: Fraction) -> Polynomial:
        """Polynomial encoded by ``f`` divided by ``s``."""
        if self.p:
            inv = pow(int(s) % self.p, -1, self.p) if s != 1 else 1
            return Polynomial((self.monomial_of(k), c * inv % self.p) for k, c in f.items())
        return Polynomial((self.monomial_of(k), Fraction(c) / s) for k, c in f.items())

    def decode(self, f: dict) -> Polynomial:
        if not f:
            return Polynomial.zero()
        lead = f[max(f)]
        if self.p:
            inv = pow(lead, -1, self.p)
            return Polynomial((self.monomial_of(k), c * inv % self.p) for k, c in f.items())
        return Polynomial((self.monomial_of(k), Fraction(c, lead)) for k, c in f.items())

    def normalize(self, f: dict) -> dict:
        """Monic over GF(p); primitive with positive leading coefficient over Q."""
        if not f:
            return f
        lead = f[max(f)]
        if self.p:
            if lead == 1:
                return f
            inv = pow(lead, -1, self.p)
            return {k: c * inv % self.p for k, c in f.items()}
        g = reduce(math.gcd, f.values())
        if lead < 0:
            g = -g
        if g == 1:
            return f
        return {k: c // g for k, c in f.items()}

    def reducers(self, basis: list) -> list:
        """Precompute ``(guarded lm, lm, poly)`` triples for :meth:`reduce`."""
        E, G = self.E, self.G
        if self.neg:
            return [((lm & E) | G, lm, g) for lm, g in basis]
        return [(lm & E, lm, g) for lm, g in basis]

    def find_reducer(self, t: int, red: list):
        E, G = self.E, self.G
        if self.neg:
            te = t & E
            for lmg, lm, g in red:
                if (lmg - te) & G == G:
                    return lm, g
        else:
            te = (t & E) | G
            for lme, lm, g in red:
                if (te - lme) & G == G:
                    return lm, g
        return None

    def reduce(self, f: dict, basis: list, full: bool = True, track: bool = False):
        """Remainder of ``f`` on division by ``basis`` (list of ``(lm, poly)``).

        Over Q the remainder comes back multiplied by a nonzero rational
        scalar; with ``track`` the pair ``(remainder, scalar)`` is returned.
        """
        red = self.reducers(basis)
        find = self.find_reducer
        # graded orders keep every term below the input degree; lex needs a guard check
        lexguard = 0 if self.graded else self.G
        p = dict(f)
        r: dict = {}
        scale = 1
        unscale = 1
        P = self.p
        while p:
            t = max(p)
            c = p[t]
            hit = find(t, red)
            if hit is None:
                if not full:
                    r.update(p)
                    return (r, Fraction(scale, unscale)) if track else r
                r[t] = c
                del p[t]
                continue
            lm, g = hit
            shift = t - lm
            a = g[lm]
            if P:
                s = c * pow(a, -1, P) % P if a != 1 else c
                get = p.get
                for k, v in g.items():
                    kk = k + shift
                    if kk & lexguard:
                        raise _PackOverflow(kk)
                    nv = (get(kk, 0) - s * v) % P
                    if nv:
                        p[kk] = nv
                    else:
                        del p[kk]
                continue
            h = math.gcd(a, c)
            mp, mg = a // h, c // h
            if mp != 1:
                scale *= mp
                p = {k: v * mp for k, v in p.items()}
                if r:
                    r = {k: v * mp for k, v in r.items()}
            get = p.get
            for k, v in g.items():
                kk = k + shift
                if kk & lexguard:
                    raise _PackOverflow(kk)
                nv = get(kk, 0) - mg * v
                if nv:
                    p[kk] = nv
                else:
                    del p[kk]
            if mp != 1 and p:
                cont = 0
                for v in p.values():
                    cont = math.gcd(cont, v)
                    if cont == 1:
                        break
                if cont != 1:
                    for v in r.values():
                        cont = math.gcd(cont, v)
                        if cont == 1:
                            break
                    if cont > 1:
                        unscale *= cont
                        p = {k: v // cont for k, v in p.items()}
                        r = {k: v // cont for k, v in r.items()}
        return (r, Fraction(scale, unscale)) if track else r

    def spoly(self, f: dict, lf: int, g: dict, lg: int, L: int | None = None) -> dict:
        if L is None:
            L = self.lcm(lf, lg)
        sf = L - lf
        sg = L - lg
        a, b = f[lf], g[lg]
        if self.p:
            P = self.p
            ma, mb = 1, a * pow(b, -1, P) % P
        else:
            h = math.gcd(a, b)
            ma, mb = b // h, a // h
        out = {k + sf: v * ma for k, v in f.items()}
        get = out.get
        for k, v in g.items():
            kk = k + sg
            nv = get(kk, 0) - v * mb
            if self.p:
                nv %= self.p
            if nv:
                out[kk] = nv
            else:
                out.pop(kk, None)
        return out

    def is_unit(self, f: dict) -> bool:
        return len(f) == 1 and next(iter(f)) == self.one

    # -- Buchberger --------------------------------------------------------

    def check(self, f: dict) -> dict:
        """Raise :class:`_PackOverflow` if a term of ``f`` left the field range."""
        if self.graded:
            if f and max(f) >> (self.W * self.n) > self.M:
                raise _PackOverflow(max(f))
        else:
            G = self.G
            for k in f:
                if k & G:
                    raise _PackOverflow(k)
        return f

    def groebner(self, gens: list[dict], stop_on_unit: bool = False) -> tuple[list[dict], dict]:
        """Buchberger with the normal strategy and Gebauer-Moeller criteria."""
        stats = {"pairs": 0, "reductions_to_zero": 0, "product_criterion": 0, "chain_criterion": 0}
        G: list[dict] = []
        LM: list[int] = []
        pairs: list[tuple] = []  # heap of (lcm key, j, i)
        alive: dict[tuple[int, int], int] = {}
        active: list[int] = []
        divides = self.divides
        lcm = self.lcm

        def add(h: dict) -> bool:
            lh = max(h)
            k = len(G)
            lcm_with = {i: lcm(LM[i], lh) for i in active}
            # old pairs whose lcm is a proper multiple of the new leading term
            for (i, j), Lij in list(alive.items()):
                if divides(lh, Lij) and lcm(LM[i], lh) != Lij and lcm(LM[j], lh) != Lij:
                    del alive[(i, j)]
                    stats["chain_criterion"] += 1
            groups: dict[int, list[int]] = {}
            for i, L in lcm_with.items():
                groups.setdefault(L, []).append(i)
            kept: list[int] = []
            for L in sorted(groups):
                if any(divides(K, L) for K in kept):
                    stats["chain_criterion"] += len(groups[L])
                    continue
                kept.append(L)
            G.append(h)
            LM.append(lh)
            # elements whose leading term the new one divides pair no further
            for i in [i for i in active if divides(lh, LM[i])]:
                active.remove(i)
            active.append(k)
            for L in kept:
                idx = groups[L]
                if any(self.coprime(LM[i], lh) for i in idx):
                    stats["product_criterion"] += 1
                    continue
                i = min(idx)
                heapq.heappush(pairs, (L, k, i))
                alive[(i, k)] = L
            return self.is_unit(h)

        for f in gens:
            f = self.normalize(self.check(f))
            if f and add(f) and stop_on_unit:
                return [f], stats
        while pairs:
            L, j, i = heapq.heappop(pairs)
            if alive.pop((i, j), None) is None:
                continue
            stats["pairs"] += 1
            self.check({L: 1})
            s = self.check(self.spoly(G[i], LM[i], G[j], LM[j], L))
            # the active elements' leading terms generate the leading ideal
            r = self.reduce(s, [(LM[a], G[a]) for a in active])
            r = self.normalize(self.check(r))
            if not r:
                stats["reductions_to_zero"] += 1
                continue
            if add(r) and stop_on_unit:
                return [r], stats
        return self.interreduce(G), stats

    def interreduce(self, G: list[dict]) -> list[dict]:
        polys = [g for g in G if g]
        if any(self.is_unit(g) for g in polys):
            return [{self.one: 1}]
        # minimal basis: drop elements whose leading term is divisible by another's
        polys.sort(key=lambda g: max(g))
        minimal: list[dict] = []
        for g in polys:
            lg = max(g)
            if not any(self.divides(max(h), lg) for h in minimal):
                minimal.append(g)
        out = []
        for i, g in enumerate(minimal):
            others = [(max(h), h) for j, h in enumerate(minimal) if j != i]
            out.append(self.normalize(self.reduce(g, others)))
        out.sort(key=lambda g: max(g))
        return out


def _start_bits(polys: Iterable[Polynomial]) -> int:
    top = max((m.degree for f in polys for m in f.monomials()), default=0)
    return max(16, top.bit_length() + 2)


def _retrying(run, bits: int):
    """Call ``run(bits)``, doubling the field width after each overflow."""
    while True:
        try:
            return run(bits)
        except _PackOverflow:
            bits *= 2


def QQ_to_fp(c: Fraction, p: int) -> int:
    return FieldSpec(p).coerce(c)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


def _variables(polys: Iterable[Polynomial]) -> set[int]:
    out: set[int] = set()
    for f in polys:
        out |= f.variables()
    return out


def _field(field_spec) -> FieldSpec:
    if field_spec is None:
        return QQ
    if isinstance(field_spec, str):
        return FieldSpec.parse(field_spec)
    return field_spec


@dataclass
class GroebnerBasis:
    """A reduced Groebner basis (leading coefficients 1)."""

    generators: list[Polynomial]
    order: TermOrder
    field: FieldSpec
    source_hash: str
    stats: dict = field(default_factory=dict, compare=False)
    _ctx: _Context | None = field(default=None, repr=False, compare=False)
    _encoded: list | None = field(default=None, repr=False, compare=False)

    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_constant()

    def leading_monomials(self) -> list[Monomial]:
        ctx = self._ctx
        return [ctx.monomial_of(lm) for lm, _ in self._encoded]

    def normal_form(self, f: Polynomial) -> Polynomial:
        f = self.field.reduce(Polynomial.coerce(f))
        if not f:
            return f
        variables = set(self._ctx.vars) | f.variables()

        def run(bits):
            if bits == self._ctx.bits and variables == set(self._ctx.vars):
                ctx, basis = self._ctx, self._encoded
            else:
                # a new variable or a larger exponent needs a fresh encoding
                ctx = _Context(self.order, self.order.ascending(variables), self._ctx.p, bits)
                basis = [(max(e), e) for e in (ctx.encode(g) for g in self.generators)]
            enc, s = ctx.encode(f, exact=True)
            r, t = ctx.reduce(ctx.check(enc), basis, track=True)
            return ctx.decode_exact(r, s * t)

        return _retrying(run, max(self._ctx.bits, _start_bits([f])))

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()

    def __len__(self) -> int:
        return len(self.generators)


def _source_hash(gens: Sequence[Polynomial], order: TermOrder, fld: FieldSpec) -> str:
    text = "|".join(str(g) for g in gens) + f"#{order.kind}{order.priority}#{fld}"
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def buchberger(
    gens: Sequence,
    order: TermOrder = DEFAULT_ORDER,
    field: FieldSpec | str | None = None,
    stop_on_unit: bool = False,
    variables: Iterable[int] = (),
) -> GroebnerBasis:
    """Reduced Groebner basis of ``gens``.

    Pairs are processed by the normal strategy (smallest lcm first, ties by
    index) with the product and chain criteria.  With ``stop_on_unit`` the
    computation returns ``[1]`` as soon as a unit appears.
    """
    fld = _field(field)
    polys = [fld.reduce(Polynomial.coerce(g)) for g in gens]
    ascending = order.ascending(_variables(polys) | set(variables))

    def run(bits):
        ctx = _Context(order, ascending, fld.characteristic, bits)
        encoded = [ctx.encode(g) for g in polys]
        G, stats = ctx.groebner([e for e in encoded if e], stop_on_unit=stop_on_unit)
        return ctx, G, stats

    ctx, G, stats = _retrying(run, _start_bits(polys))
    if stop_on_unit and len(G) == 1 and ctx.is_unit(G[0]):
        G = [{ctx.one: 1}]
    return GroebnerBasis(
        generators=[ctx.decode(g) for g in G],
        order=order,
        field=fld,
        source_hash=_source_hash(polys, order, fld),
        stats=stats,
        _ctx=ctx,
        _encoded=[(max(g), g) for g in G],
    )


def normal_form(
    f,
    basis: GroebnerBasis | Sequence,
    order: TermOrder = DEFAULT_ORDER,
    field: FieldSpec | str | None = None,
) -> Polynomial:
    """Remainder of multivariate division of ``f`` by ``basis``.

    ``basis`` may be a :class:`GroebnerBasis` or any list of polynomials; in
    the latter case the remainder depends on the list order.
    """
    if isinstance(basis, GroebnerBasis):
        return basis.normal_form(f)
    fld = _field(field)
    polys = [fld.reduce(Polynomial.coerce(g)) for g in basis]
    if not any(polys):
        raise ValueError("normal form needs a nonempty basis")
    f = fld.reduce(Polynomial.coerce(f))
    if not f:
        return f
    ascending = order.ascending(_variables(polys + [f]))

    def run(bits):
        ctx = _Context(order, ascending, fld.characteristic, bits)
        div = [(max(e), e) for e in (ctx.encode(g) for g in polys) if e]
        fe, s = ctx.encode(f, exact=True)
        r, t = ctx.reduce(ctx.check(fe), div, track=True)
        return ctx.decode_exact(r, s * t)

    return _retrying(run, _start_bits(polys + [f]))


def ideal_member(f, J: Sequence, order: TermOrder = DEFAULT_ORDER, field=None) -> bool:
    """Whether ``f`` lies in the ideal generated by ``J``."""
    f = Polynomial.coerce(f)
    if f.is_zero():
        return True
    if not any(Polynomial.coerce(g) for g in J):
        return False
    return buchberger(J, order, field).contains(f)


class CertificateNotFound(RuntimeError):
    """No explicit power ``g^k`` in ``J`` was found below the cap."""


@dataclass
class RadicalCertificate:
    """Outcome of a radical membership test ``g in sqrt(J)``."""

    element: Polynomial
    member: bool
    slack_basis_size: int
    power: int | None = None
    status: str = "member"  # member | not_member | cap_exceeded

    def to_dict(self) -> dict:
        d = {
            "generator": str(self.element),
            "member": self.member,
            "status": self.status,
            "slack_basis_size": self.slack_basis_size,
        }
        if self.power is not None:
            d["power"] = self.power
        return d


def _slack_index(J: Sequence[Polynomial], g: Polynomial, extra: Iterable[int] = ()) -> int:
    used = _variables(list(J) + [g]) | set(extra)
    return max(used, default=-1) + 1


def radical_certificate(
    g,
    J: Sequence,
    order: TermOrder = DEFAULT_ORDER,
    field=None,
    explicit: bool = False,
    cap: int = 64,
    basis: GroebnerBasis | None = None,
) -> RadicalCertificate:
    """Rabinowitsch test ``1 in J + (1 - y g)``, optionally with an explicit power.

    The slack variable ``y`` gets a fresh index ranked above every other
    variable.  In explicit mode ``k = 1, 2, 4, ...`` is tried up to ``cap``
    and the smallest working ``k`` is then located by bisection.
    """
    g = Polynomial.coerce(g)
    if g.is_zero():
        raise ValueError("radical membership of the zero polynomial is trivial; g must be nonzero")
    fld = _field(field)
    J = [Polynomial.coerce(h) for h in J]
    y = _slack_index(J, g)
    slack = Polynomial.one() - Polynomial.var(y) * g
    ext_order = TermOrder(order.kind, tuple(order.ascending(_variables(J + [g]))) + (y,))
    gb = buchberger(J + [slack], ext_order, fld, stop_on_unit=True)
    member = gb.is_unit()
    cert = RadicalCertificate(g, member, len(gb), status="member" if member else "not_member")
    if not (explicit and member):
        return cert
    if basis is None:
        basis = buchberger(J, order, fld)
    k = 1
    while k <= cap:
        if basis.contains(g ** k):
            lo, hi = k // 2, k
            while hi - lo > 1:
                mid = (lo + hi) // 2
                if basis.contains(g ** mid):
                    hi = mid
                else:
                    lo = mid
            cert.power = hi
            return cert
        k *= 2
    cert.status = "cap_exceeded"
    return cert


def radical_member(g, J: Sequence, order: TermOrder = DEFAULT_ORDER, field=None,
                   explicit: bool = False, cap: int = 64) -> bool:
    """Whether ``g`` lies in the radical of ``(J)``.

    Raises :class:`CertificateNotFound` in explicit mode when ``g`` is in the
    radical but no power up to ``cap`` lies in ``J``.
    """
    cert = radical_certificate(g, J, order, field, explicit=explicit, cap=cap)
    if cert.status == "cap_exceeded":
        raise CertificateNotFound(f"certificate not found below cap {cap} for {g}")
    return cert.member


# ---------------------------------------------------------------------------
# radical equality and arithmetical rank


WORKERS_ENV = "SRARA_WORKERS"


def _workers(requested: int | None) -> int:
    if requested is not None:
        return max(1, requested)
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class VerificationReport:
    """Evidence for ``sqrt(J) = I`` and bounds on the arithmetical rank of ``I``."""

    target: list[str]
    variables: list[str]
    elements: list[str]
    provenance: str
    field: str
    order: str
    containment: list[dict]
    radical: list[dict]
    height: int
    unmixed: bool
    ara_lower: int
    ara_upper: int
    ara_requested: bool = False
    failures: list[str] = field(default_factory=list)
    timing: dict = field(default_factory=dict)
    characteristic: dict | None = None

    @property
    def inclusion_forward(self) -> bool:
        """``J`` is contained in ``I`` (termwise)."""
        return all(e["ok"] for e in self.containment)

    @property
    def inclusion_backward(self) -> bool:
        """Every generator of ``I`` lies in ``sqrt(J)``."""
        return all(r["status"] == "member" for r in self.radical)

    @property
    def radical_equal(self) -> bool:
        return self.inclusion_forward and self.inclusion_backward

    @property
    def ara(self) -> int | None:
        if self.radical_equal and self.ara_lower == self.ara_upper:
            return self.ara_lower
        return None

    @property
    def sci(self) -> bool | None:
        """Set-theoretic complete intersection flag, once the rank is certified."""
        if self.ara is None:
            return None
        return self.unmixed and self.ara == self.height

    @property
    def verdict(self) -> str:
        if not self.inclusion_forward or any(r["status"] == "not_member" for r in self.radical):
            return "refuted"
        if any(r["status"] == "cap_exceeded" for r in self.radical):
            return "inconclusive"
        if self.ara_requested and self.ara_lower != self.ara_upper:
            return "inconclusive"
        return "certified"

    @property
    def certified(self) -> bool:
        return self.verdict == "certified"

    @property
    def exit_code(self) -> int:
        return {"certified": 0, "refuted": 1, "inconclusive": 2}[self.verdict]

    def summary(self) -> str:
        head = f"{self.verdict}: {len(self.elements)} elements vs {len(self.target)} generators over {self.field}"
        if self.ara is not None:
            head += f"; ara = {self.ara}, SCI = {'yes' if self.sci else 'no'}"
        else:
            head += f"; ara in [{self.ara_lower}, {self.ara_upper}]"
        if self.characteristic and self.characteristic["dependent"]:
            head += "; verdict differs from the rational one (characteristic dependence)"
        if self.failures:
            head += "; " + "; ".join(self.failures)
        return head

    def to_dict(self, include_timing: bool = False) -> dict:
        d = {
            "verdict": self.verdict,
            "field": self.field,
            "order": self.order,
            "provenance": self.provenance,
            "variables": self.variables,
            "target": self.target,
            "elements": self.elements,
            "inclusion_J_in_I": {"proven": self.inclusion_forward, "evidence": self.containment},
            "inclusion_I_in_radical_J": {"proven": self.inclusion_backward, "certificates": self.radical},
            "height": self.height,
            "unmixed": self.unmixed,
            "ara_lower": self.ara_lower,
            "ara_upper": self.ara_upper,
            "ara": self.ara,
            "sci": self.sci,
            "failures": self.failures,
        }
        if self.characteristic is not None:
            d["characteristic"] = self.characteristic
        if include_timing:
            d["timing"] = self.timing
        return d

    def to_json(self, include_timing: bool = False) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2)


def _radical_job(args):
    g, J, order, fld, explicit, cap, basis = args
    t = time.perf_counter()
    cert = radical_certificate(g, J, order, fld, explicit=explicit, cap=cap, basis=basis)
    return cert, time.perf_counter() - t


def verify_up_to_radical(
    witness,
    order: TermOrder = DEFAULT_ORDER,
    field: FieldSpec | str | None = None,
    explicit_powers: bool = False,
    cap: int = 64,
    workers: int | None = None,
    ara: bool = False,
) -> VerificationReport:
    """Decide whether ``witness.elements`` generate ``witness.target`` up to radical.

    ``J in I`` is checked term by term; ``I in sqrt(J)`` by a Rabinowitsch
    test for each minimal generator.  ``workers`` (or the ``SRARA_WORKERS``
    environment variable) runs the generator checks in a process pool; the
    report is assembled in generator order either way.
    """
    from .simplicial import ideal_minimal_primes

    fld = _field(field)
    t0 = time.perf_counter()
    target = witness.target
    if not target.is_squarefree():
        raise ValueError("target must be a squarefree monomial ideal")
    elems = [fld.reduce(e) for e in witness.elements]
    failures: list[str] = []

    containment = []
    for k, f in enumerate(elems):
        terms = []
        ok = True
        for m in f.monomials():
            d = target.witness_divisor(m)
            terms.append({"term": str(m), "divisor": None if d is None else str(d)})
            if d is None:
                ok = False
                failures.append(f"J in I fails: term {m} of element {k} ({f}) is in no generator's multiples")
        containment.append({"element": str(f), "ok": ok, "terms": terms})
    t1 = time.perf_counter()

    J = [e for e in elems if e]
    gens = target.sorted_generators()
    basis = buchberger(J, order, fld) if (explicit_powers and J) else None
    jobs = [(Polynomial.from_monomial(g), J, order, fld, explicit_powers, cap, basis) for g in gens]
    nw = _workers(workers)
    if nw > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=min(nw, len(jobs))) as pool:
            results = list(pool.map(_radical_job, jobs))
    else:
        results = [_radical_job(j) for j in jobs]
    radical = []
    per_gen = {}
    for g, (cert, dt) in zip(gens, results):
        radical.append(cert.to_dict())
        per_gen[str(g)] = dt
        if cert.status == "not_member":
            failures.append(f"I in sqrt(J) fails: generator {g} is not in the radical")
        elif cert.status == "cap_exceeded":
            failures.append(f"I in sqrt(J) inconclusive: no power of {g} up to {cap} lies in J")
    t2 = time.perf_counter()

    primes = ideal_minimal_primes(target) if not target.is_zero() else []
    heights = [p.height for p in primes] or [0]
    return VerificationReport(
        target=[str(g) for g in gens],
        variables=[f"x{v}" for v in witness.variables],
        elements=[str(e) for e in witness.elements],
        provenance=getattr(witness, "provenance", "user"),
        field=str(fld),
        order=str(order),
        containment=containment,
        radical=radical,
        height=min(heights),
        unmixed=len(set(heights)) == 1,
        ara_lower=max(heights),
        ara_upper=len(J),
        ara_requested=ara,
        failures=failures,
        timing={"containment": t1 - t0, "radical": t2 - t1, "per_generator": per_gen, "total": t2 - t0},
    )


def certify_ara(witness, report: VerificationReport | None = None, **kwargs) -> VerificationReport:
    """Certify ``ara(target) = len(witness)`` via the Krull height bound.

    The lower bound is the largest height of a minimal prime of the target,
    the upper bound the witness size.  When they differ the report carries
    the interval and verdict ``inconclusive``.
    """
    if report is None:
        report = verify_up_to_radical(witness, **kwargs)
    report.ara_requested = True
    return report


def compare_characteristics(witness, fields: Sequence = ("q", "fp:2", "fp:3", "fp:5"), **kwargs) -> dict:
    """Verdicts of :func:`verify_up_to_radical` over several fields.

    ``dependent`` is true when the verdicts are not all equal.
    """
    verdicts = {}
    for f in fields:
        fld = _field(f)
        verdicts[str(fld)] = verify_up_to_radical(witness, field=fld, **kwargs).verdict
    return {"verdicts": verdicts, "dependent": len(set(verdicts.values())) > 1}


def flag_characteristic(report: VerificationReport, witness, **kwargs) -> VerificationReport:
    """Attach the rational verdict to a prime-field report and flag a change."""
    if report.field == str(QQ):
        return report
    ref = verify_up_to_radical(witness, field=QQ, **kwargs).verdict
    report.characteristic = {
        "verdicts": {str(QQ): ref, report.field: report.verdict},
        "dependent": ref != report.verdict,
    }
    return report
