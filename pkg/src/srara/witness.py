"""Constructions of polynomials generating a squarefree monomial ideal up to radical.

* :func:`schmitt_vogel` -- layered sums of monomials
* :func:`cone_lift` -- lift a set-theoretic complete intersection witness of
  ``I_Delta`` to the complex obtained by coning off one facet
* :func:`family_witness` -- the determinant construction for the ideals ``I_n``
* :func:`example4_witness` -- a four-element witness for a height-4 ideal on six
  variables built from a 3x3 determinant
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .monomial import Monomial, MonomialIdeal, Variable, divides, ideal_contains
from .polyring import PolyMatrix, Polynomial, square_substitution
from .simplicial import (
    SimplicialComplex,
    cone,
    cycle_complex,
    height,
    is_unmixed,
    stanley_reisner_ideal,
)

PROVENANCES = ("schmitt_vogel", "cone_lift", "family_In", "example4", "user")


class ConstructionError(ValueError):
    """A construction precondition does not hold."""


def _x(i: int) -> Polynomial:
    return Polynomial.var(i)


def _mono(*idx: int) -> Monomial:
    return Monomial.squarefree(idx)


# ---------------------------------------------------------------------------
# witness sets


@dataclass
class WitnessSet:
    """Polynomials claimed to generate ``target`` up to radical."""

    elements: list[Polynomial]
    target: MonomialIdeal
    provenance: str = "user"
    variables: tuple[int, ...] = ()
    trace: dict | None = None

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")
        self.elements = [Polynomial.coerce(e) for e in self.elements]
        used = set(self.target.support())
        for e in self.elements:
            used |= e.variables()
        self.variables = tuple(sorted(used | set(self.variables)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def outside_target(self) -> list[tuple[int, Monomial]]:
        """``(element index, term)`` pairs whose term is not in the target."""
        return [
            (k, m)
            for k, f in enumerate(self.elements)
            for m in f.monomials()
            if not self.target.contains_monomial(m)
        ]

    def complex(self) -> SimplicialComplex:
        from .simplicial import complex_from_ideal

        return complex_from_ideal(self.target, self.variables)

    def without(self, index: int) -> "WitnessSet":
        elems = [e for k, e in enumerate(self.elements) if k != index]
        return WitnessSet(elems, self.target, "user", self.variables)

    def to_dict(self, with_trace: bool = True) -> dict:
        d = {
            "target": ideal_to_dict(self.target, self.variables),
            "elements": [str(e) for e in self.elements],
            "provenance": self.provenance,
        }
        if with_trace and self.trace is not None:
            d["trace"] = self.trace
        return d

    def to_json(self, with_trace: bool = True) -> str:
        return json.dumps(self.to_dict(with_trace), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "WitnessSet":
        try:
            target, variables = ideal_from_dict(data["target"])
            elements = [Polynomial.parse(e) for e in data["elements"]]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"witness JSON needs 'target' and 'elements': {exc}") from exc
        return cls(elements, target, data.get("provenance", "user"), variables, data.get("trace"))

    @classmethod
    def from_json(cls, text: str) -> "WitnessSet":
        return cls.from_dict(json.loads(text))


def ideal_to_dict(ideal: MonomialIdeal, variables: Iterable[int] = ()) -> dict:
    vs = sorted(set(variables) | set(ideal.support()))
    return {
        "variables": [f"x{v}" for v in vs],
        "generators": [str(g) for g in ideal.sorted_generators()],
    }


def ideal_from_dict(data: dict) -> tuple[MonomialIdeal, tuple[int, ...]]:
    gens = [Monomial.parse(g) for g in data["generators"]]
    ideal = MonomialIdeal(gens)
    vs = {Variable.parse(v).index for v in data.get("variables", [])}
    return ideal, tuple(sorted(vs | set(ideal.support())))


# ---------------------------------------------------------------------------
# Schmitt-Vogel


@dataclass
class SVPartition:
    """Levels ``P_0, ..., P_r`` with exponents ``e(p) >= 1`` (default 1)."""

    levels: list[list[Polynomial]]
    exponents: dict = field(default_factory=dict)
    elements: list[Polynomial] | None = None

    def __post_init__(self):
        self.levels = [[Polynomial.coerce(p) for p in level] for level in self.levels]
        self.exponents = {Polynomial.coerce(k): int(v) for k, v in self.exponents.items()}
        if self.elements is not None:
            self.elements = [Polynomial.coerce(p) for p in self.elements]

    def exponent(self, p: Polynomial) -> int:
        return self.exponents.get(p, 1)

    def union(self) -> list[Polynomial]:
        seen: dict[Polynomial, None] = {}
        for level in self.levels:
            for p in level:
                seen.setdefault(p, None)
        return list(seen)


@dataclass
class SVDiagnostics:
    valid: bool
    condition: str | None = None
    message: str = ""
    pair: tuple | None = None

    def __bool__(self) -> bool:
        return self.valid


def _in_principal(f: Polynomial, gen: Polynomial) -> bool:
    if len(gen) == 1:
        m, _ = gen.terms()[0]
        return ideal_contains(f, MonomialIdeal([m]))
    from .groebner import normal_form

    # a single polynomial is a Groebner basis of the ideal it generates
    return normal_form(f, [gen]).is_zero()


def validate_sv(partition: SVPartition) -> SVDiagnostics:
    """Check conditions (i)-(iii) of the layered-sum lemma."""
    levels = partition.levels
    if partition.elements is not None:
        missing = set(partition.elements) - set(partition.union())
        if missing:
            return SVDiagnostics(False, "i", f"elements not covered by any level: {sorted(map(str, missing))}")
    if not levels or len(levels[0]) != 1:
        n0 = len(levels[0]) if levels else 0
        return SVDiagnostics(False, "ii", f"P_0 must have exactly one element, has {n0}")
    for k, p in partition.exponents.items():
        if p < 1:
            return SVDiagnostics(False, "exponent", f"e({k}) = {p} < 1")
    for l in range(1, len(levels)):
        earlier = [q for lev in levels[:l] for q in lev]
        for p, pp in itertools.combinations(levels[l], 2):
            prod = p * pp
            if not any(_in_principal(prod, q) for q in earlier):
                return SVDiagnostics(
                    False,
                    "iii",
                    f"no element of P_0..P_{l - 1} divides {p} * {pp}",
                    (str(p), str(pp)),
                )
    return SVDiagnostics(True)


def level_sums(partition: SVPartition) -> list[Polynomial]:
    """``q_l = sum of p^e(p) over P_l``, without validating the partition."""
    out = []
    for level in partition.levels:
        q = Polynomial.zero()
        for p in level:
            q = q + p ** partition.exponent(p)
        out.append(q)
    return out


def schmitt_vogel(
    partition: SVPartition,
    target: MonomialIdeal | None = None,
    variables: Iterable[int] = (),
) -> WitnessSet:
    """Layered sums ``q_0, ..., q_r``; their radical equals that of ``(P)``."""
    diag = validate_sv(partition)
    if not diag:
        raise ConstructionError(f"invalid partition (condition {diag.condition}): {diag.message}")
    if target is None:
        gens = []
        for p in partition.union():
            if len(p) != 1:
                raise ConstructionError("target ideal needed when P contains non-monomials")
            gens.append(p.monomials()[0])
        target = MonomialIdeal(gens)
    return WitnessSet(level_sums(partition), target, "schmitt_vogel", tuple(variables))


def find_sv_partition(
    monomials: Sequence[Monomial], levels: int, budget: int = 200_000
) -> SVPartition | None:
    """Search for a valid partition of ``monomials`` into exactly ``levels`` levels.

    Levels are chosen one at a time; a level must be a clique of the graph
    joining two remaining generators whose product is divisible by a member
    of an earlier level.  Deterministic; gives up (returns ``None``) after
    ``budget`` search nodes.
    """
    # by degree, then canonical display order (stable sort)
    gens = sorted(sorted(set(monomials), key=lambda m: m.lex_key(), reverse=True), key=lambda m: m.degree)
    if levels < 1 or levels > len(gens):
        return None
    nodes = 0

    def compatible(p: Monomial, q: Monomial, earlier: list[Monomial]) -> bool:
        prod = p * q
        return any(divides(e, prod) for e in earlier)

    def cliques(pool: list[Monomial], earlier: list[Monomial]):
        # nonempty cliques, largest first, leaving at least one element over
        adj = {p: {q for q in pool if q != p and compatible(p, q, earlier)} for p in pool}
        found: list[tuple[Monomial, ...]] = []

        def grow(clique: list[Monomial], cand: list[Monomial]):
            nonlocal nodes
            nodes += 1
            if nodes > budget:
                return
            if clique and len(clique) < len(pool):
                found.append(tuple(clique))
            for k, v in enumerate(cand):
                grow(clique + [v], [w for w in cand[k + 1:] if w in adj[v]])

        grow([], list(pool))
        found.sort(key=lambda c: -len(c))
        return found

    def rec(level: int, pool: list[Monomial], earlier: list[Monomial], acc: list):
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            return None
        if level == levels - 1:
            if all(compatible(p, q, earlier) for p, q in itertools.combinations(pool, 2)):
                return acc + [list(pool)]
            return None
        for clique in cliques(pool, earlier):
            rest = [p for p in pool if p not in clique]
            if len(rest) < levels - level - 1:
                continue
            out = rec(level + 1, rest, earlier + list(clique), acc + [list(clique)])
            if out is not None:
                return out
        return None

    for p0 in gens:
        rest = [g for g in gens if g != p0]
        if levels == 1:
            if not rest:
                return SVPartition([[Polynomial.from_monomial(p0)]])
            continue
        out = rec(1, rest, [p0], [[p0]])
        if out is not None:
            part = SVPartition([[Polynomial.from_monomial(m) for m in lev] for lev in out])
            assert validate_sv(part)
            return part
        if nodes > budget:
            return None
    return None


# ---------------------------------------------------------------------------
# cone lift


@dataclass
class ConeLiftTrace:
    """Intermediate data of :func:`cone_lift`."""

    base: list[Polynomial]
    facet: tuple[int, ...]
    apex: int
    columns: tuple[int, ...]
    A: PolyMatrix
    A_bar: PolyMatrix
    A_prime: PolyMatrix
    D: Polynomial
    elements: list[Polynomial]
    assignment: str = "largest-index dividing column variable"

    def to_dict(self) -> dict:
        return {
            "base": [str(q) for q in self.base],
            "facet": [f"x{v}" for v in self.facet],
            "apex": f"x{self.apex}",
            "columns": [f"x{v}" for v in self.columns],
            "assignment": self.assignment,
            "A": self.A.to_lists(),
            "A_bar": self.A_bar.to_lists(),
            "A_prime": self.A_prime.to_lists(),
            "D": str(self.D),
        }


def decompose(q: Polynomial, columns: Sequence[int]) -> list[Polynomial]:
    """Coefficients ``a_j`` with ``q = sum a_j * x_{columns[j]}``.

    Each term goes to the largest-index column variable dividing it.
    """
    cols = sorted(columns)
    out = [Polynomial.zero() for _ in cols]
    for m, c in q.terms():
        hits = [j for j, v in enumerate(cols) if m.exponent(v)]
        if not hits:
            raise ConstructionError(f"term {m} of {q} lies outside the prime generated by the column variables")
        j = hits[-1]
        out[j] = out[j] + Polynomial.from_monomial(m / Monomial.var(cols[j]), c)
    return out


def default_apex(cx: SimplicialComplex) -> int:
    return 0 if 0 not in cx.vertices else max(cx.vertices) + 1


def cone_lift(
    cx: SimplicialComplex,
    facet: Iterable,
    base: WitnessSet | Sequence[Polynomial],
    apex: int | Variable | None = None,
    verify_base: bool = True,
    **verify_kwargs,
) -> tuple[WitnessSet, ConeLiftTrace]:
    """Lift ``t = height`` polynomials generating ``I_Delta`` up to radical to
    ``t + 1`` polynomials generating ``I_Delta'`` up to radical, where
    ``Delta'`` is ``cx`` with ``facet`` coned off from ``apex``.

    With ``verify_base`` (default) the base witness is first certified with
    the Groebner engine; pass ``False`` only for a base already verified.
    """
    F = frozenset(v.index if isinstance(v, Variable) else int(v) for v in facet)
    x0 = default_apex(cx) if apex is None else (apex.index if isinstance(apex, Variable) else int(apex))
    lifted_cx = cone(cx, F, x0)
    I = stanley_reisner_ideal(cx)
    t = height(cx)
    if t == 0:
        raise ConstructionError("I_Delta is the zero ideal (Delta is a simplex); nothing to lift")
    if not is_unmixed(cx):
        raise ConstructionError("Delta is not unmixed, so I_Delta cannot be a set-theoretic complete intersection")
    qs = list(base.elements) if isinstance(base, WitnessSet) else [Polynomial.coerce(q) for q in base]
    if len(qs) != t:
        raise ConstructionError(
            f"SCI hypothesis violated: base has {len(qs)} elements but height(I_Delta) = {t}"
        )
    for q in qs:
        bad = [m for m in q.monomials() if not I.contains_monomial(m)]
        if bad:
            raise ConstructionError(f"base element {q} has term {bad[0]} outside I_Delta")
    if verify_base:
        from .groebner import verify_up_to_radical

        report = verify_up_to_radical(WitnessSet(qs, I, "user", cx.vertices), **verify_kwargs)
        if not report.certified:
            raise ConstructionError(f"base witness does not generate I_Delta up to radical: {report.summary()}")

    columns = tuple(sorted(set(cx.vertices) - F))
    A_rows = [decompose(q, columns) for q in qs]
    for i, row in enumerate(A_rows):
        for j, a in enumerate(row):
            if not ideal_contains(a * _x(columns[j]), I):
                raise ConstructionError(f"a[{i},{j}] * x{columns[j]} not in I_Delta")
        if sum((a * _x(columns[j]) for j, a in enumerate(row)), Polynomial.zero()) != qs[i]:
            raise AssertionError("decomposition does not reconstruct the base element")
    A = PolyMatrix(A_rows)
    A_bar = A.map(square_substitution)
    A_bar = PolyMatrix([[A_bar[i, j] * _x(columns[j]) for j in range(t)] for i in range(t)])
    q_bar = []
    for i in range(t):
        s = sum((A_bar[i, j] * _x(columns[j]) for j in range(t)), Polynomial.zero())
        if s != square_substitution(qs[i]):
            raise AssertionError("row sum of A_bar differs from the squared base element")
        if not ideal_contains(s, I):
            raise AssertionError("squared base element left I_Delta")
        q_bar.append(s)
    A_prime = A_bar + PolyMatrix.identity(t, _x(x0))
    D = A_prime.determinant() - _x(x0) ** t
    if not ideal_contains(D, I):
        raise AssertionError("D is not in I_Delta")
    elements = [D] + [q_bar[i] + _x(x0) * _x(columns[i]) for i in range(t)]
    trace = ConeLiftTrace(qs, tuple(sorted(F)), x0, columns, A, A_bar, A_prime, D, elements)
    target = stanley_reisner_ideal(lifted_cx)
    ws = WitnessSet(elements, target, "cone_lift", lifted_cx.vertices, trace.to_dict())
    return ws, trace


# ---------------------------------------------------------------------------
# the family I_n


def _need_n(n: int) -> None:
    if not isinstance(n, int) or n < 6:
        raise ConstructionError(f"the family I_n is defined for n >= 6, got {n}")


def family_ideal(n: int) -> MonomialIdeal:
    _need_n(n)
    gens = [_mono(1, j) for j in range(3, n)]
    gens += [_mono(2, j) for j in range(4, n + 1)]
    gens += [_mono(3, j) for j in range(5, n + 1)]
    gens += [_mono(j, n) for j in range(4, n - 1)]
    return MonomialIdeal(gens)


def family_matrix_B(n: int) -> PolyMatrix:
    """The (n-3)x(n-3) matrix whose row sums against ``x4..xn`` give the ``q_i``."""
    _need_n(n)
    m = n - 3
    B = [[Polynomial.zero() for _ in range(m)] for _ in range(m)]
    # 1-based (i, j) as in the rules
    def put(i, j, v):
        B[i - 1][j - 1] = v

    for j in range(1, n - 3):
        put(j, j, _x(1))
    put(m, m, _x(3))
    for j in range(1, n - 3):
        put(j + 1, j, _x(2))
    for j in range(2, n - 3):
        put(j - 1, j, _x(3) * _x(3 + j))
    put(1, m, _x(2))
    for i in range(2, n - 3):
        put(i, m, _x(2 + i))
    return PolyMatrix(B)


def family_witness(n: int) -> WitnessSet:
    """``D, q_1, ..., q_{n-3}`` generating ``I_n`` up to radical."""
    B = family_matrix_B(n)
    m = n - 3
    qs = [
        sum((B[i, j] * _x(4 + j) for j in range(m)), Polynomial.zero())
        for i in range(m)
    ]
    D = B.determinant() - (-1) ** n * _x(2) ** (n - 3)
    target = family_ideal(n)
    checks = lemma21_checks(n, D)
    if not (checks["a"] and checks["b"]):
        raise AssertionError(f"determinant lemma fails for n={n}: {checks}")
    trace = {"B": B.to_lists(), "det_B": str(B.determinant()), "D": str(D)}
    return WitnessSet([D] + qs, target, "family_In", tuple(range(1, n + 1)), trace)


def lemma21_checks(n: int, D: Polynomial | None = None) -> dict:
    """Per-term checks on ``D = det B - (-1)^n x2^(n-3)``.

    ``a``: ``D`` lies in ``I_n``.  ``b``: every term of ``D - x1^(n-4) x3`` is
    divisible by ``x2`` and by some ``x_j`` with ``4 <= j <= n``.
    """
    if D is None:
        B = family_matrix_B(n)
        D = B.determinant() - (-1) ** n * _x(2) ** (n - 3)
    a = ideal_contains(D, family_ideal(n))
    rest = D - _x(1) ** (n - 4) * _x(3)
    b = all(
        m.exponent(2) > 0 and any(m.exponent(j) for j in range(4, n + 1))
        for m in rest.monomials()
    )
    return {"n": n, "a": a, "b": b, "terms": len(D)}


def family_term_multiset(n: int) -> list[Monomial]:
    """Radicals of the nonzero summands ``b_ij * x_{3+j}`` of all ``q_i``."""
    B = family_matrix_B(n)
    out = []
    for i in range(n - 3):
        for j in range(n - 3):
            s = B[i, j] * _x(4 + j)
            for mono in s.monomials():
                out.append(mono.radical())
    return out


# ---------------------------------------------------------------------------
# the six-variable example


def example4_ideal() -> MonomialIdeal:
    return MonomialIdeal(
        [_mono(1, 4), _mono(1, 5), _mono(1, 2, 3), _mono(2, 4), _mono(2, 5),
         _mono(2, 6), _mono(3, 5), _mono(3, 6), _mono(4, 6)]
    )


def example4_matrix_C() -> PolyMatrix:
    x1, x2, x3, x4 = (_x(i) for i in range(1, 5))
    return PolyMatrix([[x1, x2, x3], [x2, x3, x4], [0, x1, x2]])


def example4_witness() -> tuple[WitnessSet, PolyMatrix]:
    C = example4_matrix_C()
    x = {i: _x(i) for i in range(1, 7)}
    D = C.determinant() - x[1] * x[2] * x[3] + x[2] ** 3
    q1 = x[1] * x[4] + x[2] * x[5] + x[3] * x[6]
    q2 = x[2] * x[4] + x[3] * x[5] + x[4] * x[6]
    q3 = x[1] * x[5] + x[2] * x[6]
    trace = {"C": C.to_lists(), "det_C": str(C.determinant())}
    ws = WitnessSet([D, q1, q2, q3], example4_ideal(), "example4", tuple(range(1, 7)), trace)
    return ws, C


# ---------------------------------------------------------------------------
# the 5-cycle


CYCLE5_LEVELS = [["x1*x3"], ["x1*x4", "x2*x5"], ["x2*x4", "x3*x5"]]


def cycle5_partition() -> SVPartition:
    """Layering of the 5-cycle generators whose sums give ``q_1, q_2, q_3``.

    The middle level fails condition (iii) (``x1x4 * x2x5`` is divisible only
    by the later ``x2x4``), so the sums are certified by Groebner instead.
    """
    return SVPartition([[Polynomial.parse(s) for s in lev] for lev in CYCLE5_LEVELS])


def cycle5_witness() -> WitnessSet:
    """Three polynomials generating the 5-cycle ideal up to radical."""
    cx = cycle_complex(5)
    return WitnessSet(level_sums(cycle5_partition()), stanley_reisner_ideal(cx), "user", cx.vertices)
