"""Simplicial complexes and the Stanley-Reisner correspondence.

A complex is stored by its vertex set and its facets (maximal faces).
Vertices are variable indices, so the complex on ``{x1, ..., x5}`` has
vertices ``(1, 2, 3, 4, 5)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .monomial import Monomial, MonomialIdeal, Variable, _index


class ComplexError(ValueError):
    pass


def _vset(vs: Iterable) -> frozenset[int]:
    return frozenset(_index(v) for v in vs)


def _fmt_face(face: Iterable[int]) -> str:
    return "{" + ", ".join(f"x{i}" for i in sorted(face)) + "}"


@dataclass(frozen=True)
class MinimalPrime:
    """The prime ``P_F`` generated by the vertices outside a facet ``F``."""

    variables: frozenset[int]

    @property
    def height(self) -> int:
        return len(self.variables)

    def ideal(self) -> MonomialIdeal:
        return MonomialIdeal(Monomial.var(i) for i in self.variables)

    def sorted_variables(self) -> list[int]:
        return sorted(self.variables)

    def __str__(self) -> str:
        if not self.variables:
            return "(0)"
        return "(" + ", ".join(f"x{i}" for i in sorted(self.variables)) + ")"


class SimplicialComplex:
    """A simplicial complex given by its facets.

    Faces passed in that are contained in another face are dropped, so any
    generating family of faces is accepted.  Every vertex must lie in some
    facet.
    """

    __slots__ = ("vertices", "facets")

    def __init__(self, vertices: Iterable, facets: Iterable[Iterable]):
        verts = _vset(vertices)
        faces = {_vset(f) for f in facets}
        if any(not f for f in faces):
            raise ComplexError("facets must be nonempty")
        for f in faces:
            if not f <= verts:
                raise ComplexError(f"face {_fmt_face(f)} uses vertices outside the vertex set")
        maximal = frozenset(f for f in faces if not any(f < g for g in faces))
        covered = frozenset().union(*maximal) if maximal else frozenset()
        missing = verts - covered
        if missing:
            raise ComplexError(f"vertices {_fmt_face(missing)} lie in no facet")
        if not verts:
            raise ComplexError("empty vertex set")
        self.vertices: tuple[int, ...] = tuple(sorted(verts))
        self.facets: frozenset[frozenset[int]] = maximal

    @classmethod
    def simplex(cls, vertices: Iterable) -> "SimplicialComplex":
        vs = list(vertices)
        return cls(vs, [vs])

    def sorted_facets(self) -> list[tuple[int, ...]]:
        return sorted((tuple(sorted(f)) for f in self.facets), key=lambda f: (-len(f), f))

    def is_face(self, face: Iterable) -> bool:
        s = _vset(face)
        return any(s <= f for f in self.facets)

    def is_facet(self, face: Iterable) -> bool:
        return _vset(face) in self.facets

    def is_simplex(self) -> bool:
        return len(self.facets) == 1 and next(iter(self.facets)) == frozenset(self.vertices)

    def minimal_nonfaces(self) -> list[frozenset[int]]:
        """Minimal non-faces, by ascending cardinality.

        Level-wise search: a candidate of size ``k`` extends a face of size
        ``k - 1`` by a larger vertex and is kept only if all its
        ``(k - 1)``-subsets are faces.
        """
        facets = list(self.facets)
        out: list[frozenset[int]] = []
        level = {frozenset([v]) for v in self.vertices}
        while level:
            nxt: set[frozenset[int]] = set()
            for face in level:
                top = max(face)
                for v in self.vertices:
                    if v <= top:
                        continue
                    cand = face | {v}
                    if any(cand - {u} not in level for u in cand if u != v):
                        continue
                    if any(cand <= f for f in facets):
                        nxt.add(cand)
                    else:
                        out.append(cand)
            level = nxt
        return sorted(out, key=lambda s: (len(s), sorted(s)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertices == other.vertices
            and self.facets == other.facets
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.facets))

    def __repr__(self) -> str:
        return "SimplicialComplex(facets=[" + ", ".join(_fmt_face(f) for f in self.sorted_facets()) + "])"

    def to_dict(self) -> dict:
        return {
            "vertices": [f"x{v}" for v in self.vertices],
            "facets": [[f"x{v}" for v in f] for f in sorted(tuple(sorted(f)) for f in self.facets)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        try:
            verts = [Variable.parse(v).index for v in data["vertices"]]
            facets = [[Variable.parse(v).index for v in f] for f in data["facets"]]
        except (KeyError, TypeError) as exc:
            raise ComplexError(f"complex JSON needs 'vertices' and 'facets': {exc}") from exc
        return cls(verts, facets)

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        return cls.from_dict(json.loads(text))


def stanley_reisner_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """Ideal generated by the products over the minimal non-faces."""
    return MonomialIdeal(Monomial.squarefree(s) for s in cx.minimal_nonfaces())


def minimal_transversals(edges: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    """Minimal vertex covers of a hypergraph (Berge's incremental method)."""
    trans: set[frozenset[int]] = {frozenset()}
    for e in sorted({frozenset(e) for e in edges}, key=lambda s: (len(s), sorted(s))):
        if not e:
            raise ValueError("empty hyperedge has no transversal")
        grown: set[frozenset[int]] = set()
        for t in trans:
            if t & e:
                grown.add(t)
            else:
                grown.update(t | {v} for v in e)
        trans = {t for t in grown if not any(u < t for u in grown)}
    return sorted(trans, key=lambda s: (len(s), sorted(s)))


def complex_from_ideal(ideal: MonomialIdeal, vertices: Iterable) -> SimplicialComplex:
    """Inverse of :func:`stanley_reisner_ideal` on the given vertex set."""
    verts = _vset(vertices)
    for g in ideal.generators:
        if not g.is_squarefree():
            raise ComplexError(f"generator {g} is not squarefree")
        if not g.support <= verts:
            raise ComplexError(f"generator {g} uses variables outside the vertex set")
        if g.degree < 2:
            raise ComplexError(f"vertex {g} is a non-face; every vertex must be a face")
    covers = minimal_transversals(g.support for g in ideal.generators)
    return SimplicialComplex(verts, [verts - c for c in covers])


def minimal_primes(cx: SimplicialComplex) -> list[MinimalPrime]:
    """One prime per facet, ordered by height then variables."""
    vs = frozenset(cx.vertices)
    primes = [MinimalPrime(vs - f) for f in cx.facets]
    return sorted(primes, key=lambda p: (p.height, p.sorted_variables()))


def ideal_minimal_primes(ideal: MonomialIdeal) -> list[MinimalPrime]:
    """Minimal primes of a squarefree monomial ideal, independent of ambient ring."""
    if not ideal.is_squarefree():
        raise ValueError("ideal is not squarefree")
    return [MinimalPrime(c) for c in minimal_transversals(g.support for g in ideal.generators)]


def height(cx: SimplicialComplex) -> int:
    return len(cx.vertices) - max(len(f) for f in cx.facets)


def dimension(cx: SimplicialComplex) -> int:
    return max(len(f) for f in cx.facets) - 1


def is_pure(cx: SimplicialComplex) -> bool:
    return len({len(f) for f in cx.facets}) == 1


is_unmixed = is_pure


def is_cm_one_dimensional(cx: SimplicialComplex) -> bool:
    """Cohen-Macaulay test for a pure one-dimensional complex: graph connectivity."""
    if not is_pure(cx) or dimension(cx) != 1:
        raise ComplexError(
            f"expected a pure 1-dimensional complex (pure={is_pure(cx)}, dim={dimension(cx)})"
        )
    adj: dict[int, set[int]] = {v: set() for v in cx.vertices}
    for f in cx.facets:
        a, b = tuple(f)
        adj[a].add(b)
        adj[b].add(a)
    start = cx.vertices[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v] - seen:
            seen.add(w)
            stack.append(w)
    return len(seen) == len(cx.vertices)


def cone(cx: SimplicialComplex, facet: Iterable, apex) -> SimplicialComplex:
    """Glue the simplex on ``facet + {apex}`` onto ``cx``, replacing ``facet``."""
    F = _vset(facet)
    x0 = _index(apex)
    if F not in cx.facets:
        raise ComplexError(f"{_fmt_face(F)} is not a facet")
    if x0 in cx.vertices:
        raise ComplexError(f"apex x{x0} is already a vertex")
    facets = [f for f in cx.facets if f != F] + [F | {x0}]
    return SimplicialComplex(list(cx.vertices) + [x0], facets)


def cycle_complex(n: int, start: int = 1) -> SimplicialComplex:
    """The n-cycle on ``x_start, ..., x_{start+n-1}``."""
    if n < 3:
        raise ComplexError("a cycle needs at least 3 vertices")
    vs = list(range(start, start + n))
    return SimplicialComplex(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])
