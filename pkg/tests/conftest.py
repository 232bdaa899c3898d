import itertools
from fractions import Fraction

from hypothesis import strategies as st

from srara.monomial import Monomial
from srara.polyring import PolyMatrix, Polynomial
from srara.simplicial import SimplicialComplex


def monomials(nvars=5, max_exp=3):
    return st.lists(st.integers(0, max_exp), min_size=nvars, max_size=nvars).map(
        lambda es: Monomial((i + 1, e) for i, e in enumerate(es))
    )


def squarefree_monomials(nvars=5, min_deg=1):
    return st.sets(st.integers(1, nvars), min_size=min_deg, max_size=nvars).map(Monomial.squarefree)


coefficients = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def polynomials(nvars=4, max_exp=2, max_terms=4):
    return st.lists(st.tuples(monomials(nvars, max_exp), coefficients), max_size=max_terms).map(
        lambda ts: Polynomial(ts)
    )


@st.composite
def complexes(draw, max_vertices=7):
    n = draw(st.integers(2, max_vertices))
    verts = list(range(1, n + 1))
    faces = draw(st.lists(st.sets(st.sampled_from(verts), min_size=1), min_size=1, max_size=6))
    covered = set().union(*faces)
    faces += [{v} for v in verts if v not in covered]
    return SimplicialComplex(verts, faces)


def brute_minimal_nonfaces(cx):
    """All subsets of the vertex set, filtered naively."""
    faces = [set(f) for f in cx.facets]
    nonfaces = [
        frozenset(s)
        for k in range(1, len(cx.vertices) + 1)
        for s in itertools.combinations(cx.vertices, k)
        if not any(set(s) <= f for f in faces)
    ]
    return {s for s in nonfaces if not any(t < s for t in nonfaces)}


def permutation_determinant(M: PolyMatrix) -> Polynomial:
    """Leibniz formula."""
    n = M.rows
    total = Polynomial.zero()
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Polynomial.constant(Fraction((-1) ** inversions))
        for i in range(n):
            term = term * M[i, perm[i]]
        total = total + term
    return total
