import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import monomials, polynomials, squarefree_monomials
from srara.monomial import ONE, Monomial, MonomialIdeal, Variable, divides, ideal_contains, minimalize
from srara.polyring import Polynomial

C5 = MonomialIdeal(["x1*x3", "x1*x4", "x2*x4", "x2*x5", "x3*x5"])


def M(s):
    return Monomial.parse(s)


def test_variable_name_and_parse():
    assert Variable(7).name == "x7"
    assert Variable.parse(" x12 ") == Variable(12)
    with pytest.raises(ValueError):
        Variable(-1)
    with pytest.raises(ValueError):
        Variable.parse("y1")


def test_divides_examples():
    assert divides(M("x1*x3"), M("x1^2*x3*x5"))
    assert divides(ONE, M("x4^7"))
    assert not divides(M("x2*x4"), M("x1*x4"))


def test_monomial_arithmetic():
    a, b = M("x1^2*x3"), M("x1*x2")
    assert str(a * b) == "x1^3*x2*x3"
    assert a.lcm(b) == M("x1^2*x2*x3")
    assert a.gcd(b) == M("x1")
    assert (a * b) / b == a
    with pytest.raises(ValueError):
        a / b
    assert a.substitute_squares() == M("x1^4*x3^2")
    assert a.radical() == M("x1*x3")
    assert a.degree == 3 and a.support == {1, 3}
    assert ONE.is_one() and str(ONE) == "1"


def test_zero_exponents_are_dropped():
    m = Monomial({1: 0, 2: 3})
    assert m.exponents == ((2, 3),)
    with pytest.raises(ValueError):
        Monomial({1: -1})


def test_big_exponents_are_exact():
    m = M("x1^123456789012345678901*x3")
    assert str(m * m) == "x1^246913578024691357802*x3^2"


@given(monomials())
def test_text_round_trip(m):
    assert Monomial.parse(str(m)) == m


@given(monomials(), monomials(), monomials())
def test_divides_is_a_partial_order(a, b, c):
    assert divides(a, a)
    if divides(a, b) and divides(b, a):
        assert a == b
    if divides(a, b) and divides(b, c):
        assert divides(a, c)


def test_minimalize_examples():
    assert minimalize([M("x1*x3"), M("x1*x3*x5")]) == {M("x1*x3")}
    assert minimalize([]) == frozenset()
    i6 = [M(s) for s in "x1*x3 x1*x4 x1*x5 x2*x4 x2*x5 x2*x6 x3*x5 x3*x6 x4*x6".split()]
    assert minimalize(i6) == set(i6)


@given(st.lists(monomials(4, 2), max_size=8), st.randoms())
def test_minimalize_idempotent_and_order_free(ms, rnd):
    once = minimalize(ms)
    assert minimalize(once) == once
    shuffled = list(ms)
    rnd.shuffle(shuffled)
    assert minimalize(shuffled) == once
    for g in once:
        assert not any(divides(h, g) for h in once if h != g)
    assert all(any(divides(g, m) for g in once) for m in ms)


def test_ideal_contains_examples():
    assert ideal_contains(Polynomial.parse("x1*x4 + x2*x5"), C5)
    assert ideal_contains(Polynomial.zero(), C5)
    assert ideal_contains(Polynomial.zero(), MonomialIdeal())
    assert not ideal_contains(Polynomial.parse("x1*x2"), C5)
    # exhaustive scan: x1*x2 is divisible by none of the generators
    assert not any(divides(g, M("x1*x2")) for g in C5.generators)


@given(st.lists(squarefree_monomials(5, 2), min_size=1, max_size=5), polynomials(5, 2), polynomials(5, 2), polynomials(5, 1))
def test_ideal_contains_closure(gens, f, g, h):
    ideal = MonomialIdeal(gens)
    if ideal_contains(f, ideal) and ideal_contains(g, ideal):
        assert ideal_contains(f + g, ideal)
    if ideal_contains(f, ideal):
        assert ideal_contains(h * f, ideal)


def test_monomial_ideal_basics():
    ideal = MonomialIdeal(["x1*x3", "x1*x3*x5", "x2*x4"])
    assert len(ideal) == 2
    assert ideal.is_squarefree()
    assert [str(g) for g in ideal] == ["x1*x3", "x2*x4"]
    assert ideal.witness_divisor(M("x1*x2*x3*x4")) == M("x1*x3")
    assert ideal.witness_divisor(M("x5")) is None
    assert ideal.support() == {1, 2, 3, 4}
    assert MonomialIdeal().is_zero()
    assert ideal + MonomialIdeal(["x1"]) == MonomialIdeal(["x1", "x2*x4"])
