import json
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from conftest import monomials, polynomials
from srara.groebner import (
    CertificateNotFound,
    TermOrder,
    buchberger,
    certify_ara,
    compare_characteristics,
    flag_characteristic,
    ideal_member,
    normal_form,
    radical_certificate,
    radical_member,
    verify_up_to_radical,
)
from srara.monomial import Monomial, MonomialIdeal, divides, ideal_contains
from srara.polyring import Polynomial
from srara.simplicial import cycle_complex, stanley_reisner_ideal
from srara.witness import WitnessSet, cycle5_witness, example4_witness, family_witness

P = Polynomial.parse
I_C5 = stanley_reisner_ideal(cycle_complex(5))
C5_GENS = [Polynomial.from_monomial(g) for g in I_C5.generators]
LEX_321 = TermOrder("lex", (3, 2, 1))


def test_term_order_basics():
    o = TermOrder()
    assert o.key(Monomial.parse("x1^2")) > o.key(Monomial.parse("x5"))
    # degrevlex: the smallest variable is the most penalized
    assert o.key(Monomial.parse("x1*x3"), [1, 2, 3]) < o.key(Monomial.parse("x2^2"), [1, 2, 3])
    lex = TermOrder("lex")
    assert lex.key(Monomial.parse("x2"), [1, 2]) > lex.key(Monomial.parse("x1^5"), [1, 2])
    with pytest.raises(ValueError):
        TermOrder("revlex")
    with pytest.raises(ValueError):
        TermOrder("lex", (1, 1))
    assert TermOrder.parse(" DegLex ").kind == "deglex"


def test_monomial_input_is_its_own_basis():
    gb = buchberger([P("x1*x3"), P("x1*x3*x5"), P("x2*x4")])
    assert set(gb.generators) == {P("x1*x3"), P("x2*x4")}


def test_linear_elimination_under_lex():
    gb = buchberger([P("x1 - x2"), P("x2 - x3")], LEX_321)
    assert set(gb.generators) == {P("x1 - x3"), P("x2 - x3")}


def test_normal_form_examples():
    gb = buchberger(C5_GENS)
    assert normal_form(P("x1*x2"), gb) == P("x1*x2")
    assert not ideal_contains(P("x1*x2"), I_C5)
    assert normal_form(Polynomial.zero(), gb).is_zero()
    for g in C5_GENS:
        assert normal_form(g, gb).is_zero()
    with pytest.raises(ValueError):
        normal_form(P("x1"), [Polynomial.zero()])


def test_normal_form_by_list_has_exact_rationals():
    r = normal_form(P("x1^2*x3 + 2*x1*x2"), [P("3*x2 - 5")], TermOrder("lex"))
    assert r == P("x1^2*x3 + 10/3*x1")


def test_unit_ideal_and_stop_on_unit():
    gb = buchberger([P("x1*x2 - 1"), P("x1")])
    assert gb.is_unit() and gb.generators == [Polynomial.one()]
    assert buchberger([P("x1*x2 - 1"), P("x2")], stop_on_unit=True).is_unit()


def test_large_exponents_trigger_wider_packing():
    gb = buchberger([P("x1^70000 - x2"), P("x2^3 - x1")])
    assert gb.contains(P("x1^70000 - x2"))
    assert normal_form(P("x1^100000*x2"), [P("x1^99999 - 1")]) == P("x1*x2")
    # under lex x2 outranks any power of x1, so the monic element leads with x2
    assert buchberger([P("x1^70000 - x2")], TermOrder("lex")).generators == [P("x2 - x1^70000")]


def test_basis_is_deterministic():
    a = buchberger(family_witness(6).elements)
    b = buchberger(family_witness(6).elements)
    assert a.generators == b.generators and a.source_hash == b.source_hash


# ---------------------------------------------------------------------------
# oracle: sympy


def _to_sympy(f, syms):
    return sum(
        sympy.Rational(c.numerator, c.denominator) * sympy.Mul(*[syms[v] ** e for v, e in m.exponents])
        for m, c in f.terms()
    )


def _from_sympy(expr, syms):
    poly = sympy.Poly(expr, *syms.values())
    idx = list(syms)
    return Polynomial(
        (Monomial(zip(idx, ex)), Fraction(int(c.p), int(c.q))) for ex, c in poly.terms()
    )


def _sympy_basis(gens, kind, nvars):
    syms = {v: sympy.Symbol(f"x{v}") for v in range(nvars, 0, -1)}
    sym_order = {"degrevlex": "grevlex", "lex": "lex", "deglex": "grlex"}[kind]
    G = sympy.groebner([_to_sympy(g, syms) for g in gens], *syms.values(), order=sym_order)
    return [_from_sympy(g, syms) for g in G.exprs]


@settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(polynomials(4, 2, 3), min_size=1, max_size=3), st.sampled_from(["degrevlex", "deglex"]))
def test_graded_bases_match_sympy(gens, kind):
    gens = [g for g in gens if g]
    if not gens:
        return
    ours = buchberger(gens, TermOrder(kind, (1, 2, 3, 4)))
    theirs = _sympy_basis(gens, kind, 4)
    assert _normalize_set(ours.generators) == _normalize_set(theirs)


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.lists(polynomials(3, 2, 3), min_size=1, max_size=3))
def test_lex_bases_match_sympy(gens):
    gens = [g for g in gens if g]
    if not gens:
        return
    ours = buchberger(gens, TermOrder("lex", (1, 2, 3)))
    theirs = _sympy_basis(gens, "lex", 3)
    assert _normalize_set(ours.generators) == _normalize_set(theirs)


def _normalize_set(polys):
    # reduced bases are unique up to scaling; fix the scale by the content sign
    out = set()
    for f in polys:
        c = f.content()
        g = f.scale(1 / c) if c else f
        if g.terms() and g.terms()[0][1] < 0:
            g = -g
        out.add(g)
    return out


# ---------------------------------------------------------------------------
# membership properties


@settings(max_examples=60, deadline=None)
@given(st.lists(polynomials(3, 2, 3), min_size=1, max_size=3), polynomials(3, 2, 3))
def test_normal_form_postconditions(gens, f):
    gens = [g for g in gens if g]
    if not gens:
        return
    gb = buchberger(gens)
    r = gb.normal_form(f)
    lms = gb.leading_monomials()
    assert not any(divides(lm, m) for lm in lms for m in r.monomials())
    assert gb.contains(f - r)
    assert gb.contains(sum((g * h for g, h in zip(gens, [f, f * f, Polynomial.one()])), Polynomial.zero()))


@settings(max_examples=100, deadline=None)
@given(st.lists(monomials(4, 2), min_size=1, max_size=4), polynomials(4, 3, 4))
def test_membership_agrees_with_per_term_check(gens, f):
    ideal = MonomialIdeal(gens)
    polys = [Polynomial.from_monomial(g) for g in ideal.generators]
    assert ideal_member(f, polys) == ideal_contains(f, ideal)


def test_ideal_member_edge_cases():
    assert ideal_member(Polynomial.zero(), [])
    assert not ideal_member(P("x1"), [Polynomial.zero()])
    assert ideal_member(P("x1*x2 - x1"), [P("x2 - 1")])


# ---------------------------------------------------------------------------
# radical membership


def test_radical_member_basics():
    assert radical_member(P("x1"), [P("x1^3")])
    assert not ideal_member(P("x1"), [P("x1^3")])
    assert not radical_member(P("x2"), [P("x1^3")])
    cert = radical_certificate(P("x1*x2"), [P("x1^2*x2"), P("x1*x2^2")], explicit=True)
    assert cert.member and cert.power == 2
    with pytest.raises(CertificateNotFound):
        radical_member(P("x1"), [P("x1^9")], explicit=True, cap=4)
    with pytest.raises(ValueError):
        radical_certificate(Polynomial.zero(), [P("x1")])


def test_family6_rejects_an_outside_variable():
    J = family_witness(6).elements
    assert not radical_member(P("x6"), J)
    assert radical_member(P("x1*x3"), J)


# ---------------------------------------------------------------------------
# verification reports


def test_report_for_example4():
    ws, _ = example4_witness()
    report = verify_up_to_radical(ws, ara=True)
    assert report.certified and report.exit_code == 0
    assert report.ara == 4 and report.sci is True and report.height == 4
    assert all(r["status"] == "member" for r in report.radical)
    assert len(report.radical) == 9


def test_dropping_an_element_refutes():
    ws = family_witness(6).without(3)
    report = verify_up_to_radical(ws)
    assert report.verdict == "refuted" and report.exit_code == 1
    assert any("not in the radical" in f for f in report.failures)


def test_element_outside_target_refutes():
    ws = WitnessSet([P("x1*x3 + x1*x2")] + cycle5_witness().elements[1:], I_C5)
    report = verify_up_to_radical(ws)
    assert not report.inclusion_forward and report.verdict == "refuted"
    assert "x1*x2" in report.summary()


def test_ara_gap_is_inconclusive():
    ws = WitnessSet(cycle5_witness().elements + [P("x1*x4")], I_C5)
    report = certify_ara(ws)
    assert report.radical_equal and report.ara is None
    assert report.verdict == "inconclusive" and report.exit_code == 2
    assert (report.ara_lower, report.ara_upper) == (3, 4)
    assert verify_up_to_radical(ws).certified


def test_explicit_powers_and_cap():
    ws = WitnessSet([P("x1^3*x2^3")], MonomialIdeal(["x1*x2"]))
    r = verify_up_to_radical(ws, explicit_powers=True)
    assert r.certified and r.radical[0]["power"] == 3
    r = verify_up_to_radical(ws, explicit_powers=True, cap=2)
    assert r.verdict == "inconclusive"


def test_report_json_is_deterministic():
    a = verify_up_to_radical(family_witness(6), ara=True).to_json()
    b = verify_up_to_radical(family_witness(6), ara=True).to_json()
    assert a == b
    d = json.loads(a)
    assert d["verdict"] == "certified" and "timing" not in d
    assert "timing" in json.loads(verify_up_to_radical(family_witness(6)).to_json(include_timing=True))


def test_workers_do_not_change_the_report():
    ws = family_witness(6)
    assert verify_up_to_radical(ws, workers=2).to_json() == verify_up_to_radical(ws, workers=1).to_json()


def test_characteristic_comparison():
    out = compare_characteristics(family_witness(6))
    assert out == {"verdicts": {"q": "certified", "fp:2": "certified", "fp:3": "certified", "fp:5": "certified"},
                   "dependent": False}
    # x1^2 - x2^2 = (x1 - x2)(x1 + x2) is in J only mod 2
    ws = WitnessSet([P("x1^2 + x2^2"), P("x1*x2")], MonomialIdeal(["x1", "x2"]))
    r = flag_characteristic(verify_up_to_radical(ws, field="fp:2"), ws)
    assert r.characteristic["verdicts"]["q"] == "certified"


def test_characteristic_dependence_is_flagged():
    # x1 + x2 and x1 - x2 generate (x1, x2) unless 2 = 0
    ws = WitnessSet([P("x1 + x2"), P("x1 - x2")], MonomialIdeal(["x1", "x2"]))
    out = compare_characteristics(ws)
    assert out["dependent"] is True
    assert out["verdicts"]["fp:2"] == "refuted" and out["verdicts"]["q"] == "certified"
    r = flag_characteristic(verify_up_to_radical(ws, field="fp:2"), ws)
    assert r.characteristic["dependent"] and "characteristic" in r.summary()
