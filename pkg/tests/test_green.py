from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from greenring.green import (DERIVED_RULES, HH_LITERAL_ERRATUM, GreenElement, Generators,
                             associativity_probe, complement_idempotents, element, nilpotency_index,
                             noncommutativity_witness, product_bruteforce, product_closed,
                             radical_generators, stable_quotient, verify_alternating_idempotents)
from greenring.decompose import canonicalize
from greenring.labels import Label, allowed_signs, label_dim, parse_label

L = parse_label


def test_mabar_mw():
    g = Generators("mabar")
    assert g.M * g.W == 2 * g.P + g.S


def test_dh4_pplus_squared():
    g = Generators("DH4")
    assert g.Pp * g.Pp == g.S * g.P


def test_hh_n2_nprime3():
    g = Generators("HH")
    assert g.N(2) * g.Np(3) == 3 * g.P + 3 * g.S * g.P


def test_bruteforce_pp():
    assert product_bruteforce("mabar", L("P"), L("P")) == GreenElement("mabar", {"P": 2, "P(-,-)": 2})


def test_bruteforce_hh_band_square():
    got = product_bruteforce("HH", L("C(1,2)"), L("C(1,2)"))
    assert got == GreenElement("HH", {"P": 1, "P(-,-)": 1, "C(1,2)": 1, "C(1,2)_+-": 1})


@pytest.mark.parametrize("alg", ["mabar", "DH4", "HH"])
@pytest.mark.parametrize("text", ["M2", "W1_+-", "N3", "C(2,-1)", "P(-,-)", "S(-,-)"])
def test_unit(alg, text):
    lab = canonicalize(L(text), alg)
    if lab.signs not in allowed_signs(alg, lab.family):
        with pytest.raises(ValueError):
            product_bruteforce(alg, L("1"), lab)
        return
    x = element(alg, lab)
    one = GreenElement.one(alg)
    assert one * x == x == x * one
    assert product_bruteforce(alg, L("1"), lab) == x


@pytest.mark.parametrize("alg", ["mabar", "DH4", "HH"])
def test_simple_squares(alg):
    g = Generators(alg)
    assert g.S * g.S == g.one
    if alg != "DH4":
        assert g.Sm * g.Sm == g.one


def test_mabar_twist_order_matters():
    w = noncommutativity_witness("mabar")
    assert w is not None and w[2] != w[3]
    g = Generators("mabar")
    c = g.C(1, 1)
    assert g.Sm * c == g.C(1, -1) * g.Sm
    assert g.Sm * c != c * g.Sm


def _labels(alg):
    fams = st.sampled_from(["S", "P", "M", "W", "N", "Nprime", "C"])

    @st.composite
    def lab(draw):
        f = draw(fams)
        s = draw(st.sampled_from(sorted(allowed_signs(alg, f))))
        r = 0 if f in ("S", "P") else draw(st.integers(1, 5))
        eta = Fraction(draw(st.sampled_from([1, 2, -1, 3]))) if f == "C" else None
        return canonicalize(Label(f, r, s, eta), alg)
    return lab()


@pytest.mark.parametrize("alg", ["mabar", "DH4", "HH"])
def test_dimension_homomorphism(alg):
    @settings(max_examples=60, deadline=None)
    @given(_labels(alg), _labels(alg))
    def check(a, b):
        prod = product_closed(alg, a, b)
        assert prod.dim() == label_dim(a, alg) * label_dim(b, alg)
        sa, sb = stable_quotient(element(alg, a)), stable_quotient(element(alg, b))
        assert stable_quotient(prod) == stable_quotient(sa * sb)
    check()


@pytest.mark.parametrize("alg,pairs", [("mabar", [("M2", "N'3"), ("C(2,1)_+-", "W1")]),
                                       ("HH", [("C(1,-1)", "N2"), ("W2_-+", "M3")]),
                                       ("DH4", [("P+", "N2"), ("C(1,2)", "C(1,2)")])])
def test_bruteforce_dimensions(alg, pairs):
    for a, b in pairs:
        a, b = L(a), L(b)
        assert product_bruteforce(alg, a, b).dim() == label_dim(a, alg) * label_dim(b, alg)
        assert product_bruteforce(alg, a, b) == product_closed(alg, a, b)


def test_stable_examples():
    g = Generators("mabar")
    assert stable_quotient(2 * g.P + g.S) == g.S
    assert stable_quotient(Generators("DH4").Pp).is_zero()
    assert stable_quotient(g.M * g.W) == g.S


def test_radical_example_mabar():
    g = Generators("mabar")
    x = (g.S - 1) * g.N(2)
    assert x * x == (2 - 2 * g.S) * (4 - 2) * g.P
    assert (x ** 4).is_zero()
    assert nilpotency_index(x) is not None


def test_radical_generators_nilpotent():
    for alg in ("mabar", "DH4", "HH"):
        for name, x in radical_generators(alg, 3):
            assert nilpotency_index(x) is not None, (alg, name)


def test_complement_idempotents_mabar():
    g = Generators("mabar")
    e = (1 + g.S) * g.P / 8
    assert e * e == e
    for _, e in complement_idempotents("mabar"):
        assert e * e == e


def test_alternating_examples():
    cases = {c.key: c for c in verify_alternating_idempotents(3)}
    assert cases and all(c.passed for c in cases.values())


def test_literal_erratum_breaks_dimensions():
    # rs(1+S)P has dimension 8rs while N_r N'_s has dimension 4rs
    r, s = 2, 3
    g = Generators("HH")
    literal = r * s * (1 + g.S) * g.P
    assert literal.dim() != (g.N(r) * g.Np(s)).dim()
    assert HH_LITERAL_ERRATUM


def test_derived_rules_flagged():
    assert set(DERIVED_RULES) and all(isinstance(v, str) for v in DERIVED_RULES.values())


def test_associativity_sample():
    assert all(c.passed for c in associativity_probe("DH4", [L("S(-,-)"), L("P+"), L("M1"), L("N1"), L("C(1,2)")]))


def test_element_json_and_str():
    x = 2 * Generators("mabar").P + Generators("mabar").S
    assert str(x) == "S(-,-) + 2·P(+,+)"
    assert x.to_json() == {"algebra": "mabar", "terms": [{"label": "S(-,-)", "coeff": "1"},
                                                           {"label": "P(+,+)", "coeff": "2"}]}
    with pytest.raises(ValueError):
        x + Generators("HH").P
