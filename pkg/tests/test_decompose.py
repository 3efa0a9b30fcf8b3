from collections import Counter
from fractions import Fraction

import pytest

from greenring import linalg as la
from greenring.decompose import (LOCAL, IdentificationFailure, alias_table, canonicalize, decompose,
                                 find_splitting_idempotent, fingerprint, hom_space, identify,
                                 is_indecomposable, iso_check, radical_codim, split_fully)
from greenring.hopf import build_algebra
from greenring.labels import Label, allowed_signs, format_label, parse_label
from greenring.modules import ModuleRep, band_module, build, direct_sum, sign_twist, tensor

L = parse_label


def counts(alg, a, b, seed=0):
    return decompose(tensor(build(L(a), alg), build(L(b), alg)), seed).counts()


def test_hom_space_of_simples():
    a, b = build(L("1"), "mabar"), build(L("S(+,-)"), "mabar")
    assert hom_space(a, a).dim == 1
    assert hom_space(a, b).dim == 0


def test_hom_elements_intertwine():
    m = build(L("M2"), "HH")
    n = tensor(build(L("M1"), "HH"), build(L("M1"), "HH"))
    hs = hom_space(m, n)
    assert hs.dim > 0
    for T in hs.matrices():
        for g in m.algebra.generators:
            assert T * m.actions[g] == n.actions[g] * T


def test_band_module_is_local():
    m = build(L("C(1,1)"), "mabar")
    assert find_splitting_idempotent(m) is LOCAL
    assert radical_codim(m) == 1


def test_pp_splits():
    m = tensor(build(L("P"), "mabar"), build(L("P"), "mabar"))
    assert find_splitting_idempotent(m) is not LOCAL


@pytest.mark.parametrize("alg,a,b,expected", [
    ("mabar", "P", "P", {"P(+,+)": 2, "P(-,-)": 2}),
    ("mabar", "M2", "W2", {"P(+,+)": 6, "S(-,-)": 1}),
    ("mabar", "C(1,2)", "C(1,3)", {"P(+,+)": 1}),
    ("mabar", "M1", "M1", {"P(+,+)": 1, "M2_--": 1}),
    ("HH", "C(1,2)", "C(1,2)", {"P(+,+)": 1, "P(-,-)": 1, "C(1,2)": 1, "C(1,2)_+-": 1}),
    ("HH", "N2", "N'3", {"P(+,+)": 3, "P(-,-)": 3}),
    ("DH4", "P+", "P+", {"P(-,-)": 1}),
    ("DH4", "M1", "P+", {"P(+,-)": 1, "P(-,+)": 2}),
])
def test_decompose_examples(alg, a, b, expected):
    got = {format_label(k): v for k, v in counts(alg, a, b).items()}
    assert got == expected


def test_decomposition_json_and_dims():
    d = decompose(tensor(build(L("W2"), "HH"), build(L("N3"), "HH")), seed=3, input="W2*N3")
    assert d.dims_ok()
    js = d.to_json()
    assert js["seed"] == 3 and js["input"] == "W2*N3"
    assert sum(1 for _ in js["summands"]) == len(d.summands)


def test_zero_module():
    h = build_algebra("mabar")
    z = ModuleRep(h, {g: la.zeros(0, 0) for g in h.generators})
    assert decompose(z).summands == ()


def test_split_pieces_reassemble():
    m = tensor(build(L("M1"), "mabar"), build(L("W2"), "mabar"))
    pieces = split_fully(m)
    assert sum(p.dim for p, _ in pieces) == m.dim
    assert iso_check(direct_sum([p for p, _ in pieces]), m)
    assert all(is_indecomposable(p) for p, _ in pieces)


@pytest.mark.parametrize("alg", ["mabar", "DH4", "HH"])
def test_identify_round_trip(alg):
    for r in range(1, 7):
        for fam in ("M", "W", "N", "Nprime"):
            for s in allowed_signs(alg, fam):
                lab = canonicalize(Label(fam, r, s), alg)
                assert identify(build(lab, alg)) == lab
        for eta in (1, 2, -1, Fraction(1, 2)):
            for s in allowed_signs(alg, "C"):
                lab = canonicalize(Label("C", r, s, Fraction(eta)), alg)
                assert identify(build(lab, alg)) == lab
    for fam in ("S", "P"):
        for s in allowed_signs(alg, fam):
            lab = canonicalize(Label(fam, 0, s), alg)
            assert identify(build(lab, alg)) == lab


def test_identify_examples():
    assert identify(band_module(build_algebra("mabar"), 2, 5)) == L("C(2,5)")
    twisted = sign_twist(build(L("C(1,1)"), "HH"), (1, -1))
    assert identify(twisted) == L("C(1,1)_+-") != L("C(1,1)")


def test_identify_rejects_decomposable():
    m = direct_sum([build(L("M1"), "mabar"), build(L("W1"), "mabar")])
    with pytest.raises(IdentificationFailure):
        identify(m)


def test_iso_check_examples():
    assert iso_check(build(L("M1"), "mabar"), build(L("M1"), "mabar"))
    assert not iso_check(build(L("N1"), "mabar"), build(L("N'1"), "mabar"))
    assert not iso_check(build(L("C(1,1)"), "mabar"), build(L("C(1,-1)"), "mabar"))


def test_fingerprints_separate_n_and_nprime():
    a, b = fingerprint(build(L("N1"), "mabar")), fingerprint(build(L("N'1"), "mabar"))
    assert (a.x_rank, b.x_rank) == (1, 0)


def test_alias_tables():
    assert alias_table("HH")["C"] == frozenset({(1, 1), (-1, -1)})
    for alg in ("mabar", "DH4", "HH"):
        for fam, stab in alias_table(alg).items():
            if (alg, fam) != ("HH", "C"):
                assert stab == frozenset({(1, 1)}), (alg, fam)


def test_canonicalize_examples():
    assert canonicalize(L("C(2,3)_--"), "HH") == L("C(2,3)")
    assert canonicalize(L("C(2,3)_-+"), "HH") == L("C(2,3)_+-")
    assert canonicalize(L("M1"), "mabar") == L("M1")
    assert canonicalize(L("C(2,3)_--"), "mabar") == L("C(2,3)_--")


@pytest.mark.parametrize("alg,a,b", [("mabar", "C(2,1)", "C(2,1)"), ("HH", "N2", "N3"), ("DH4", "W2", "M3")])
def test_seed_independence(alg, a, b):
    base = counts(alg, a, b, 0)
    assert all(counts(alg, a, b, s) == base for s in (1, 2, 3, 4))
    assert isinstance(base, Counter)
