from fractions import Fraction

import pytest

from greenring.decompose import iso_check
from greenring.hopf import build_algebra
from greenring.labels import SIGNS, Label, allowed_signs, label_dim
from greenring.modules import (band_module, build, direct_sum, module_from_json, projective,
                               regular_module, sign_twist, simple, string_module, tensor,
                               validate_module)

ALGS = ("mabar", "DH4", "HH")


def sample_labels(alg, max_rank=3):
    out = [Label("S", 0, s) for s in allowed_signs(alg, "S")]
    out += [Label("P", 0, s) for s in allowed_signs(alg, "P")]
    for r in range(1, max_rank + 1):
        for fam in ("M", "W", "N", "Nprime"):
            out += [Label(fam, r, s) for s in allowed_signs(alg, fam)]
        for eta in (1, -1, Fraction(1, 2)):
            out += [Label("C", r, s, Fraction(eta)) for s in allowed_signs(alg, "C")]
    return out


@pytest.mark.parametrize("alg", ALGS)
def test_every_constructor_gives_a_valid_module(alg):
    for lab in sample_labels(alg):
        m = build(lab, alg)
        rep = validate_module(m)
        assert all(rep.values()), (lab, rep)
        assert m.dim == label_dim(lab, alg)


@pytest.mark.parametrize("alg", ALGS)
def test_tensor_is_valid_and_multiplies_dims(alg):
    a, b = build(Label("M", 2), alg), build(Label("C", 1, (1, 1), Fraction(2)), alg)
    t = tensor(a, b)
    assert t.dim == a.dim * b.dim
    assert all(validate_module(t).values())


def test_simple_modules_weights():
    h = build_algebra("mabar")
    for s in SIGNS:
        m = simple(h, s)
        assert m.dim == 1 and m.weights() == [s]


def test_dh4_has_no_mixed_one_dimensional_modules():
    with pytest.raises(ValueError):
        simple(build_algebra("DH4"), (1, -1))


def test_regular_module_is_sum_of_projectives():
    h = build_algebra("mabar")
    reg = regular_module(h)
    ps = direct_sum([projective(h, s) for s in SIGNS])
    assert iso_check(reg, ps)


def test_sign_twist_matches_label_twist():
    for alg in ("mabar", "HH"):
        for s in SIGNS:
            m = sign_twist(build(Label("W", 2), alg), s)
            assert iso_check(m, build(Label("W", 2, s), alg))


def test_twisting_by_simple_is_tensoring():
    h = build_algebra("HH")
    m = build(Label("N", 2), h)
    assert iso_check(tensor(m, simple(h, (1, -1))), sign_twist(m, (1, -1)))


def test_json_round_trip():
    m = build(Label("C", 2, (1, -1), Fraction(3)), "mabar")
    n = module_from_json(m.to_json())
    assert n.actions == m.actions and n.dim == m.dim


def test_dot_conventions():
    dot = build(Label("P"), "mabar").to_dot("P")
    assert dot.count("->") == 4
    assert dot.count('label="-1"') == 1
    assert "dashed" in dot and "solid" in dot
    assert "->" not in build(Label("S", 0, (1, 1)), "mabar").to_dot("one")


def test_rank_must_be_positive():
    with pytest.raises(ValueError):
        string_module(build_algebra("mabar"), "M", 0)
    with pytest.raises(ValueError):
        band_module(build_algebra("mabar"), 1, 0)
