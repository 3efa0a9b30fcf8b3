from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from greenring.labels import SIGNS, Label, format_label, label_dim, parse_label

signs = st.sampled_from(SIGNS)
ranked = st.builds(lambda f, r, s: Label(f, r, s), st.sampled_from(["M", "W", "N", "Nprime"]),
                   st.integers(1, 9), signs)
bands = st.builds(lambda r, e, s: Label("C", r, s, e), st.integers(1, 9),
                  st.fractions().filter(lambda x: x != 0), signs)
plain = st.builds(lambda f, s: Label(f, 0, s), st.sampled_from(["S", "P"]), signs)
labels = st.one_of(ranked, bands, plain)


@given(labels)
def test_format_parse_round_trip(lab):
    assert parse_label(format_label(lab)) == lab


@given(labels)
def test_json_round_trip(lab):
    assert Label.from_json(lab.to_json()) == lab


@pytest.mark.parametrize("text,label", [
    ("1", Label("S", 0, (1, 1))),
    ("S", Label("S", 0, (-1, -1))),
    ("P", Label("P", 0, (1, 1))),
    ("P+", Label("P", 0, (1, -1))),
    ("P-", Label("P", 0, (-1, 1))),
    ("M2_--", Label("M", 2, (-1, -1))),
    ("N'3_+-", Label("Nprime", 3, (1, -1))),
    ("C(1,1/2)_-+", Label("C", 1, (-1, 1), Fraction(1, 2))),
    ("C(2, −3)", Label("C", 2, (1, 1), Fraction(-3))),
])
def test_parse_examples(text, label):
    assert parse_label(text) == label


@pytest.mark.parametrize("bad", ["", "Q1", "M0", "C(1,0)", "S+", "M2_+", "C(1)"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        parse_label(bad)


def test_invalid_labels():
    with pytest.raises(ValueError):
        Label("C", 1)
    with pytest.raises(ValueError):
        Label("M", 0)
    with pytest.raises(ValueError):
        Label("P", 1)


def test_twist_composes():
    lab = Label("W", 2, (1, -1))
    assert lab.twist((1, -1)) == Label("W", 2)
    assert lab.twist((-1, -1)).twist((-1, -1)) == lab


@pytest.mark.parametrize("text,alg,dim", [
    ("M3", "mabar", 7), ("W2", "HH", 5), ("N4", "DH4", 8), ("C(2,1)", "mabar", 4),
    ("C(2,1)", "HH", 8), ("P", "HH", 4), ("P+", "DH4", 2), ("S", "mabar", 1),
])
def test_label_dims(text, alg, dim):
    assert label_dim(parse_label(text), alg) == dim
