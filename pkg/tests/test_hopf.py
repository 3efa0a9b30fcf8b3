import pytest

from greenring.hopf import (ALGEBRA_NAMES, build_algebra, center_basis, central_idempotents,
                            check_hopf_axioms, check_skew_pairing, cocycle_twist, ext_quiver,
                            hopf_isomorphism_report, jacobson_radical, make_cocycle,
                            standard_idempotents, standard_pairing, pairing_to_cocycle,
                            search_generator_images, sigma1, sigma_alpha, tensor_algebra,
                            trivial_cocycle, verify_cocycle, verify_cocycle_report,
                            verify_idempotent_system)


@pytest.mark.parametrize("name", ALGEBRA_NAMES)
def test_hopf_axioms(name):
    rep = check_hopf_axioms(build_algebra(name))
    assert all(rep.values()), rep


@pytest.mark.parametrize("name,dim", [("H4", 4), ("mabar", 16), ("DH4", 16), ("HH", 16)])
def test_dimensions(name, dim):
    assert build_algebra(name).dim == dim


def test_h4_antipode_on_b():
    h = build_algebra("H4")
    b, a = h.gen("b"), h.gen("a")
    assert h.el(h.S(b.v)) == -(a * b)


def test_presentation_relations_hold():
    h = build_algebra("mabar")
    g, hh, x, y = (h.gen(c) for c in "ghxy")
    assert (g * g) == h.one() and (hh * hh) == h.one()
    assert x * x == 0 * x and y * y == 0 * y
    assert x * y == -(y * x)
    d = build_algebra("DH4")
    g, hh, x, y = (d.gen(c) for c in "ghxy")
    assert x * y + y * x == d.one() - g * hh


def test_trivial_cocycle_twist_is_identity():
    h = build_algebra("mabar")
    t = cocycle_twist(h, trivial_cocycle(h))
    assert t.mult == h.mult and t.antipode == h.antipode


def test_all_ones_form_is_not_a_cocycle():
    h = build_algebra("H4")
    rep = verify_cocycle_report(h, make_cocycle(h, [[1] * 4 for _ in range(4)]))
    assert not all(rep.values())


def test_sigma1_twist_matches_hh():
    m = build_algebra("mabar")
    s = sigma1(m)
    assert verify_cocycle(m, s)
    tw = cocycle_twist(m, s)
    assert all(check_hopf_axioms(tw).values())
    assert search_generator_images(tw, build_algebra("HH")) is not None


def test_sigma2_and_phi():
    h4 = build_algebra("H4")
    t = tensor_algebra(h4, h4)
    p = standard_pairing(h4)
    assert all(check_skew_pairing(p).values())
    s2 = pairing_to_cocycle(p, t)
    assert verify_cocycle(t, s2)
    dh4 = build_algebra("DH4")
    phi = {"a1": dh4.generators["g"], "b1": dh4.generators["x"],
           "a2": dh4.generators["h"], "b2": dh4.generators["y"]}
    rep = hopf_isomorphism_report(cocycle_twist(t, s2), dh4, phi)
    assert all(rep.values()), rep


def test_pairing_with_positive_aa_fails_the_laws():
    assert not all(check_skew_pairing(standard_pairing(build_algebra("H4"), a_sign=1)).values())


@pytest.mark.parametrize("alpha", [0, 1, 5])
def test_sigma_alpha_gives_opposite_algebra(alpha):
    h = build_algebra("H4")
    s = sigma_alpha(h, alpha)
    assert verify_cocycle(h, s)
    tw = cocycle_twist(h, s)
    assert all(tw.mult[i][j] == h.mult[j][i] for i in range(4) for j in range(4))


def test_standard_idempotent_systems():
    for name in ("mabar", "DH4"):
        for key, system in standard_idempotents(build_algebra(name)).items():
            rep = verify_idempotent_system(system, key == "e")
            assert all(rep.values()), (name, key, rep)


@pytest.mark.parametrize("name,blocks", [("mabar", 2), ("DH4", 3), ("HH", 1), ("H4", 1)])
def test_block_counts(name, blocks):
    h = build_algebra(name)
    c = central_idempotents(h)
    assert len(c.elements) == blocks
    rep = verify_idempotent_system(c, require_primitive=False)
    assert all(rep.values())


def test_center_contains_unit():
    h = build_algebra("HH")
    assert any(z == h.one() or z.v for z in center_basis(h))


@pytest.mark.parametrize("name,rad_dim", [("mabar", 12), ("HH", 12), ("DH4", 6), ("H4", 2)])
def test_radical_dimension(name, rad_dim):
    # basic with 4 one-dim simples: 16 - 4; DH4: 8-dim basic block with 2 simples plus two matrix blocks
    assert len(jacobson_radical(build_algebra(name))) == rad_dim


def test_quivers():
    assert ext_quiver(build_algebra("mabar")).arrows == [[0, 0, 0, 2], [0, 0, 2, 0], [0, 2, 0, 0], [2, 0, 0, 0]]
    assert ext_quiver(build_algebra("HH")).arrows == [[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]]
    assert ext_quiver(build_algebra("DH4")).arrows == [[0, 2, 0, 0], [2, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]
    assert ext_quiver(build_algebra("H4")).arrows == [[0, 1], [1, 0]]
