from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rigid_newton.errors import NotNormalized
from rigid_newton.galois import coxeter_action, inversion_action, swap_action
from rigid_newton.newton import (
    TorsionCocharacter,
    alcove_normalize,
    apply_affine_word,
    centralizer_roots,
    facet_indices,
    gamma_centralizer,
    in_closed_alcove,
    newton_invariant,
)
from rigid_newton.rootdata import Subsystem, base_and_highest, build_root_datum, parse_datum, weyl_group

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def test_torsion_reduction():
    nu = TorsionCocharacter.from_vector([Fraction(5, 2), Fraction(-1, 3)])
    assert nu.coordinates == (Fraction(1, 2), Fraction(2, 3))
    assert nu.denominator == 6
    assert nu.numerators() == (3, 4)
    with pytest.raises(ValueError):
        nu.numerators(4)
    assert str(nu) == "1/2,2/3"


def test_sl2_alcove_example():
    sl2 = build_root_datum("A", 1)
    form = alcove_normalize(sl2, base_and_highest(sl2), [Fraction(5, 2)])
    assert form.point == (Fraction(1, 2),)
    assert form.affine_word == ((0, 1), (0, 0), (0, 1), (0, 0))
    # pairing 1 with α: the point is the vertex -1, on both walls
    assert form.facet_indices == (0, 1)
    interior = alcove_normalize(sl2, base_and_highest(sl2), [Fraction(-3, 4)])
    assert interior.point == (Fraction(1, 4),) and interior.facet_indices == ()


def test_facet_requires_normalized_point():
    sl2 = build_root_datum("A", 1)
    with pytest.raises(NotNormalized):
        facet_indices(sl2, base_and_highest(sl2), [Fraction(3, 2)])


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A1+T1"])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_alcove_properties(name, data):
    d = parse_datum(name)
    base = base_and_highest(d)
    y = data.draw(st.lists(rationals, min_size=d.rank, max_size=d.rank))
    form = alcove_normalize(d, base, y)
    assert in_closed_alcove(d, base, form.point)
    assert apply_affine_word(d, form.affine_word, y) == form.point
    again = alcove_normalize(d, base, form.point)
    assert again.point == form.point and again.affine_word == ()


def test_g2_centralizer():
    g2 = build_root_datum("G", 2)
    rep = gamma_centralizer(g2, [Fraction(1, 2), 0], inversion_action(g2))
    assert rep.single_centralizer == Subsystem((1, 3, 7, 9))
    assert rep.type_gamma.label == "A1xA1"
    assert rep.is_cyclic_witness and not rep.is_levi_regular


@pytest.mark.parametrize("k,label", [(0, "A1"), (1, "T1"), (2, "A1"), (3, "T1")])
def test_sl2_quarter_sweep(k, label):
    sl2 = build_root_datum("A", 1)
    rep = gamma_centralizer(sl2, TorsionCocharacter.from_numerators([k], 4), inversion_action(sl2))
    assert rep.type_gamma.label == label


def test_gamma_centralizer_can_be_smaller():
    # under the diagram swap of A2, ν and its image have different centralizers
    a2 = build_root_datum("A", 2)
    nu = TorsionCocharacter.from_vector([Fraction(1, 2), 0])
    rep = gamma_centralizer(a2, nu, swap_action(a2, 0, 1))
    assert set(rep.gamma_centralizer.root_indices) < set(rep.single_centralizer.root_indices)
    assert not rep.is_cyclic_witness


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_weyl_equivariance(name, data):
    d = parse_datum(name)
    W = weyl_group(d)
    w = W[data.draw(st.integers(0, len(W) - 1))]
    nu = data.draw(st.lists(st.fractions(0, 1, max_denominator=6), min_size=d.rank, max_size=d.rank))
    moved = centralizer_roots(d, w @ tuple(nu))
    assert moved == centralizer_roots(d, nu).image(d.root_permutation(w))


def test_newton_invariant_is_conjugation_stable():
    g2 = build_root_datum("G", 2)
    base = base_and_highest(g2)
    act = coxeter_action(g2)
    nu = TorsionCocharacter.from_vector([Fraction(1, 3), Fraction(1, 6)])
    ref_form, ref_rep = newton_invariant(g2, base, nu, act)
    for w in weyl_group(g2):
        form, rep = newton_invariant(g2, base, nu.transform(w), act)
        assert form.point == ref_form.point
        assert rep.type_single == ref_rep.type_single
