from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from oracles import box, cyclic_product_profile, quotient_order_profile, rank1_integer_kernel, span_mod
from rigid_newton.errors import NotElliptic, NotLevi, NotStable, TooLarge
from rigid_newton.galois import (
    build_action,
    coxeter_action,
    inversion_action,
    norm_and_augmentation,
    swap_action,
    trivial_action,
)
from rigid_newton.linalg import IntMatrix
from rigid_newton.newton import TorsionCocharacter
from rigid_newton.rootdata import Subsystem, build_root_datum, full_system, levi_subsystems, parse_datum, torus
from rigid_newton.tate_nakayama import (
    band_image_contains,
    central_torsion_count,
    group_order,
    levi_suitable_characters,
    realize_twisted_levi,
    tn_group_torus,
)


def builtin_actions(d):
    out = {"trivial": trivial_action(d), "inversion": inversion_action(d)}
    if d.rank == 2:
        try:
            out["swap"] = swap_action(d, 0, 1)
        except ValueError:
            pass
    return out


def brute_tn_profile(rank, action, n):
    """ker N / I(nX) by enumeration inside (Z/E)^r with E = n|Γ|.

    |Γ| x = Σ (x - g x) for x ∈ ker N, so E·ker N lies in I(nX); ker N is
    saturated, so ker N / E ker N embeds in (Z/E)^r.
    """
    norm = IntMatrix.zeros(rank, rank)
    for g in action.elements:
        norm = norm + g
    kernel = rank1_integer_kernel(norm.to_rows(), rank)
    E = n * action.order
    rels = [tuple(n * (x - y) for x, y in zip(g.column(i), IntMatrix.identity(rank).column(i)))
            for g in action.elements for i in range(rank)]
    big = span_mod(kernel, E, rank)
    small = span_mod(rels, E, rank)
    return quotient_order_profile(big, small, E)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("name", ["torus:1", "torus:2", "A2", "A1+A1", "B2", "G2"])
def test_tn_group_matches_enumeration(name, n):
    d = parse_datum(name)
    for label, act in builtin_actions(d).items():
        res = tn_group_torus(d.rank, act, n)
        assert cyclic_product_profile(res.group.invariant_factors) == brute_tn_profile(d.rank, act, n), label


def test_norm_one_torus():
    res = tn_group_torus(1, inversion_action(torus(1)), 2)
    assert res.group.invariant_factors == (4,)
    assert group_order(res) == 4
    assert tn_group_torus(1, trivial_action(torus(1)), 2).group.invariant_factors == ()
    assert tn_group_torus(2, swap_action(torus(2), 0, 1), 2).group.invariant_factors == (2,)


def brute_band_image(d, action, nu_num, n, bound=8):
    norm, _ = norm_and_augmentation(action)
    for y in box(d.rank, bound):
        lam = tuple(k + n * t for k, t in zip(nu_num, y))
        if not any(norm @ lam):
            return True
    return False


@pytest.mark.parametrize("n", [2, 3, 5, 6])
@pytest.mark.parametrize("name", ["torus:1", "torus:2", "A1", "A2", "A1+A1", "G2"])
def test_band_image_matches_witness_search(name, n):
    d = parse_datum(name)
    for act in builtin_actions(d).values():
        for k in product(range(n), repeat=d.rank):
            ok, lam = band_image_contains(d, act, TorsionCocharacter.from_numerators(k, n), n)
            assert ok == brute_band_image(d, act, k, n)
            if ok:
                norm, _ = norm_and_augmentation(act)
                assert not any(norm @ lam)
                assert all((a - b) % n == 0 for a, b in zip(lam, k))


@pytest.mark.parametrize("name", ["G2", "B2", "A2", "A3"])
def test_realize_every_stable_levi(name):
    d = parse_datum(name)
    for act in (inversion_action(d), coxeter_action(d)):
        for levi in levi_subsystems(d):
            if not act.stabilizes(levi):
                continue
            lam = _generic_cocharacter(d, levi)
            r = realize_twisted_levi(d, act, lam)
            assert r.report.gamma_centralizer == levi
            assert r.levi == levi


def _generic_cocharacter(d, levi):
    """Integral λ whose centralizer is exactly ``levi``."""
    for lam in box(d.rank, 4):
        if Subsystem.of(i for i in range(len(d.roots)) if d.pairing(lam, i) == 0) == levi:
            return lam
    raise AssertionError("no generic cocharacter found in the search box")


def test_realize_rejects_non_central_norm():
    a2 = build_root_datum("A", 2)
    with pytest.raises(NotElliptic):
        realize_twisted_levi(a2, trivial_action(a2), (1, 0))


def test_realize_non_elliptic_with_central_norm():
    a2 = build_root_datum("A", 2)
    act = build_action(a2, [[[-1, 1], [0, 1]]])
    r = realize_twisted_levi(a2, act, (1, 0))
    assert r.level == 5 and r.mu == (2, 0)
    assert r.nu.coordinates == (Fraction(2, 5), Fraction(0))
    assert r.report.gamma_centralizer == Subsystem(())


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_levi_suitable_counts(name, n):
    d = parse_datum(name)
    act = inversion_action(d)
    for m in levi_subsystems(d):
        if not act.stabilizes(m):
            continue
        entries = levi_suitable_characters(d, m, act, n)
        assert len(entries) == central_torsion_count(d, m, n)
        keys = [e.nu.numerators(n) for e in entries]
        assert keys == sorted(keys)


def test_levi_suitable_g2_has_a_bad_character():
    g2 = build_root_datum("G", 2)
    entries = levi_suitable_characters(g2, Subsystem(()), inversion_action(g2), 2)
    bad = [e.nu.coordinates for e in entries if not e.levi_suitable]
    assert (Fraction(1, 2), Fraction(0)) in bad


def test_levi_suitable_errors():
    g2 = build_root_datum("G", 2)
    with pytest.raises(NotLevi):
        levi_suitable_characters(g2, Subsystem((1, 3, 7, 9)), inversion_action(g2), 2)
    a2 = build_root_datum("A", 2)
    with pytest.raises(NotStable):
        levi_suitable_characters(a2, Subsystem((0, 3)), swap_action(a2, 0, 1), 2)
    c4 = build_root_datum("C", 4)
    with pytest.raises(TooLarge):
        levi_suitable_characters(c4, full_system(c4), trivial_action(c4), 40)
