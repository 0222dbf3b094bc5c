"""Executable worked examples.

Each case recomputes a handful of claims with the public API and compares
them exactly against the expected values.  Claims tagged ``shadow`` check a
computable consequence of a statement whose full content (group structure
over a field, octonions, Langlands parameters) is out of reach here; claims
tagged ``full`` check the statement itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Any, Callable

from . import fields
from .errors import UnknownCase
from .galois import build_action, inversion_action, is_elliptic, norm_and_augmentation, trivial_action
from .newton import TorsionCocharacter, gamma_centralizer
from .rootdata import (
    Subsystem,
    base_and_highest,
    build_root_datum,
    cartan_type_of,
    closed_subsystems_of_type,
    dual_datum,
    is_levi_subsystem,
    torus,
    weyl_group,
)
from .tate_nakayama import band_image_contains, realize_twisted_levi, tn_group_torus


@dataclass
class Claim:
    description: str
    expected: Any
    computed: Any
    kind: str = "full"

    @property
    def passed(self) -> bool:
        return self.expected == self.computed

    def to_dict(self) -> dict:
        return {"description": self.description, "expected": self.expected,
                "computed": self.computed, "pass": self.passed, "kind": self.kind}


@dataclass
class CaseReport:
    case_id: str
    claims: list[Claim]
    paper_anchor: str
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.claims)

    def to_dict(self) -> dict:
        return {"case_id": self.case_id, "claims": [c.to_dict() for c in self.claims],
                "paper_anchor": self.paper_anchor, "notes": list(self.notes), "pass": self.passed}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)


def _roots_in_simple_coords(datum, sub: Subsystem) -> list[list[int]]:
    base = base_and_highest(datum)
    return sorted(list(base.coefficients[i]) for i in sub.root_indices)


def case_g2_nonadm() -> CaseReport:
    g2 = build_root_datum("G", 2)
    base = base_and_highest(g2)
    sa, sb = base.simple_roots
    inv = inversion_action(g2)
    # ν pairs to 1/2 with the short simple root a and to 0 with b
    nu = TorsionCocharacter.from_vector([Fraction(1, 2), 0])
    report = gamma_centralizer(g2, nu, inv)
    claims = [
        Claim("Cartan integers <b^vee, a> = -1 and <a^vee, b> = -3 (a is short)",
              [-1, -3], [g2.pairing(g2.coroots[sb], sa), g2.pairing(g2.coroots[sa], sb)]),
        Claim("torus action by inversion is elliptic", True, is_elliptic(g2, inv)),
        Claim("alpha(s) = (-1)^(a-coefficient of alpha) for every root",
              True, all(
                  (g2.pairing(nu.coordinates, i).denominator == 1) == (base.coefficients[i][0] % 2 == 0)
                  for i in range(len(g2.roots)))),
        Claim("centralizer roots in (a, b) coefficients are ±b, ±(2a+b)",
              [[-2, -1], [0, -1], [0, 1], [2, 1]],
              _roots_in_simple_coords(g2, report.single_centralizer)),
        Claim("centralizer type", "A1xA1", report.type_single.label),
        Claim("Γ-centralizer equals the single centralizer (cyclic)", True, report.is_cyclic_witness),
        Claim("centralizer is a Levi subsystem", False, is_levi_subsystem(g2, report.single_centralizer)),
        Claim("Levi-regular verdict", False, report.is_levi_regular),
        Claim("ν lies in the band-restriction image", True, band_image_contains(g2, inv, nu)[0]),
    ]
    alt = gamma_centralizer(g2, TorsionCocharacter.from_vector([0, Fraction(1, 2)]), inv)
    notes = [
        "The example names the coweight of the long root but computes alpha(s) from the "
        "a-coefficient; we follow the computation (ν = half the short-root coweight).",
        f"Other reading (half the long-root coweight): roots {_roots_in_simple_coords(g2, alt.single_centralizer)}, "
        f"type {alt.type_single.label}, Levi {alt.is_levi_regular}.",
    ]
    return CaseReport("g2-nonadm", claims, "G2 anisotropic torus with a 2-torsion element whose "
                      "centralizer is SO4 and not a twisted Levi", notes)


def _sl3_res_torus_action(a2):
    # Galois swaps the two GL2 diagonal entries: on simple coroots this is s_1.
    return build_action(a2, [[[-1, 1], [0, 1]]])


def case_sl3_res_torus() -> CaseReport:
    a2 = build_root_datum("A", 2)
    act = _sl3_res_torus_action(a2)
    lam = (1, 0)  # alpha_1^vee: the cocharacter of the norm-one torus
    norm, _ = norm_and_augmentation(act)
    realized = realize_twisted_levi(a2, act, lam)
    n = realized.level
    nu = TorsionCocharacter.from_vector([Fraction(x, n) for x in lam])
    claims = [
        Claim("action has order 2", 2, act.order),
        Claim("torus is not elliptic in SL3", False, is_elliptic(a2, act)),
        Claim("λ is killed by the Galois norm", [0, 0], list(norm @ lam)),
        Claim("no root is orthogonal to λ (its centralizer is the torus)", [],
              [i for i in range(len(a2.roots)) if a2.pairing(lam, i) == 0]),
        Claim("λ/n lies in the band-restriction image", True, band_image_contains(a2, act, nu, n)[0]),
        Claim("Γ-centralizer of λ/n is the torus", [], list(gamma_centralizer(a2, nu, act).gamma_centralizer.root_indices)),
        Claim("Γ-centralizer of the realized ν is the torus", [],
              list(realized.report.gamma_centralizer.root_indices)),
    ]
    notes = [f"computed level n = {n}, ν = {realized.nu}",
             "realize_twisted_levi accepts this non-elliptic action because N(λ) = 0 is central."]
    return CaseReport("sl3-res-torus", claims, "SL3: Res_{K/F} G_m is a rigid Newton centralizer "
                      "without containing an elliptic maximal torus", notes)


def _sl2_quaternion_group():
    one, i = fields.Gaussian(1), fields.I
    z = fields.Gaussian(0)
    mats = [
        ((one, z), (z, one)), ((-one, z), (z, -one)), ((-i, z), (z, i)), ((i, z), (z, -i)),
        ((z, -one), (one, z)), ((z, one), (-one, z)), ((z, i), (i, z)), ((z, -i), (-i, z)),
    ]
    return mats


def case_sl2_quaternion_newton() -> CaseReport:
    sl2 = build_root_datum("A", 1)
    inv = inversion_action(sl2)
    pattern = []
    for k in range(4):
        rep = gamma_centralizer(sl2, TorsionCocharacter.from_numerators([k], 4), inv)
        pattern.append(rep.type_gamma.label)
    levi = [gamma_centralizer(sl2, TorsionCocharacter.from_numerators([k], 4), inv).is_levi_regular for k in range(4)]

    mats = _sl2_quaternion_group()
    # the listed S_phi^+ matrices; order 8 with a unique involution is Q8
    closed = all(fields.mobius_mul(a, b) in mats for a in mats for b in mats)
    minus_one = ((fields.Gaussian(-1), fields.Gaussian(0)), (fields.Gaussian(0), fields.Gaussian(-1)))
    identity = mats[0]
    involutions = [m for m in mats if m != identity and fields.mobius_mul(m, m) == identity]
    image = {fields.projective_normalize(m) for m in mats}
    image_exponent_two = all(
        fields.projective_normalize(fields.mobius_mul(m, m)) == fields.projective_normalize(identity) for m in mats
    )
    claims = [
        Claim("centralizer of k/4·α^vee for k = 0..3 (SL2 iff ±1)", ["A1", "T1", "A1", "T1"], pattern),
        Claim("every character is Levi-suitable", [True] * 4, levi),
        Claim("S_phi^+ is closed under multiplication", True, closed, "shadow"),
        Claim("|S_phi^+| = 8", 8, len(mats), "shadow"),
        Claim("S_phi^+ has a unique involution, namely -1 (quaternion group)", True, involutions == [minus_one], "shadow"),
        Claim("|S_phi| = |S_phi^+ / ±1| = 4", 4, len(image), "shadow"),
        Claim("S_phi has exponent 2 (Klein four group)", True, image_exponent_two, "shadow"),
    ]
    notes = ["The parameter φ itself is out of scope; the group orders are checked on the listed matrices."]
    return CaseReport("sl2-quaternion-newton", claims, "SL2 with a quadratic anisotropic torus: "
                      "centralizer is SL2 iff the root of unity is ±1", notes)


def derived_frobenius_on_augmentation() -> tuple[tuple[int, ...], ...]:
    """Matrix of a generator g of C3 on F2[C3]_0 in the basis (g - 1, g^2 - 1)."""
    # group ring elements as coefficient tuples on (1, g, g^2)
    basis = [(-1, 1, 0), (-1, 0, 1)]

    def times_g(v):
        return (v[2], v[0], v[1])

    cols = []
    for b in basis:
        w = times_g(b)
        # w = x (g - 1) + y (g^2 - 1): read x, y off the g and g^2 coefficients
        cols.append((w[1] % 2, w[2] % 2))
    return tuple(tuple(cols[j][i] for j in range(2)) for i in range(2))


def case_pgl2_coinvariants() -> CaseReport:
    frob = derived_frobenius_on_augmentation()
    minus_one = tuple(tuple((frob[i][j] - int(i == j)) % 2 for j in range(2)) for i in range(2))
    vectors = list(product((0, 1), repeat=2))
    image = {tuple(sum(minus_one[i][j] * v[j] for j in range(2)) % 2 for i in range(2)) for v in vectors}
    coinvariant_order = len(vectors) // len(image)
    printed = ((1, 1), (0, 1))
    claims = [
        Claim("derived Frobenius matrix on F2[C3]_0", [[1, 1], [1, 0]], [list(r) for r in frob], "shadow"),
        Claim("Frobenius has order 3 (unramified cubic extension)", 3, fields.f2_matrix_order(frob), "shadow"),
        Claim("F - 1 is invertible over F2", 1, fields.f2_det(minus_one), "shadow"),
        Claim("Galois coinvariants are trivial", 1, coinvariant_order, "shadow"),
    ]
    notes = [
        f"The printed Frobenius matrix {[list(r) for r in printed]} has order "
        f"{fields.f2_matrix_order(printed)} over F2, incompatible with a cubic extension; "
        "the derived matrix is used instead.",
        "Full claim (existence of the cocycle z with image A) is not asserted.",
    ]
    return CaseReport("pgl2-coinvariants", claims, "PGL2: non-toral cocycle via trivial Galois "
                      "coinvariants", notes)


def _fmt_point(p) -> str:
    return "inf" if p == fields.INF else str(p)


def case_pgl2_mobius() -> CaseReport:
    one, zero = fields.Gaussian(1), fields.Gaussian(0)
    s = ((zero, one), (one, zero))    # z -> 1/z
    t = ((-one, zero), (zero, one))   # z -> -z
    group = [fields.projective_normalize(((one, zero), (zero, one)))]
    frontier = list(group)
    while frontier:
        nxt = []
        for g in frontier:
            for h in (s, t):
                x = fields.projective_normalize(fields.mobius_mul(h, g))
                if x not in group:
                    group.append(x)
                    nxt.append(x)
        frontier = nxt
    identity = group[0]
    nontrivial = [g for g in group if g != identity]

    def stable(pair):
        return all(frozenset(fields.mobius_apply(g, p) for p in pair) == pair for g in group)

    # A V4 acting on a 2-element set has nontrivial kernel, so a stable pair is
    # the fixed-point pair of some nontrivial element.
    candidates = {fields.mobius_fixed_points(g) for g in nontrivial}
    found = sorted(sorted(_fmt_point(p) for p in pair) for pair in candidates if pair and len(pair) == 2 and stable(pair))

    grid = [fields.INF] + [fields.Gaussian(Fraction(a, d), Fraction(b, d))
                           for a in range(-3, 4) for b in range(-3, 4) for d in (1, 2)]
    grid = list(dict.fromkeys(grid))
    grid_found = sorted({tuple(sorted(_fmt_point(p) for p in (x, y)))
                         for k, x in enumerate(grid) for y in grid[k + 1:]
                         if stable(frozenset((x, y)))})
    claims = [
        Claim("group generated by 1/z and -z has order 4", 4, len(group), "shadow"),
        Claim("every nontrivial element is an involution", True,
              all(fields.projective_normalize(fields.mobius_mul(g, g)) == identity for g in nontrivial), "shadow"),
        Claim("stable two-point sets: {0,inf}, {±1}, {±i}",
              [["-1", "1"], ["-i", "i"], ["0", "inf"]], found, "shadow"),
        Claim("grid search over Q(i) points finds the same sets",
              [["-1", "1"], ["-i", "i"], ["0", "inf"]], [list(p) for p in grid_found], "shadow"),
    ]
    notes = ["Full claim: A normalizes exactly three maximal tori; shadow: the Möbius fixed-set "
             "computation on two-point subsets of P^1(Q(i)).",
             "Part 5 (generation of N_G(A) by T[4]) is not asserted."]
    return CaseReport("pgl2-mobius", claims, "PGL2: the Klein four subgroup normalizes exactly "
                      "three maximal tori", notes)


def case_g2_appendix_arithmetic() -> CaseReport:
    gl3 = fields.f2_general_linear(3)
    order7 = [m for m in gl3 if fields.f2_matrix_order(m) == 7]
    c = order7[0]
    nonzero = [v for v in product((0, 1), repeat=3) if any(v)]
    powers, x = [], tuple(tuple(int(i == j) for j in range(3)) for i in range(3))
    for _ in range(7):
        powers.append(x)
        x = fields.f2_mat_mul(c, x)

    def act(m, v):
        return tuple(sum(m[i][j] * v[j] for j in range(3)) % 2 for i in range(3))

    c_transitive = all(
        sum(1 for p in powers if act(p, u) == v) == 1 for u in nonzero for v in nonzero
    )
    f8_transitive = all(
        sum(1 for g in fields.F8.units if fields.F8.mul(g, u) == v) == 1
        for u in fields.F8.units for v in fields.F8.units
    )
    claims = [
        Claim("|W(G2)| = 12", 12, len(weyl_group(build_root_datum("G", 2))), "shadow"),
        Claim("7 does not divide 12", True, 12 % 7 != 0, "shadow"),
        Claim("8 does not divide 12", True, 12 % 8 != 0, "shadow"),
        Claim("|GL3(F2)| = 168", 168, len(gl3), "shadow"),
        Claim("GL3(F2) has 8 Sylow 7-subgroups", 8, len(order7) // 6, "shadow"),
        Claim("Sylow 7-normalizer has order 21", 21, len(gl3) // (len(order7) // 6), "shadow"),
        Claim("F8^x acts simply transitively on F8 \\ {0}", True, f8_transitive, "shadow"),
        Claim("an order-7 subgroup of GL3(F2) acts simply transitively on F2^3 \\ {0}", True, c_transitive, "shadow"),
    ]
    notes = ["Full claims on A = mu_2^3, N_G(A) and the order-168 subgroup need octonions; "
             "only these arithmetic shadows are asserted."]
    return CaseReport("g2-appendix-arithmetic", claims, "G2: an order-168 subgroup normalizing "
                      "no maximal torus", notes)


def case_weyl_orders() -> CaseReport:
    claims = [
        Claim("|W(G2)| (dihedral of order 12)", 12, len(weyl_group(build_root_datum("G", 2)))),
        Claim("|W(A2)| = |S3|", 6, len(weyl_group(build_root_datum("A", 2)))),
        Claim("|W(C4)| = 2^4 4!", 384, len(weyl_group(build_root_datum("C", 4)))),
    ]
    return CaseReport("weyl-orders", claims, "Weyl group of G2 is dihedral of order 12")


def case_tn_norm_one() -> CaseReport:
    t = torus(1)
    res = tn_group_torus(1, inversion_action(t), 2)
    claims = [
        Claim("norm-one torus of a quadratic extension, level 2", [4], list(res.group.invariant_factors)),
        Claim("ker N = Z", [[1]], [list(v) for v in res.kernel_basis]),
        Claim("split torus, level 2: trivial", [], list(tn_group_torus(1, trivial_action(t), 2).group.invariant_factors)),
    ]
    return CaseReport("tn-norm-one", claims, "finite-level Tate-Nakayama group X_*^N / I·(n X_*)")


def case_sp8_no_embedding() -> CaseReport:
    c4 = build_root_datum("C", 4)
    b4_dual = dual_datum(c4)
    a3 = build_root_datum("A", 3)
    found = closed_subsystems_of_type(c4, "C2xC2")
    claims = [
        Claim("closed subsystems of C4 of type C2xC2 (statement as written)", 0, len(found)),
        Claim("dual root system of C4 has type B4", "B4",
              cartan_type_of(b4_dual, Subsystem(tuple(range(len(b4_dual.roots))))).label),
        Claim("closed subsystems of the dual B4 of type B2xB2", 0,
              len(closed_subsystems_of_type(b4_dual, "B2xB2"))),
        Claim("positive control: A3 contains a closed A1xA1", True,
              len(closed_subsystems_of_type(a3, "A1xA1")) > 0),
    ]
    notes = []
    if found:
        base = base_and_highest(c4)
        notes.append(
            "C4 does contain closed C2xC2 subsystems (Sp4 x Sp4 is the centralizer of an "
            f"order-two element); found {len(found)}, e.g. simple-root coefficients "
            f"{sorted(list(base.coefficients[i]) for i in found[0].root_indices if base.coefficients[i] >= (0,) * 4)}."
        )
        notes.append("The obstruction to SO5 x SO5 -> SO9 lives on the dual side: B4 has no "
                     "closed B2xB2, which the third claim confirms.")
    return CaseReport("sp8-no-embedding", claims, "Sp8: no closed subsystem of type C2xC2 "
                      "(no embedding of SO5 x SO5 into SO9)", notes)


CASES: dict[str, Callable[[], CaseReport]] = {
    "g2-nonadm": case_g2_nonadm,
    "sl3-res-torus": case_sl3_res_torus,
    "sl2-quaternion-newton": case_sl2_quaternion_newton,
    "pgl2-coinvariants": case_pgl2_coinvariants,
    "pgl2-mobius": case_pgl2_mobius,
    "g2-appendix-arithmetic": case_g2_appendix_arithmetic,
    "weyl-orders": case_weyl_orders,
    "tn-norm-one": case_tn_norm_one,
    "sp8-no-embedding": case_sp8_no_embedding,
}


def run_case(case_id: str) -> CaseReport:
    try:
        fn = CASES[case_id]
    except KeyError:
        raise UnknownCase(f"unknown case {case_id!r}; known: {', '.join(CASES)}") from None
    return fn()


def run_all() -> list[CaseReport]:
    return [fn() for fn in CASES.values()]
