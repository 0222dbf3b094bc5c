"""Finite Galois actions on the cocharacter lattice.

The extension E/F is never materialized: a Galois action is just its image
in Aut(X_*), a finite group of unimodular matrices permuting the coroots.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .errors import NotAutomorphism, NotFinite, NotLevi, NotStable
from .linalg import IntMatrix, kernel_basis
from .rootdata import (
    RootDatum,
    Subsystem,
    base_and_highest,
    is_levi_subsystem,
    subgroup_generated_by_reflections,
    weyl_group,
)

MAX_GROUP_ORDER = 10_000


@dataclass(frozen=True)
class GaloisAction:
    elements: tuple[IntMatrix, ...]
    generator_indices: tuple[int, ...]
    permutations: tuple[tuple[int, ...], ...] = ()

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def generators(self) -> list[IntMatrix]:
        return [self.elements[i] for i in self.generator_indices]

    @property
    def rank(self) -> int:
        return self.elements[0].rows

    @cached_property
    def index(self) -> dict[IntMatrix, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def inverse(self, g: IntMatrix) -> IntMatrix:
        one = self.elements[0]
        return next(h for h in self.elements if h @ g == one)

    def stabilizes(self, sub: Subsystem) -> bool:
        return all(sub.image(p) == sub for p in self.permutations)


def build_action(datum: RootDatum, generators: Sequence[IntMatrix | Sequence[Sequence[int]]] = ()) -> GaloisAction:
    """Close the generators into a finite group of datum automorphisms."""
    n = datum.rank
    gens = []
    for g in generators:
        if not isinstance(g, IntMatrix):
            g = IntMatrix.from_rows(g, cols=n) if n else IntMatrix.zeros(0, 0)
        if (g.rows, g.cols) != (n, n):
            raise NotAutomorphism(f"generator has shape {g.rows}x{g.cols}, expected {n}x{n}")
        if abs(g.det()) != 1:
            raise NotAutomorphism(f"generator {g.to_rows()} is not unimodular")
        _check_automorphism(datum, g)
        gens.append(g)

    one = IntMatrix.identity(n)
    elements = [one]
    seen = {one: 0}
    gen_idx = []
    for g in gens:
        if g not in seen:
            seen[g] = len(elements)
            elements.append(g)
        gen_idx.append(seen[g])
    i = 0
    while i < len(elements):
        for g in gens:
            x = g @ elements[i]
            if x not in seen:
                seen[x] = len(elements)
                elements.append(x)
                if len(elements) > MAX_GROUP_ORDER:
                    raise NotFinite(f"generated group exceeds {MAX_GROUP_ORDER} elements")
        i += 1
    perms = tuple(datum.root_permutation(g) for g in elements)
    return GaloisAction(tuple(elements), tuple(dict.fromkeys(gen_idx)), perms)


def _check_automorphism(datum: RootDatum, g: IntMatrix) -> None:
    for i, c in enumerate(datum.coroots):
        j = datum.coroot_index.get(g @ c)
        if j is None:
            raise NotAutomorphism(f"image of coroot {c} is not a coroot", root=datum.roots[i])
        if g.T @ datum.roots[j] != datum.roots[i]:
            raise NotAutomorphism(f"dual action does not carry root {datum.roots[i]} to a root",
                                  root=datum.roots[i])


def trivial_action(datum: RootDatum) -> GaloisAction:
    return build_action(datum, [])


def inversion_action(datum: RootDatum) -> GaloisAction:
    return build_action(datum, [-IntMatrix.identity(datum.rank)])


def swap_action(datum: RootDatum, i: int, j: int) -> GaloisAction:
    """Swap lattice coordinates i and j (0-based)."""
    n = datum.rank
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    g = IntMatrix(n, n, tuple(int(perm[q] == p) for p in range(n) for q in range(n)))
    return build_action(datum, [g])


def coxeter_action(datum: RootDatum) -> GaloisAction:
    """Cyclic action generated by a Coxeter element (product of simple reflections)."""
    c = IntMatrix.identity(datum.rank)
    if datum.roots:
        for s in base_and_highest(datum).simple_roots:
            c = c @ datum.reflection(s)
    return build_action(datum, [c])


def norm_and_augmentation(action: GaloisAction) -> tuple[IntMatrix, IntMatrix]:
    """Norm N = sum of all elements; columns (g - 1) e_i over generators g span I X_*."""
    n = action.rank
    norm = IntMatrix.zeros(n, n)
    for g in action.elements:
        norm = norm + g
    one = IntMatrix.identity(n)
    cols = []
    for g in action.generators:
        cols += (g - one).columns()
    return norm, IntMatrix.from_columns(cols, rows=n)


def fixed_sublattice(action: GaloisAction) -> list[tuple[int, ...]]:
    """Basis of X_*^Γ."""
    n = action.rank
    one = IntMatrix.identity(n)
    stacked = IntMatrix.zeros(0, n)
    for g in action.generators:
        stacked = stacked.vstack(g - one)
    return kernel_basis(stacked)


def is_elliptic(datum: RootDatum, action: GaloisAction) -> bool:
    """Every Γ-fixed cocharacter pairs to zero with every root."""
    return all(
        datum.pairing(v, i) == 0
        for v in fixed_sublattice(action)
        for i in range(len(datum.roots))
    )


@dataclass(frozen=True)
class RelativeWeylReport:
    ambient_weyl_order: int
    stabilizer_order: int
    sub_weyl_order: int
    f_rational_elements: tuple[IntMatrix, ...]

    @property
    def order(self) -> int:
        return len(self.f_rational_elements)


def relative_weyl_F(datum: RootDatum, sub: Subsystem, action: GaloisAction) -> RelativeWeylReport:
    """Γ-fixed points of N_W(sub)/W(sub), one representative per coset.

    Γ acts on W by conjugation.  A coset wW(sub) is fixed when
    w^-1 (g w g^-1) lies in W(sub) for every generator g.
    """
    if not action.stabilizes(sub):
        raise NotStable("Galois action does not preserve the subsystem")
    if not is_levi_subsystem(datum, sub):
        raise NotLevi("subsystem is not a Levi subsystem")
    W = weyl_group(datum)
    normalizer = [w for w in W if sub.image(datum.root_permutation(w)) == sub]
    W_sub = set(subgroup_generated_by_reflections(datum, sub.root_indices))
    one = IntMatrix.identity(datum.rank)

    def inv(w):
        return next(v for v in W if v @ w == one)

    reps, covered = [], set()
    for w in normalizer:
        if w in covered:
            continue
        covered |= {w @ u for u in W_sub}
        reps.append(w)
    gens = [(g, action.inverse(g)) for g in action.generators]
    fixed = tuple(
        w for w in reps
        if all(inv(w) @ g @ w @ gi in W_sub for g, gi in gens)
    )
    return RelativeWeylReport(len(W), len(normalizer), len(W_sub), fixed)
