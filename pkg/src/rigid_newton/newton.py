"""Torsion cocharacters, their centralizers and alcove normal forms.

A torsion cocharacter is an element of X_* ⊗ Q/Z, stored by its unique lift
with coordinates in [0, 1).  Its centralizer is the set of roots pairing
integrally with it; intersecting over the Galois orbit gives the centralizer
of the whole Γ-orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Sequence, Union

from .errors import NotNormalized
from .galois import GaloisAction
from .linalg import IntMatrix, common_denominator, dot
from .rootdata import (
    BaseData,
    CartanType,
    RootDatum,
    Subsystem,
    cartan_type_of,
    is_levi_subsystem,
)


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class TorsionCocharacter:
    coordinates: tuple[Fraction, ...]
    denominator: int

    @classmethod
    def from_vector(cls, v: Sequence) -> "TorsionCocharacter":
        coords = tuple(_frac(x) - floor(_frac(x)) for x in v)
        return cls(coords, common_denominator(coords))

    @classmethod
    def from_numerators(cls, k: Sequence[int], n: int) -> "TorsionCocharacter":
        return cls.from_vector([Fraction(x, n) for x in k])

    @classmethod
    def zero(cls, rank: int) -> "TorsionCocharacter":
        return cls((Fraction(0),) * rank, 1)

    @property
    def rank(self) -> int:
        return len(self.coordinates)

    def is_zero(self) -> bool:
        return not any(self.coordinates)

    def numerators(self, n: int | None = None) -> tuple[int, ...]:
        n = n or self.denominator
        out = tuple(x * n for x in self.coordinates)
        if any(x.denominator != 1 for x in out):
            raise ValueError(f"level {n} is not a multiple of the denominator {self.denominator}")
        return tuple(int(x) for x in out)

    def transform(self, g: IntMatrix) -> "TorsionCocharacter":
        return TorsionCocharacter.from_vector(g @ self.coordinates)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.coordinates)


NuLike = Union[TorsionCocharacter, Sequence]


def as_torsion(nu: NuLike) -> TorsionCocharacter:
    return nu if isinstance(nu, TorsionCocharacter) else TorsionCocharacter.from_vector(nu)


def centralizer_roots(datum: RootDatum, nu: NuLike) -> Subsystem:
    """Roots α with <ν, α> ∈ Z."""
    nu = as_torsion(nu)
    return Subsystem(tuple(
        i for i in range(len(datum.roots))
        if datum.pairing(nu.coordinates, i).denominator == 1
    ))


@dataclass(frozen=True)
class CentralizerReport:
    single_centralizer: Subsystem
    gamma_centralizer: Subsystem
    type_single: CartanType
    type_gamma: CartanType
    is_cyclic_witness: bool
    is_levi_regular: bool


def gamma_centralizer(datum: RootDatum, nu: NuLike, action: GaloisAction) -> CentralizerReport:
    nu = as_torsion(nu)
    single = centralizer_roots(datum, nu)
    keep = set(single.root_indices)
    for g in action.elements:
        keep &= set(centralizer_roots(datum, nu.transform(g)).root_indices)
    gamma = Subsystem.of(keep)
    return CentralizerReport(
        single_centralizer=single,
        gamma_centralizer=gamma,
        type_single=cartan_type_of(datum, single),
        type_gamma=cartan_type_of(datum, gamma),
        is_cyclic_witness=gamma == single,
        is_levi_regular=is_levi_subsystem(datum, gamma),
    )


# An affine reflection (root index, k) acts by y -> y - (<y, α> - k) α^vee,
# i.e. reflection in the hyperplane <y, α> = k.
AffineStep = tuple[int, int]


@dataclass(frozen=True)
class AlcoveForm:
    point: tuple[Fraction, ...]
    affine_word: tuple[AffineStep, ...]
    facet_indices: tuple[int, ...]


def apply_affine_step(datum: RootDatum, step: AffineStep, y: Sequence[Fraction]) -> tuple[Fraction, ...]:
    i, k = step
    t = dot(y, datum.roots[i]) - k
    return tuple(a - t * c for a, c in zip(y, datum.coroots[i]))


def apply_affine_word(datum: RootDatum, word: Sequence[AffineStep], y: Sequence) -> tuple[Fraction, ...]:
    y = tuple(_frac(x) for x in y)
    for step in word:
        y = apply_affine_step(datum, step, y)
    return y


def in_closed_alcove(datum: RootDatum, base: BaseData, y: Sequence) -> bool:
    return all(dot(y, datum.roots[s]) >= 0 for s in base.simple_roots) and all(
        dot(y, datum.roots[h]) <= 1 for h in base.highest_roots
    )


def alcove_normalize(datum: RootDatum, base: BaseData, lift: Sequence) -> AlcoveForm:
    """Move ``lift`` into the closed fundamental alcove by affine reflections.

    Each step reflects across a wall that separates the point from the
    alcove, so the number of separating affine hyperplanes drops by one and
    the walk terminates.  Central directions are never touched.
    """
    y = tuple(_frac(x) for x in lift)
    word: list[AffineStep] = []
    while True:
        step = None
        for s in base.simple_roots:
            if dot(y, datum.roots[s]) < 0:
                step = (s, 0)
                break
        else:
            for h in base.highest_roots:
                if dot(y, datum.roots[h]) > 1:
                    step = (h, 1)
                    break
        if step is None:
            break
        y = apply_affine_step(datum, step, y)
        word.append(step)
    return AlcoveForm(y, tuple(word), facet_indices(datum, base, y))


def facet_indices(datum: RootDatum, base: BaseData, point: Sequence) -> tuple[int, ...]:
    """Indices (into the root list) of the walls in Δ ∪ {-α0} pairing integrally.

    -α0 of each component is reported by the index of the root -α0.
    """
    point = tuple(_frac(x) for x in point)
    if not in_closed_alcove(datum, base, point):
        raise NotNormalized(f"point {[str(x) for x in point]} is outside the closed alcove")
    out = [s for s in base.simple_roots if dot(point, datum.roots[s]).denominator == 1]
    out += [datum.negative[h] for h in base.highest_roots if dot(point, datum.roots[h]).denominator == 1]
    return tuple(sorted(out))


def newton_invariant(datum: RootDatum, base: BaseData, nu: NuLike, action: GaloisAction) -> tuple[AlcoveForm, CentralizerReport]:
    """Alcove normal form of ν together with its Γ-centralizer report."""
    nu = as_torsion(nu)
    return alcove_normalize(datum, base, nu.coordinates), gamma_centralizer(datum, nu, action)
