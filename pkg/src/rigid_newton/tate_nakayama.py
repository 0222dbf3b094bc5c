"""Finite-level Tate-Nakayama groups and the band-restriction image.

Everything is specialized to Z = T[n]: the group in question is
ker(N) / I·(n X_*), and a torsion point ν ∈ (1/n)X_*/X_* lies in the image of
the band restriction iff it lifts to a norm-killed λ with λ/n ≡ ν.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from typing import Optional, Sequence

from .errors import DegenerateMu, NonFiniteQuotient, NotElliptic, NotLevi, NotStable, TooLarge
from .galois import GaloisAction, is_elliptic, norm_and_augmentation
from .linalg import (
    FiniteAbelianGroup,
    IntMatrix,
    Vector,
    cokernel_invariants,
    kernel_basis,
    solve_in_lattice,
)
from .newton import CentralizerReport, NuLike, TorsionCocharacter, as_torsion, gamma_centralizer
from .rootdata import RootDatum, Subsystem, full_system, is_levi_subsystem

MAX_ENUMERATION = 10 ** 6


@dataclass(frozen=True)
class TNGroupResult:
    group: FiniteAbelianGroup
    level: int
    kernel_basis: tuple[Vector, ...]
    relation_generators: tuple[Vector, ...]


def tn_group_torus(datum_rank: int, action: GaloisAction, n: int) -> TNGroupResult:
    """ker(N) / I·(n X_*) with generator lifts in X_*."""
    if n < 1:
        raise ValueError("level must be >= 1")
    norm, aug = norm_and_augmentation(action)
    if norm.rows != datum_rank:
        raise ValueError("action rank does not match the lattice rank")
    kb = kernel_basis(norm)
    relations = [tuple(n * x for x in c) for c in aug.columns() if any(c)]
    if not kb:
        return TNGroupResult(FiniteAbelianGroup(()), n, (), tuple(relations))
    K = IntMatrix.from_columns(kb, rows=datum_rank)
    coords = []
    for r in relations:
        c = solve_in_lattice(K, r)
        if c is None:
            raise AssertionError("augmentation relation outside ker N")
        coords.append(c)
    rel = IntMatrix.from_columns(coords, rows=len(kb))
    try:
        quotient = cokernel_invariants(len(kb), rel)
    except NonFiniteQuotient as exc:
        raise NonFiniteQuotient(f"I·(nX_*) has infinite index in ker N: {exc}") from exc
    gens = tuple(K @ g for g in quotient.generators)
    return TNGroupResult(FiniteAbelianGroup(quotient.invariant_factors, gens), n, tuple(kb), tuple(relations))


def band_image_contains(datum: RootDatum, action: GaloisAction, nu: NuLike,
                        level: Optional[int] = None) -> tuple[bool, Optional[Vector]]:
    """Is ν = λ/n for some norm-killed λ?  Returns (verdict, witness λ).

    The lattice criterion N(n ν0) ∈ n·N(X_*) is decided by solving
    (n N) y = N(n ν0); then λ = n ν0 - n y is the witness.
    """
    nu = as_torsion(nu)
    n = level or nu.denominator
    lift = nu.numerators(n)
    norm, _ = norm_and_augmentation(action)
    y = solve_in_lattice(norm.scale(n), norm @ lift)
    if y is None:
        return False, None
    lam = tuple(a - n * b for a, b in zip(lift, y))
    assert not any(norm @ lam)
    return True, lam


@dataclass(frozen=True)
class TwistedLeviRealization:
    level: int
    mu: Vector
    nu: TorsionCocharacter
    levi: Subsystem
    report: CentralizerReport


def realize_twisted_levi(datum: RootDatum, action: GaloisAction, lam: Sequence[int]) -> TwistedLeviRealization:
    """Torsion cocharacter whose Γ-centralizer is exactly L = Z(λ).

    μ = |Γ|λ - N(λ); the level n strictly exceeds every |<γμ, α>|, so a
    pairing of μ/n is integral only when the pairing of μ vanishes.  The
    construction needs N(λ) central; that is automatic for elliptic actions.
    """
    lam = tuple(int(x) for x in lam)
    norm, _ = norm_and_augmentation(action)
    n_lam = norm @ lam
    if not is_elliptic(datum, action) and any(datum.pairing(n_lam, i) for i in range(len(datum.roots))):
        raise NotElliptic("action is not elliptic and N(λ) is not central")
    levi = Subsystem(tuple(i for i in range(len(datum.roots)) if datum.pairing(lam, i) == 0))
    if not action.stabilizes(levi):
        raise NotStable("the centralizer of λ is not Γ-stable")
    mu = tuple(action.order * a - b for a, b in zip(lam, n_lam))
    if not any(mu) and levi != full_system(datum):
        raise DegenerateMu("μ = 0 but the centralizer of λ is proper")
    bound = max(
        (abs(datum.pairing(g @ mu, i)) for g in action.elements for i in range(len(datum.roots))),
        default=0,
    )
    level = bound + 1
    nu = TorsionCocharacter.from_vector([Fraction(x, level) for x in mu])
    report = gamma_centralizer(datum, nu, action)
    if report.gamma_centralizer != levi:
        raise AssertionError("realized Γ-centralizer differs from the centralizer of λ")
    return TwistedLeviRealization(level, mu, nu, levi, report)


@dataclass(frozen=True)
class LeviSuitableEntry:
    nu: TorsionCocharacter
    report: CentralizerReport
    levi_suitable: bool


def levi_suitable_characters(datum: RootDatum, m_sub: Subsystem, action: GaloisAction, n: int) -> list[LeviSuitableEntry]:
    """All ν ∈ (1/n)X_*/X_* central in M, with their Γ-centralizer verdicts.

    Ordered lexicographically by the numerator vector.
    """
    if not action.stabilizes(m_sub):
        raise NotStable("Galois action does not preserve M")
    if not is_levi_subsystem(datum, m_sub):
        raise NotLevi("M is not a Levi subsystem")
    if n ** datum.rank > MAX_ENUMERATION:
        raise TooLarge(f"{n}^{datum.rank} torsion points exceeds {MAX_ENUMERATION}")
    roots = [datum.roots[i] for i in m_sub.root_indices]
    out = []
    for k in product(range(n), repeat=datum.rank):
        if any(sum(a * b for a, b in zip(k, r)) % n for r in roots):
            continue
        nu = TorsionCocharacter.from_numerators(k, n)
        report = gamma_centralizer(datum, nu, action)
        out.append(LeviSuitableEntry(nu, report, report.is_levi_regular))
    return out


def central_torsion_count(datum: RootDatum, m_sub: Subsystem, n: int) -> int:
    """|Hom(μ_n, Z(M))| as n^(r-m) · |Z^m / (A Z^r + n Z^m)|, A = roots of M as rows."""
    r = datum.rank
    rows = [datum.roots[i] for i in m_sub.root_indices]
    if not rows:
        return n ** r
    m = len(rows)
    cols = [tuple(row[j] for row in rows) for j in range(r)]
    cols += [tuple(n * int(i == j) for i in range(m)) for j in range(m)]
    q = cokernel_invariants(m, IntMatrix.from_columns(cols, rows=m))
    return n ** r * q.order // n ** m


def group_order(result: TNGroupResult) -> int:
    return prod(result.group.invariant_factors)
