"""Exact combinatorics of root data, Galois actions on tori and the
centralizers of torsion cocharacters."""

from .errors import RigidNewtonError
from .galois import (
    GaloisAction,
    build_action,
    coxeter_action,
    inversion_action,
    is_elliptic,
    norm_and_augmentation,
    relative_weyl_F,
    swap_action,
    trivial_action,
)
from .linalg import FiniteAbelianGroup, IntMatrix, cokernel_invariants, kernel_basis, snf, solve_in_lattice
from .newton import (
    TorsionCocharacter,
    alcove_normalize,
    centralizer_roots,
    facet_indices,
    gamma_centralizer,
    newton_invariant,
)
from .rootdata import (
    CartanType,
    RootDatum,
    Subsystem,
    base_and_highest,
    build_root_datum,
    cartan_type_of,
    closed_subsystems,
    closed_subsystems_of_type,
    is_levi_subsystem,
    parse_datum,
    torus,
    weyl_group,
)
from .tate_nakayama import band_image_contains, levi_suitable_characters, realize_twisted_levi, tn_group_torus

__all__ = [
    "CartanType",
    "FiniteAbelianGroup",
    "GaloisAction",
    "IntMatrix",
    "RigidNewtonError",
    "RootDatum",
    "Subsystem",
    "TorsionCocharacter",
    "alcove_normalize",
    "band_image_contains",
    "base_and_highest",
    "build_action",
    "build_root_datum",
    "cartan_type_of",
    "centralizer_roots",
    "closed_subsystems",
    "closed_subsystems_of_type",
    "cokernel_invariants",
    "coxeter_action",
    "facet_indices",
    "gamma_centralizer",
    "inversion_action",
    "is_elliptic",
    "is_levi_subsystem",
    "kernel_basis",
    "levi_suitable_characters",
    "newton_invariant",
    "norm_and_augmentation",
    "parse_datum",
    "realize_twisted_levi",
    "relative_weyl_F",
    "snf",
    "solve_in_lattice",
    "swap_action",
    "tn_group_torus",
    "torus",
    "trivial_action",
    "weyl_group",
]
