from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import box, cyclic_product_profile, quotient_order_profile, rational_det, span_mod
from rigid_newton.errors import NonFiniteQuotient
from rigid_newton.linalg import (
    IntMatrix,
    cokernel_invariants,
    hermite_rows,
    in_rational_span,
    kernel_basis,
    saturate,
    snf,
    solve_in_lattice,
    solve_rational,
)


def small_matrices(max_dim=3, bound=6):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def test_matrix_basics():
    a = IntMatrix.from_rows([[1, 2], [3, 4]])
    assert a[1, 0] == 3
    assert a.T.to_rows() == [[1, 3], [2, 4]]
    assert (a @ IntMatrix.identity(2)) == a
    assert a @ (1, 1) == (3, 7)
    assert a.det() == -2
    assert (a - a).is_zero()


def test_snf_example():
    d = snf(IntMatrix.from_rows([[2, 4], [6, 8]]))
    assert d.diagonal == (2, 4)
    assert d.rank == 2


def test_snf_rank_deficient():
    d = snf(IntMatrix.from_rows([[1, 2, 3], [2, 4, 6]]))
    assert d.diagonal[:1] == (1,) and d.rank == 1


@settings(max_examples=200, deadline=None)
@given(small_matrices())
def test_snf_properties(rows):
    a = IntMatrix.from_rows(rows)
    d = snf(a)
    assert d.U @ a @ d.V == d.D
    assert d.U @ d.U_inv == IntMatrix.identity(a.rows)
    assert abs(d.U.det()) == 1 and abs(d.V.det()) == 1
    diag = [x for x in d.diagonal if x]
    assert all(x > 0 for x in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))
    for i in range(a.rows):
        for j in range(a.cols):
            if i != j:
                assert d.D[i, j] == 0


@settings(max_examples=150, deadline=None)
@given(small_matrices(max_dim=2, bound=5))
def test_kernel_basis_is_complete(rows):
    a = IntMatrix.from_rows(rows)
    kb = kernel_basis(a)
    for v in kb:
        assert not any(a @ v)
    if not kb:
        for v in box(a.cols, 4):
            assert not any(v) or any(a @ v)
        return
    k = IntMatrix.from_columns(kb, rows=a.cols)
    for v in box(a.cols, 4):
        if not any(a @ v):
            assert solve_in_lattice(k, v) is not None


def test_kernel_normalized():
    assert kernel_basis(IntMatrix.from_rows([[2, 2]])) == [(1, -1)]


@settings(max_examples=150, deadline=None)
@given(small_matrices(max_dim=2, bound=4), st.lists(st.integers(-8, 8), min_size=2, max_size=2))
def test_solve_in_lattice_matches_box_search(rows, b):
    a = IntMatrix.from_rows(rows)
    b = tuple(b[: a.rows]) + (0,) * max(0, a.rows - len(b))
    x = solve_in_lattice(a, b)
    found = any(a @ v == b for v in box(a.cols, 8))
    if x is not None:
        assert a @ x == b
    else:
        assert not found
    if found:
        assert x is not None


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(-4, 4), min_size=2, max_size=2), min_size=2, max_size=3))
def test_cokernel_matches_enumeration(cols):
    a = IntMatrix.from_columns([tuple(c) for c in cols], rows=2)
    try:
        g = cokernel_invariants(2, a)
    except NonFiniteQuotient:
        assert all(rational_det([cols[i], cols[j]]) == 0 for i in range(len(cols)) for j in range(len(cols)))
        return
    # the index divides any nonzero 2x2 minor, so that minor kills the quotient
    m = next(abs(int(rational_det([cols[i], cols[j]])))
             for i in range(len(cols)) for j in range(i + 1, len(cols))
             if rational_det([cols[i], cols[j]]) != 0)
    full = span_mod([(1, 0), (0, 1)], m, 2)
    sub = span_mod(cols, m, 2)
    assert quotient_order_profile(full, sub, m) == cyclic_product_profile(g.invariant_factors)
    for gen, f in zip(g.generators, g.invariant_factors):
        assert solve_in_lattice(a, tuple(f * x for x in gen)) is not None


def test_cokernel_generators_and_trivial():
    g = cokernel_invariants(2, IntMatrix.from_rows([[2, 0], [0, 4]]))
    assert g.invariant_factors == (2, 4) and g.order == 8
    assert cokernel_invariants(1, IntMatrix.from_rows([[1]])).is_trivial


def test_cokernel_infinite():
    with pytest.raises(NonFiniteQuotient):
        cokernel_invariants(2, IntMatrix.from_rows([[1], [0]]))


def test_saturate_and_span():
    s = saturate(IntMatrix.from_columns([(2, 2)], rows=2))
    assert s.columns() == [(1, 1)]
    assert in_rational_span(IntMatrix.from_columns([(2, 2)], rows=2), (3, 3))
    assert not in_rational_span(IntMatrix.from_columns([(2, 2)], rows=2), (1, 0))


def test_hermite_rows_canonical():
    assert hermite_rows([(2, 4), (1, 1)]) == hermite_rows([(1, 3), (0, 2)])


def test_solve_rational():
    assert solve_rational([[2, 1], [1, 1]], [1, 0]) == [Fraction(1), Fraction(-1)]
