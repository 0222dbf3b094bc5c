"""Exact integer linear algebra on small lattices.

Smith normal form is the workhorse: kernels, lattice membership, finite
quotients and saturation are all read off a single decomposition
``U @ A @ V == D``.  Python ints are arbitrary precision, so nothing here can
overflow, and no floating point is used anywhere.

Vectors are column vectors; a matrix acts on the left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Optional, Sequence

from .errors import NonFiniteQuotient

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Row-major integer matrix.  Immutable and hashable."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: Optional[int] = None) -> "IntMatrix":
        columns = [tuple(int(x) for x in c) for c in columns]
        if rows is None:
            if not columns:
                raise ValueError("row count needed for an empty column list")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise ValueError("ragged columns")
        return cls(rows, len(columns), tuple(columns[j][i] for i in range(rows) for j in range(len(columns))))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix.from_columns(self.to_rows(), rows=self.cols) if self.rows else IntMatrix.zeros(self.cols, 0)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            cols = [other.column(j) for j in range(other.cols)]
            return IntMatrix(
                self.rows,
                other.cols,
                tuple(dot(self.row(i), c) for i in range(self.rows) for c in cols),
            )
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError("shape mismatch")
        return tuple(dot(self.row(i), vec) for i in range(self.rows))

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._same_shape(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntMatrix.from_columns(self.columns() + other.columns(), rows=self.rows)

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def det(self) -> int:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return bareiss_det(self.to_rows())

    def _same_shape(self, other: "IntMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")


def dot(x: Iterable, y: Iterable):
    return sum(a * b for a, b in zip(x, y))


def bareiss_det(m: list[list[int]]) -> int:
    """Fraction-free determinant."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with U, V unimodular and D in Smith form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix = field(repr=False, compare=False)

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def snf(a: IntMatrix) -> SmithDecomposition:
    """Smith normal form with transforms.

    Pivot: smallest nonzero absolute value in the active block, ties to the
    lowest (row, col) index.  The result D has non-negative diagonal with
    d1 | d2 | ..., hence is the unique Smith form of ``a``.
    """
    m, n = a.rows, a.cols
    A = a.to_rows()
    U = IntMatrix.identity(m).to_rows()
    Uinv = IntMatrix.identity(m).to_rows()
    V = IntMatrix.identity(n).to_rows()

    # Row ops are mirrored on U (left) and, inverted, on Uinv (right).
    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):
        # row_dst += k * row_src
        if k == 0:
            return
        A[dst] = [x + k * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + k * y for x, y in zip(U[dst], U[src])]
        for r in Uinv:
            r[src] -= k * r[dst]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_col(dst, src, k):
        if k == 0:
            return
        for r in A:
            r[dst] += k * r[src]
        for r in V:
            r[dst] += k * r[src]

    t = 0
    while t < min(m, n):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    x = A[i][j]
                    if x != 0 and (pivot is None or abs(x) < abs(A[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = A[t][t]
            for i in range(t + 1, m):
                add_row(i, t, -(A[i][t] // p))
            for j in range(t + 1, n):
                add_col(j, t, -(A[t][j] // p))
            if any(A[i][t] for i in range(t + 1, m)) or any(A[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if pivot is None:
            break
        if A[t][t] < 0:
            negate_row(t)
        t += 1

    return SmithDecomposition(
        U=IntMatrix.from_rows(U, cols=m),
        D=IntMatrix.from_rows(A, cols=n),
        V=IntMatrix.from_rows(V, cols=n),
        U_inv=IntMatrix.from_rows(Uinv, cols=m),
    )


def kernel_basis(a: IntMatrix) -> list[Vector]:
    """Basis of the saturated integer kernel ``{x in Z^cols : a x = 0}``."""
    dec = snf(a)
    return hermite_rows([dec.V.column(j) for j in range(dec.rank, a.cols)])


def solve_in_lattice(a: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """An integer x with ``a @ x == b``, or None when none exists."""
    b = tuple(b)
    if len(b) != a.rows:
        raise ValueError("right-hand side has the wrong length")
    dec = snf(a)
    c = dec.U @ b
    r = dec.rank
    if any(c[i] for i in range(r, a.rows)):
        return None
    y = [0] * a.cols
    for i in range(r):
        d = dec.D[i, i]
        if c[i] % d:
            return None
        y[i] = c[i] // d
    return dec.V @ y


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant factor presentation ``Z/d1 x ... x Z/dk`` with d1 | d2 | ...

    ``generators[i]`` (when present) is a lattice vector whose class generates
    the i-th cyclic factor.
    """

    invariant_factors: tuple[int, ...]
    generators: Optional[tuple[Vector, ...]] = None

    def __post_init__(self):
        fs = self.invariant_factors
        if any(f < 2 for f in fs):
            raise ValueError("invariant factors must be >= 2")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise ValueError("invariant factors must form a divisibility chain")
        if self.generators is not None and len(self.generators) != len(fs):
            raise ValueError("one generator per invariant factor")

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors


def cokernel_invariants(ambient_rank: int, sub_generators: IntMatrix) -> FiniteAbelianGroup:
    """Structure of ``Z^ambient_rank / (column span of sub_generators)``."""
    if sub_generators.rows != ambient_rank:
        raise ValueError("generators do not live in the ambient lattice")
    dec = snf(sub_generators)
    if dec.rank < ambient_rank:
        raise NonFiniteQuotient(
            f"column span has rank {dec.rank} < {ambient_rank}",
            free_rank=ambient_rank - dec.rank,
        )
    factors, gens = [], []
    for i, d in enumerate(dec.diagonal):
        if d > 1:
            factors.append(d)
            gens.append(dec.U_inv.column(i))
    return FiniteAbelianGroup(tuple(factors), tuple(gens))


def hermite_rows(rows: Sequence[Sequence[int]]) -> list[Vector]:
    """Row Hermite normal form: echelon, positive pivots, reduced above pivots.

    Zero rows are dropped.  Used to give lattice bases a canonical shape.
    """
    a = [list(r) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    out_row = 0
    for col in range(ncols):
        while True:
            nz = [i for i in range(out_row, len(a)) if a[i][col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(a[i][col]), i))
            a[out_row], a[piv] = a[piv], a[out_row]
            done = True
            for i in range(out_row + 1, len(a)):
                if a[i][col]:
                    q = a[i][col] // a[out_row][col]
                    a[i] = [x - q * y for x, y in zip(a[i], a[out_row])]
                    if a[i][col]:
                        done = False
            if done:
                break
        if out_row < len(a) and a[out_row][col] != 0:
            if a[out_row][col] < 0:
                a[out_row] = [-x for x in a[out_row]]
            p = a[out_row][col]
            for i in range(out_row):
                q = a[i][col] // p
                a[i] = [x - q * y for x, y in zip(a[i], a[out_row])]
            out_row += 1
    return [tuple(r) for r in a[:out_row]]


def saturate(sub_generators: IntMatrix) -> IntMatrix:
    """Basis (as columns) of ``Q-span(columns) ∩ Z^rows``, in Hermite form."""
    dec = snf(sub_generators)
    basis = [dec.U_inv.column(i) for i in range(dec.rank)]
    return IntMatrix.from_columns(hermite_rows(basis), rows=sub_generators.rows)


def lattice_basis(sub_generators: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the integer span of the columns, in Hermite form."""
    return IntMatrix.from_columns(hermite_rows(sub_generators.columns()), rows=sub_generators.rows)


def in_rational_span(sub_generators: IntMatrix, v: Sequence[int]) -> bool:
    return solve_in_lattice(saturate(sub_generators), v) is not None


def solve_rational(a: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve a square invertible rational system by Gauss-Jordan."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            raise ValueError("singular system")
        m[c], m[piv] = m[piv], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for i in range(n):
            if i != c and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return [m[i][n] for i in range(n)]


def common_denominator(values: Iterable[Fraction]) -> int:
    d = 1
    for v in values:
        q = Fraction(v).denominator
        d = d * q // gcd(d, q)
    return d
