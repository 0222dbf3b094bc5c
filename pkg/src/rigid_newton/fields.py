"""Small exact fields used by the casebook: Q(i), P^1 over it, F_2 and F_8."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Optional


@dataclass(frozen=True)
class Gaussian:
    """Element re + im*i of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, o):
        o = _g(o)
        return Gaussian(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, o):
        return self + -_g(o)

    def __rsub__(self, o):
        return _g(o) - self

    def __mul__(self, o):
        o = _g(o)
        return Gaussian(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conj(self):
        return Gaussian(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, o):
        o = _g(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        p = self * o.conj()
        return Gaussian(p.re / n, p.im / n)

    def __bool__(self):
        return bool(self.re or self.im)

    def __str__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}i"


I = Gaussian(0, 1)


def _g(x) -> Gaussian:
    return x if isinstance(x, Gaussian) else Gaussian(x)


def _rational_sqrt(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def gaussian_sqrt(w: Gaussian) -> Optional[Gaussian]:
    """A square root in Q(i), or None if w is not a square there."""
    if not w:
        return Gaussian()
    r = _rational_sqrt(w.norm())
    if r is None:
        return None
    u = _rational_sqrt((w.re + r) / 2)
    if u is not None and u != 0:
        return Gaussian(u, w.im / (2 * u))
    v = _rational_sqrt((r - w.re) / 2)
    if not v:
        return None
    return Gaussian(w.im / (2 * v), v)


INF = "inf"


def p1_point(x, y=1):
    """Normalized homogeneous point: a Gaussian, or INF for [1:0]."""
    x, y = _g(x), _g(y)
    if not y:
        if not x:
            raise ValueError("[0:0] is not a point")
        return INF
    return x / y


def mobius_apply(m, z):
    (a, b), (c, d) = m
    if z == INF:
        return p1_point(a, c)
    return p1_point(a * z + b, c * z + d)


def mobius_mul(m, n):
    return tuple(
        tuple(sum((_g(m[i][k]) * n[k][j] for k in range(2)), Gaussian()) for j in range(2))
        for i in range(2)
    )


def projective_normalize(m):
    """Scale a 2x2 matrix so its first nonzero entry is 1 (PGL_2 representative)."""
    flat = [_g(x) for row in m for x in row]
    lead = next(x for x in flat if x)
    flat = [x / lead for x in flat]
    return ((flat[0], flat[1]), (flat[2], flat[3]))


def mobius_fixed_points(m) -> Optional[frozenset]:
    """Fixed points of a non-scalar Möbius map over Q(i); None if some lie outside."""
    (a, b), (c, d) = [[_g(x) for x in row] for row in m]
    if not c:
        if not (d - a):
            return frozenset([INF]) if b else None
        return frozenset([INF, b / (d - a)])
    # c z^2 + (d - a) z - b = 0
    disc = (d - a) * (d - a) + 4 * c * b
    s = gaussian_sqrt(disc)
    if s is None:
        return None
    return frozenset([(a - d + s) / (2 * c), (a - d - s) / (2 * c)])


def f2_mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return tuple(tuple(sum(a[i][t] * b[t][j] for t in range(k)) % 2 for j in range(m)) for i in range(n))


def f2_det(a) -> int:
    """Determinant mod 2 by elimination."""
    m = [list(r) for r in a]
    n = len(m)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] % 2), None)
        if piv is None:
            return 0
        m[c], m[piv] = m[piv], m[c]
        for i in range(c + 1, n):
            if m[i][c] % 2:
                m[i] = [(x + y) % 2 for x, y in zip(m[i], m[c])]
    return 1


def f2_matrix_order(a, limit: int = 64) -> int:
    n = len(a)
    one = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    x, k = tuple(tuple(r) for r in a), 1
    while x != one:
        x, k = f2_mat_mul(x, a), k + 1
        if k > limit:
            raise ValueError("matrix has no finite order below the limit")
    return k


def f2_general_linear(n: int) -> list:
    """All invertible n x n matrices over F_2 (brute force)."""
    out = []
    for bits in product((0, 1), repeat=n * n):
        m = tuple(tuple(bits[i * n:(i + 1) * n]) for i in range(n))
        if f2_det(m):
            out.append(m)
    return out


class F8:
    """F_2[x]/(x^3 + x + 1); elements are ints 0..7 encoding coefficient bits."""

    MODULUS = 0b1011

    @staticmethod
    def mul(a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & 0b1000:
                a ^= F8.MODULUS
        return r

    elements = tuple(range(8))
    units = tuple(range(1, 8))
