"""Based root data, Weyl groups and root subsystems.

Coordinates.  A simply connected datum is realized with X_* spanned by the
simple coroots; an adjoint datum with X_* spanned by the fundamental
coweights (so X^* is spanned by the simple roots).  G2 is both, and always
uses the fundamental-coweight basis: a root's coordinates are then exactly
its coefficients in the simple roots (a, b).

Roots are listed positives first (by height, then simple-root order) followed
by the negatives in the same order, so ``roots[i + P] == -roots[i]``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from math import factorial
from typing import Iterable, Optional, Sequence

from .errors import InvalidSubsystem, NotRegular, TooLarge, UnsupportedType
from .linalg import IntMatrix, Vector, dot, saturate, solve_in_lattice, solve_rational

FAMILIES = ("A", "B", "C", "D", "G")


def cartan_matrix(family: str, rank: int) -> list[list[int]]:
    """Cartan matrix ``a[i][j] = <alpha_i^vee, alpha_j>`` (Bourbaki numbering)."""
    family = family.upper()
    valid = {"A": rank >= 1, "B": rank >= 2, "C": rank >= 2, "D": rank >= 4, "G": rank == 2}
    if family not in valid or not valid[family]:
        raise UnsupportedType(f"unsupported type {family}{rank}")
    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    if family == "G":
        # alpha_1 short, alpha_2 long
        a[0][1], a[1][0] = -3, -1
        return a
    for i in range(rank - 1):
        a[i][i + 1] = a[i + 1][i] = -1
    if family == "B":
        a[rank - 1][rank - 2] = -2
    elif family == "C":
        a[rank - 2][rank - 1] = -2
    elif family == "D":
        a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0
        a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1
    return a


def _root_pairs_from_cartan(a: list[list[int]]) -> list[tuple[Vector, Vector]]:
    """Positive (root, coroot) pairs in simple-root / simple-coroot coefficients.

    Generated as the orbit of the simple pairs under simple reflections, which
    act compatibly on both sides so alignment is automatic.
    """
    r = len(a)
    simple = [tuple(int(i == k) for k in range(r)) for i in range(r)]
    seen = {}
    queue = deque((s, s) for s in simple)
    while queue:
        root, coroot = queue.popleft()
        if root in seen:
            continue
        seen[root] = coroot
        for i in range(r):
            # <root, alpha_i^vee> and <alpha_i, coroot>
            p = sum(root[k] * a[i][k] for k in range(r))
            q = sum(coroot[k] * a[k][i] for k in range(r))
            nr = tuple(root[k] - p * int(k == i) for k in range(r))
            nc = tuple(coroot[k] - q * int(k == i) for k in range(r))
            if all(x >= 0 for x in nr) and any(nr):
                queue.append((nr, nc))
            elif all(x <= 0 for x in nr) and any(nr):
                queue.append((tuple(-x for x in nr), tuple(-x for x in nc)))
    return sorted(seen.items(), key=lambda rc: (sum(rc[0]), tuple(-x for x in rc[0])))


@dataclass(frozen=True)
class RootDatum:
    """Roots live in X^* = Z^rank, coroots in X_* = Z^rank, paired by dot."""

    rank: int
    roots: tuple[Vector, ...]
    coroots: tuple[Vector, ...]
    label: str = ""
    default_regular: Optional[tuple[Fraction, ...]] = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.roots) != len(self.coroots):
            raise ValueError("roots and coroots must be index aligned")
        for a, c in zip(self.roots, self.coroots):
            if len(a) != self.rank or len(c) != self.rank:
                raise ValueError("root vector of the wrong length")
            if dot(a, c) != 2:
                raise ValueError(f"<{a}, {c}> != 2")
        index = self.root_index
        for a in self.roots:
            if tuple(-x for x in a) not in index:
                raise ValueError(f"negative of root {a} missing")
            for k in (2, 3):
                if tuple(k * x for x in a) in index:
                    raise ValueError("root system is not reduced")
        for i, (a, c) in enumerate(zip(self.roots, self.coroots)):
            for b, d in zip(self.roots, self.coroots):
                sb = tuple(x - dot(c, b) * y for x, y in zip(b, a))
                sd = tuple(x - dot(d, a) * y for x, y in zip(d, c))
                j = index.get(sb)
                if j is None or self.coroots[j] != sd:
                    raise ValueError(f"reflection in root {a} does not preserve the datum")

    @cached_property
    def root_index(self) -> dict[Vector, int]:
        return {a: i for i, a in enumerate(self.roots)}

    @cached_property
    def coroot_index(self) -> dict[Vector, int]:
        return {c: i for i, c in enumerate(self.coroots)}

    @cached_property
    def negative(self) -> tuple[int, ...]:
        return tuple(self.root_index[tuple(-x for x in a)] for a in self.roots)

    @cached_property
    def sum_table(self) -> dict[tuple[int, int], int]:
        """(i, j) -> index of roots[i] + roots[j] when that sum is a root."""
        out = {}
        for i, a in enumerate(self.roots):
            for j, b in enumerate(self.roots):
                k = self.root_index.get(tuple(x + y for x, y in zip(a, b)))
                if k is not None:
                    out[i, j] = k
        return out

    def pairing(self, x: Sequence, i: int):
        """<x, roots[i]> for a (rational) cocharacter x."""
        return dot(x, self.roots[i])

    def reflection(self, i: int) -> IntMatrix:
        """s_alpha on X_*: x -> x - <x, alpha> alpha^vee."""
        a, c = self.roots[i], self.coroots[i]
        n = self.rank
        return IntMatrix(n, n, tuple(int(p == q) - c[p] * a[q] for p in range(n) for q in range(n)))

    def root_permutation(self, g: IntMatrix) -> Optional[tuple[int, ...]]:
        """Permutation of root indices induced by g acting on X_*.

        g sends coroot i to coroot perm[i]; the dual action (inverse
        transpose) must then send root i to root perm[i].  None if g is not an
        automorphism of the datum.
        """
        perm = []
        for i, c in enumerate(self.coroots):
            j = self.coroot_index.get(g @ c)
            if j is None or g.T @ self.roots[j] != self.roots[i]:
                return None
            perm.append(j)
        return tuple(perm)

    @property
    def semisimple_rank(self) -> int:
        if not self.roots:
            return 0
        return len(saturate(IntMatrix.from_columns(self.roots, rows=self.rank)).columns())


def _default_regular(rank: int, roots: Sequence[Vector], coroots: Sequence[Vector], simple: Sequence[int]):
    """rho^vee: the vector in the coroot span pairing to 1 with each simple root."""
    if not simple:
        return tuple(Fraction(0) for _ in range(rank))
    m = [[dot(coroots[j], roots[i]) for j in simple] for i in simple]
    c = solve_rational(m, [1] * len(simple))
    return tuple(sum(cj * coroots[j][k] for cj, j in zip(c, simple)) for k in range(rank))


def build_root_datum(family: str, rank: int, isogeny: str = "simply_connected") -> RootDatum:
    """Root datum of the simple group of the given type and isogeny."""
    family = family.upper()
    if family == "T":
        return torus(rank)
    if isogeny in ("sc", "simply_connected"):
        isogeny = "simply_connected"
    elif isogeny in ("ad", "adjoint"):
        isogeny = "adjoint"
    else:
        raise UnsupportedType(f"unknown isogeny {isogeny!r}")
    a = cartan_matrix(family, rank)
    pairs = _root_pairs_from_cartan(a)
    roots, coroots = [], []
    for rc, cc in pairs:
        if isogeny == "simply_connected" and family != "G":
            # X_* basis = simple coroots; root coordinate j = <alpha, alpha_j^vee>
            roots.append(tuple(sum(rc[k] * a[j][k] for k in range(rank)) for j in range(rank)))
            coroots.append(cc)
        else:
            # X^* basis = simple roots; coroot coordinate j = <alpha_j, beta^vee>
            roots.append(rc)
            coroots.append(tuple(sum(cc[k] * a[k][j] for k in range(rank)) for j in range(rank)))
    roots += [tuple(-x for x in r) for r in roots]
    coroots += [tuple(-x for x in c) for c in coroots]
    tag = "sc" if isogeny == "simply_connected" else "ad"
    if family == "G":
        tag = "sc"
    reg = _default_regular(rank, roots, coroots, list(range(rank)))
    return RootDatum(rank, tuple(roots), tuple(coroots), f"{family}{rank}:{tag}", reg)


def torus(rank: int) -> RootDatum:
    return RootDatum(rank, (), (), f"T{rank}", tuple(Fraction(0) for _ in range(rank)))


def direct_sum(factors: Sequence[RootDatum], central_rank: int = 0) -> RootDatum:
    """Product datum: block-diagonal coordinates, plus a split central torus."""
    total = sum(f.rank for f in factors) + central_rank
    roots, coroots, reg = [], [], []
    offset = 0
    # keep the positives-then-negatives layout across factors
    halves = []
    for f in factors:
        P = len(f.roots) // 2
        pad = lambda v, o=offset, f=f: (0,) * o + tuple(v) + (0,) * (total - o - f.rank)
        halves.append(([pad(v) for v in f.roots[:P]], [pad(v) for v in f.coroots[:P]],
                       [pad(v) for v in f.roots[P:]], [pad(v) for v in f.coroots[P:]]))
        reg += list(f.default_regular or _regular_by_search(f))
        offset += f.rank
    for h in halves:
        roots += h[0]
        coroots += h[1]
    for h in halves:
        roots += h[2]
        coroots += h[3]
    reg += [Fraction(0)] * central_rank
    parts = [f.label for f in factors] + ([f"T{central_rank}"] if central_rank else [])
    return RootDatum(total, tuple(roots), tuple(coroots), "+".join(parts) or "T0", tuple(reg))


def _regular_by_search(datum: RootDatum) -> tuple[Fraction, ...]:
    for k in range(2, 10_000):
        x = tuple(Fraction(k ** i) for i in range(datum.rank))
        if all(datum.pairing(x, i) != 0 for i in range(len(datum.roots))):
            return x
    raise NotRegular("no regular vector found")


def regular_vector(datum: RootDatum) -> tuple[Fraction, ...]:
    return datum.default_regular if datum.default_regular is not None else _regular_by_search(datum)


@dataclass(frozen=True)
class BaseData:
    simple_roots: tuple[int, ...]
    positive_roots: tuple[int, ...]
    highest_roots: tuple[int, ...]
    # simple-root indices of each irreducible component, aligned with highest_roots
    components: tuple[tuple[int, ...], ...] = ()
    regular_vector: tuple[Fraction, ...] = ()
    # root index -> coefficients on simple_roots
    coefficients: dict = field(default_factory=dict, compare=False, repr=False)

    def component_of(self, root: int) -> int:
        c = self.coefficients[root]
        for k, comp in enumerate(self.components):
            if any(c[self.simple_roots.index(s)] for s in comp):
                return k
        raise ValueError("zero root")


def _components(pairs: dict, nodes: Sequence[int]) -> list[tuple[int, ...]]:
    comps, seen = [], set()
    for v in nodes:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in nodes:
                if y not in seen and pairs[x, y]:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def _base_of(datum: RootDatum, indices: Sequence[int], reg) -> tuple[list[int], list[int]]:
    """(simple, positive) root indices of the subsystem ``indices`` under ``reg``."""
    pos = [i for i in indices if datum.pairing(reg, i) > 0]
    pos_set = set(pos)
    decomposable = {datum.sum_table[i, j] for i in pos for j in pos if (i, j) in datum.sum_table}
    simple = sorted(i for i in pos if i not in decomposable)
    return simple, sorted(pos_set)


def base_and_highest(datum: RootDatum, regular: Optional[Sequence] = None) -> BaseData:
    """Base Δ and one highest root per simple component.

    Δ is the set of indecomposable roots among those pairing positively with
    the regular vector (default rho^vee of the built-in base).
    """
    reg = tuple(Fraction(x) for x in regular) if regular is not None else regular_vector(datum)
    for i in range(len(datum.roots)):
        if datum.pairing(reg, i) == 0:
            raise NotRegular(f"regular vector kills root {datum.roots[i]}", root=datum.roots[i])
    simple, pos = _base_of(datum, range(len(datum.roots)), reg)
    coeffs = {}
    if simple:
        basis = IntMatrix.from_columns([datum.roots[s] for s in simple], rows=datum.rank)
        for i in range(len(datum.roots)):
            coeffs[i] = solve_in_lattice(basis, datum.roots[i])
    link = {(x, y): x != y and dot(datum.coroots[x], datum.roots[y]) != 0 for x in simple for y in simple}
    comps = _components(link, simple)
    highest = []
    for comp in comps:
        cols = [simple.index(s) for s in comp]
        members = [i for i in pos if any(coeffs[i][c] for c in cols)]
        top = max(members, key=lambda i: (sum(coeffs[i]), -i))
        if not all(all(x >= y for x, y in zip(coeffs[top], coeffs[i])) for i in members):
            raise AssertionError("highest root is not dominance-maximal")
        highest.append(top)
    return BaseData(tuple(simple), tuple(pos), tuple(highest), tuple(comps), reg, coeffs)


def weyl_group(datum: RootDatum, max_rank: int = 8, max_order: int = 100_000) -> list[IntMatrix]:
    """All Weyl group elements as matrices on X_*, in BFS order from the identity.

    Generated by the simple reflections of the default base; the identity is
    first.
    """
    if datum.rank > max_rank:
        raise TooLarge(f"rank {datum.rank} exceeds Weyl enumeration guard {max_rank}")
    gens = [datum.reflection(i) for i in base_and_highest(datum).simple_roots] if datum.roots else []
    return _closure(IntMatrix.identity(datum.rank), gens, max_order)


def _closure(identity: IntMatrix, gens: Sequence[IntMatrix], max_order: int) -> list[IntMatrix]:
    out = [identity]
    seen = {identity}
    i = 0
    while i < len(out):
        w = out[i]
        for g in gens:
            x = g @ w
            if x not in seen:
                seen.add(x)
                out.append(x)
                if len(out) > max_order:
                    raise TooLarge(f"group order exceeds {max_order}")
        i += 1
    return out


def subgroup_generated_by_reflections(datum: RootDatum, indices: Iterable[int]) -> list[IntMatrix]:
    gens = [datum.reflection(i) for i in sorted(set(indices))]
    return _closure(IntMatrix.identity(datum.rank), gens, 100_000)


def classical_weyl_order(family: str, rank: int) -> int:
    family = family.upper()
    if family == "A":
        return factorial(rank + 1)
    if family in ("B", "C"):
        return 2 ** rank * factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * factorial(rank)
    if family == "G":
        return 12
    if family == "F":
        return 1152
    return {6: 51840, 7: 2903040, 8: 696729600}[rank]


@dataclass(frozen=True, order=True)
class Subsystem:
    root_indices: tuple[int, ...]

    @classmethod
    def of(cls, indices: Iterable[int]) -> "Subsystem":
        return cls(tuple(sorted(set(indices))))

    def __len__(self) -> int:
        return len(self.root_indices)

    def __contains__(self, i: int) -> bool:
        return i in self.root_indices

    def image(self, perm: Sequence[int]) -> "Subsystem":
        return Subsystem.of(perm[i] for i in self.root_indices)


def full_system(datum: RootDatum) -> Subsystem:
    return Subsystem(tuple(range(len(datum.roots))))


def check_subsystem(datum: RootDatum, sub: Subsystem) -> None:
    s = set(sub.root_indices)
    for i in s:
        if not 0 <= i < len(datum.roots):
            raise InvalidSubsystem(f"root index {i} out of range")
        if datum.negative[i] not in s:
            raise InvalidSubsystem(f"subsystem not symmetric at root {datum.roots[i]}")
    for i in s:
        for j in s:
            k = datum.sum_table.get((i, j))
            if k is not None and k not in s:
                raise InvalidSubsystem(
                    f"subsystem not closed: {datum.roots[i]} + {datum.roots[j]} is a root outside it"
                )


def closure(datum: RootDatum, indices: Iterable[int]) -> Subsystem:
    """Smallest closed symmetric subsystem containing the given roots."""
    s = set(indices)
    s |= {datum.negative[i] for i in s}
    frontier = list(s)
    while frontier:
        new = []
        cur = list(s)
        for i in frontier:
            for j in cur:
                k = datum.sum_table.get((i, j))
                if k is not None and k not in s:
                    s.add(k)
                    new.append(k)
        frontier = new
    return Subsystem.of(s)


@dataclass(frozen=True)
class CartanType:
    """Components as (family, rank); B2 and C2 are stored once as ("B", 2)."""

    components: tuple[tuple[str, int], ...]
    central_torus_rank: int = 0

    def __post_init__(self):
        norm = []
        for fam, r in self.components:
            fam = fam.upper()
            if fam in ("B", "C") and r == 2:
                fam = "B"
            elif fam in ("B", "C") and r == 1:
                fam = "A"
            elif fam == "D" and r == 3:
                fam = "A"
            elif fam == "D" and r == 2:
                norm += [("A", 1), ("A", 1)]
                continue
            valid = {"A": r >= 1, "B": r >= 2, "C": r >= 3, "D": r >= 4, "G": r == 2,
                     "F": r == 4, "E": r in (6, 7, 8)}
            if not valid.get(fam, False):
                raise ValueError(f"invalid Cartan type {fam}{r}")
            norm.append((fam, r))
        object.__setattr__(self, "components", tuple(sorted(norm)))

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        """'A1xA1', 'C2xC2', 'G2', 'A2+T1', '' or 'T2' (pure torus)."""
        text = text.replace("×", "x").replace(" ", "")
        central = 0
        if "+T" in text:
            text, t = text.split("+T")
            central = int(t)
        elif text.startswith("T") and text[1:].isdigit():
            return cls((), int(text[1:]))
        comps = []
        for part in filter(None, text.split("x")):
            part = part.replace("B2=C2", "B2")
            comps.append((part[0], int(part[1:])))
        return cls(tuple(comps), central)

    @property
    def label(self) -> str:
        parts = ["B2=C2" if c == ("B", 2) else f"{c[0]}{c[1]}" for c in self.components]
        s = "x".join(parts)
        if self.central_torus_rank:
            s = f"{s}+T{self.central_torus_rank}" if s else f"T{self.central_torus_rank}"
        return s or "T0"

    @property
    def root_count(self) -> int:
        n = 0
        for fam, r in self.components:
            n += {"A": r * (r + 1), "B": 2 * r * r, "C": 2 * r * r, "D": 2 * r * (r - 1), "G": 12,
                  "F": 48, "E": {6: 72, 7: 126, 8: 240}.get(r, 0)}[fam]
        return n

    def same_components(self, other: "CartanType") -> bool:
        return self.components == other.components

    def __str__(self) -> str:
        return self.label


def identify_component(a: list[list[int]]) -> tuple[str, int]:
    """Dynkin type of a connected Cartan matrix."""
    n = len(a)
    if n == 1:
        return ("A", 1)
    bonds = {(i, j): a[i][j] * a[j][i] for i in range(n) for j in range(n) if i < j and a[i][j]}
    if 3 in bonds.values():
        return ("G", 2)
    degree = [sum(1 for j in range(n) if j != i and a[i][j]) for i in range(n)]
    double = [e for e, v in bonds.items() if v == 2]
    if double:
        if n == 2:
            return ("B", 2)
        i, j = double[0]
        if degree[i] == 2 and degree[j] == 2:
            return ("F", 4)
        end, other = (i, j) if degree[i] == 1 else (j, i)
        # |a[end][other]| == 2 means the end node is the short root
        return ("B", n) if abs(a[end][other]) == 2 else ("C", n)
    if max(degree) <= 2:
        return ("A", n)
    center = degree.index(3)
    arms = []
    for start in (j for j in range(n) if j != center and a[center][j]):
        length, prev, cur = 1, center, start
        while True:
            nxt = [k for k in range(n) if k not in (prev, cur) and a[cur][k]]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return ("D", n)
    return ("E", n)


def cartan_type_of(datum: RootDatum, sub: Subsystem) -> CartanType:
    """Cartan type of a closed symmetric subsystem, plus its central torus rank."""
    check_subsystem(datum, sub)
    simple, _ = _base_of(datum, sub.root_indices, regular_vector(datum))
    link = {(x, y): x != y and dot(datum.coroots[x], datum.roots[y]) != 0 for x in simple for y in simple}
    comps = []
    for comp in _components(link, simple):
        a = [[dot(datum.coroots[x], datum.roots[y]) for y in comp] for x in comp]
        comps.append(identify_component(a))
    return CartanType(tuple(comps), datum.rank - len(simple))


def is_levi_subsystem(datum: RootDatum, sub: Subsystem) -> bool:
    """True iff sub = R ∩ Q-span(sub)."""
    check_subsystem(datum, sub)
    s = set(sub.root_indices)
    if s:
        sat = saturate(IntMatrix.from_columns([datum.roots[i] for i in sorted(s)], rows=datum.rank))
    else:
        sat = IntMatrix.zeros(datum.rank, 0)
    for i, a in enumerate(datum.roots):
        if i not in s and (sat.cols and solve_in_lattice(sat, a) is not None):
            return False
    return True


def closed_subsystems(datum: RootDatum, max_size: Optional[int] = None, max_roots: int = 60) -> list[Subsystem]:
    """Every closed symmetric subsystem with at most ``max_size`` roots.

    Breadth-first over closures of one added ± pair at a time; any closed S
    is reached through closures of its own subsets, which never exceed |S|.
    """
    n = len(datum.roots)
    if n > max_roots:
        raise TooLarge(f"{n} roots exceeds subsystem search guard {max_roots}")
    if max_size is None:
        max_size = n
    P = n // 2
    sums = [[-1] * n for _ in range(n)]
    for (i, j), k in datum.sum_table.items():
        sums[i][j] = k
    neg = datum.negative

    def close(mask: int, new: list[int]) -> int:
        members = [i for i in range(n) if mask >> i & 1]
        while new:
            nxt = []
            for i in new:
                for j in members:
                    k = sums[i][j]
                    if k >= 0 and not mask >> k & 1:
                        mask |= 1 << k | 1 << neg[k]
                        nxt += [k, neg[k]]
                        members += [k, neg[k]]
            new = nxt
        return mask

    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for i in range(P):
                if mask >> i & 1:
                    continue
                m = close(mask | 1 << i | 1 << neg[i], [i, neg[i]])
                if m not in found and bin(m).count("1") <= max_size:
                    found.add(m)
                    nxt.append(m)
        frontier = nxt
    subs = [Subsystem(tuple(i for i in range(n) if m >> i & 1)) for m in found]
    return sorted(subs, key=lambda s: (len(s), s.root_indices))


def closed_subsystems_of_type(datum: RootDatum, target: CartanType | str) -> list[Subsystem]:
    """All closed symmetric subsystems whose Cartan components equal ``target``'s."""
    if isinstance(target, str):
        target = CartanType.parse(target)
    size = target.root_count
    return [
        s for s in closed_subsystems(datum, max_size=size)
        if len(s) == size and cartan_type_of(datum, s).same_components(target)
    ]


def levi_subsystems(datum: RootDatum) -> list[Subsystem]:
    """All Levi subsystems R ∩ Q-span(S), over subsets S of a base and W-translates.

    Enumerated as the centralizers of rational cocharacters: every Levi
    subsystem is W-conjugate to a standard one, so we close the standard
    Levis under the Weyl group.
    """
    base = base_and_highest(datum)
    simple = base.simple_roots
    standard = set()
    for bits in product((0, 1), repeat=len(simple)):
        chosen = [s for s, b in zip(simple, bits) if b]
        if chosen:
            sat = saturate(IntMatrix.from_columns([datum.roots[s] for s in chosen], rows=datum.rank))
            idx = [i for i, a in enumerate(datum.roots) if solve_in_lattice(sat, a) is not None]
        else:
            idx = []
        standard.add(Subsystem.of(idx))
    out = set()
    for w in weyl_group(datum):
        perm = datum.root_permutation(w)
        out |= {s.image(perm) for s in standard}
    return sorted(out, key=lambda s: (len(s), s.root_indices))


def parse_datum(text: str) -> RootDatum:
    """Shorthand: 'G2:sc', 'A:2:ad', 'A2', 'C4:sc', 'torus:2', 'A1:sc+A1:sc+torus:1'."""
    factors, central = [], 0
    for part in text.split("+"):
        bits = part.strip().split(":")
        head = bits[0]
        if head.lower() in ("torus", "t"):
            central += int(bits[1]) if len(bits) > 1 else 1
            continue
        if len(head) == 1:
            if len(bits) < 2:
                raise UnsupportedType(f"missing rank in {part!r}")
            family, rank, rest = head, int(bits[1]), bits[2:]
        else:
            if head[0].upper() == "T" and head[1:].isdigit():
                central += int(head[1:])
                continue
            family, rank, rest = head[0], int(head[1:]), bits[1:]
        isogeny = rest[0] if rest else "sc"
        if family.upper() not in FAMILIES:
            raise UnsupportedType(f"family {family!r} not implemented")
        factors.append(build_root_datum(family, rank, isogeny))
    if len(factors) == 1 and central == 0:
        return factors[0]
    if not factors:
        return torus(central)
    return direct_sum(factors, central)


def dual_datum(datum: RootDatum) -> RootDatum:
    """Swap the roles of roots and coroots (the Langlands dual datum)."""
    return RootDatum(datum.rank, datum.coroots, datum.roots, f"dual({datum.label})")
