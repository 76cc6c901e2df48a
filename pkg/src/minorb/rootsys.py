"""Root systems for the simple types in Bourbaki numbering.

Everything here is exact integer combinatorics: Cartan matrices, positive
roots, the change to fundamental-weight coordinates, and the classification
of Dynkin subdiagrams.  Conventions fixed once, for every other module:

* ``cartan_matrix(typ)[i][j]`` is the pairing of the simple root ``alpha_i+1``
  with the coroot of ``alpha_j+1``, so row ``i`` holds the coordinates of
  ``alpha_i+1`` in the basis of fundamental weights.
* Roots and weights are plain integer tuples; a root is written in the
  simple-root basis, a weight in the fundamental-weight basis.
* Positive roots are listed by height and then lexicographically.
* Symmetrizers ``d`` are the minimal positive integers making
  ``cartan * diag(d)`` symmetric; ``d_i`` is proportional to half the
  squared length of ``alpha_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

_RANK_MIN = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class SimpleType:
    """A simple type: family letter A-G plus rank."""

    family: str
    rank: int

    def __post_init__(self) -> None:
        if self.family not in ("A", "B", "C", "D", "E", "F", "G"):
            raise ValueError(f"unknown family {self.family!r}")
        ok = (
            self.rank >= _RANK_MIN[self.family]
            if self.family in _RANK_MIN
            else (self.family == "E" and self.rank in (6, 7, 8))
            or (self.family == "F" and self.rank == 4)
            or (self.family == "G" and self.rank == 2)
        )
        if not ok:
            raise ValueError(f"invalid rank {self.rank} for family {self.family}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def canonicalize(typ: SimpleType) -> SimpleType:
    """Fold the coincidences C2 = B2 and D3 = A3 onto their canonical names."""
    if (typ.family, typ.rank) == ("C", 2):
        return SimpleType("B", 2)
    if (typ.family, typ.rank) == ("D", 3):
        return SimpleType("A", 3)
    return typ


def parse_type(text: str) -> SimpleType:
    """Parse a type string such as 'E8' or 'c3' (case-insensitive, canonicalized)."""
    m = re.fullmatch(r"([A-Ga-g])([0-9]+)", text.strip())
    if m is None:
        raise ValueError(f"cannot parse simple type {text!r}")
    return canonicalize(SimpleType(m.group(1).upper(), int(m.group(2))))


@lru_cache(maxsize=None)
def cartan_matrix(typ: SimpleType) -> Matrix:
    """The Cartan matrix in Bourbaki numbering."""
    n = typ.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if typ.family == "A":
        for i in range(1, n):
            bond(i, i + 1)
    elif typ.family == "B":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, aij=-2)  # alpha_n is the short root
    elif typ.family == "C":
        for i in range(1, n - 1):
            bond(i, i + 1)
        bond(n - 1, n, aji=-2)  # alpha_n is the long root
    elif typ.family == "D":
        for i in range(1, n - 2):
            bond(i, i + 1)
        bond(n - 2, n - 1)
        bond(n - 2, n)
    elif typ.family == "E":
        for i, j in ((1, 3), (2, 4), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8)):
            if j <= n:
                bond(i, j)
    elif typ.family == "F":
        bond(1, 2)
        bond(2, 3, aij=-2)  # nodes 1, 2 long; nodes 3, 4 short
        bond(3, 4)
    else:  # G2
        bond(1, 2, aji=-3)  # alpha_1 is the short root
    return tuple(tuple(row) for row in a)


@lru_cache(maxsize=None)
def symmetrizers(typ: SimpleType) -> Vector:
    """Minimal positive integers d with a[i][j] * d[j] == a[j][i] * d[i]."""
    a = cartan_matrix(typ)
    n = typ.rank
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    queue = [0]
    while queue:
        i = queue.pop()
        for j in range(n):
            if j != i and a[i][j] != 0 and d[j] is None:
                d[j] = d[i] * Fraction(a[j][i], a[i][j])
                queue.append(j)
    assert all(x is not None and x > 0 for x in d), "diagram must be connected"
    scale = lcm(*(x.denominator for x in d))
    ints = [int(x * scale) for x in d]
    g = gcd(*ints)
    out = tuple(x // g for x in ints)
    assert min(out) == 1
    return out


@lru_cache(maxsize=None)
def positive_roots(typ: SimpleType) -> tuple[Vector, ...]:
    """All positive roots, by height then lexicographically.

    Built height by height: beta + alpha_i is a root iff the alpha_i-string
    through beta continues upward, i.e. iff p - <beta, coroot_i> > 0 where p
    counts how often alpha_i can be subtracted.
    """
    a = cartan_matrix(typ)
    n = typ.rank
    layer = [tuple(int(k == i) for k in range(n)) for i in range(n)]
    found = set(layer)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                pairing = sum(beta[j] * a[j][i] for j in range(n))
                p = 0
                gamma = list(beta)
                gamma[i] -= 1
                while tuple(gamma) in found:
                    p += 1
                    gamma[i] -= 1
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    t = tuple(up)
                    if t not in found:
                        found.add(t)
                        nxt.append(t)
        layer = nxt
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def highest_root(typ: SimpleType) -> Vector:
    root = positive_roots(typ)[-1]
    assert all(
        all(c >= b for c, b in zip(root, beta)) for beta in positive_roots(typ)
    ), "highest root must dominate coefficientwise"
    return root


def dim_simple(typ: SimpleType) -> int:
    """Dimension of the simple Lie algebra: rank plus the number of roots."""
    return typ.rank + 2 * len(positive_roots(typ))


def root_to_weight(typ: SimpleType, root: Vector) -> Vector:
    """Fundamental-weight coordinates of a simple-root coordinate vector."""
    a = cartan_matrix(typ)
    n = typ.rank
    if len(root) != n:
        raise ValueError(f"expected {n} coordinates, got {len(root)}")
    return tuple(sum(a[j][i] * root[j] for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def inverse_cartan(typ: SimpleType) -> tuple[Matrix, int]:
    """det(C) * C^{-1} as an integer matrix, together with det(C)."""
    a = cartan_matrix(typ)
    n = typ.rank
    aug = [
        [Fraction(a[i][j]) for j in range(n)]
        + [Fraction(int(i == k)) for k in range(n)]
        for i in range(n)
    ]
    det = Fraction(1)
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
            det = -det
        det *= aug[col][col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    assert det.denominator == 1 and det > 0
    d = int(det)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = aug[i][n + j] * d
            assert v.denominator == 1
            row.append(int(v))
        rows.append(tuple(row))
    return tuple(rows), d


@dataclass(frozen=True)
class Component:
    """A connected piece of an induced Dynkin subdiagram.

    ``nodes[k]`` is the original node sitting at Bourbaki position ``k + 1``
    of ``typ``.  Among all structure-preserving identifications the one with
    the lexicographically largest ``nodes`` tuple is chosen, so relabelings
    are deterministic even when the component has diagram symmetries.
    """

    typ: SimpleType
    nodes: Vector

    def position_of(self, node: int) -> int:
        """1-based Bourbaki position of an original node."""
        return self.nodes.index(node) + 1


def subdiagram_components(typ: SimpleType, kept: Iterable[int]) -> tuple[Component, ...]:
    """Connected components of the subdiagram induced on the kept nodes.

    Components are listed by smallest original node.  Identification is
    structural (bond multiplicities, arrow directions, branch shapes), so
    C2 and D3 shapes come back as B2 and A3.
    """
    n = typ.rank
    nodes = sorted(set(kept))
    if any(i < 1 or i > n for i in nodes):
        raise ValueError(f"node out of range for {typ}")
    a = cartan_matrix(typ)
    keep = set(nodes)
    out = []
    seen: set[int] = set()
    for start in nodes:
        if start in seen:
            continue
        comp = _closure(start, keep, a)
        seen |= comp
        members = tuple(sorted(comp))
        ctyp = _identify_component(members, a)
        out.append(Component(ctyp, _relabel(members, a, ctyp)))
    return tuple(out)


def _closure(start: int, keep: set[int], a: Matrix) -> set[int]:
    comp = {start}
    queue = [start]
    while queue:
        u = queue.pop()
        for v in keep:
            if v not in comp and a[u - 1][v - 1] != 0:
                comp.add(v)
                queue.append(v)
    return comp


def _neighbors(u: int, members: tuple[int, ...], a: Matrix) -> list[int]:
    return [v for v in members if v != u and a[u - 1][v - 1] != 0]


def _chain_from(u: int, banned: set[int], members: tuple[int, ...], a: Matrix) -> list[int]:
    """Walk a simple chain starting at u, never entering banned nodes."""
    path = [u]
    prev = None
    while True:
        nxt = [v for v in _neighbors(path[-1], members, a) if v != prev and v not in banned]
        if not nxt:
            return path
        assert len(nxt) == 1, "not a chain"
        prev = path[-1]
        path.append(nxt[0])


def _identify_component(members: tuple[int, ...], a: Matrix) -> SimpleType:
    k = len(members)
    if k == 1:
        return SimpleType("A", 1)
    deg = {u: len(_neighbors(u, members, a)) for u in members}
    multi = [
        (u, v)
        for u in members
        for v in members
        if u < v and a[u - 1][v - 1] * a[v - 1][u - 1] > 1
    ]
    if multi:
        if len(multi) > 1 or max(deg.values()) > 2:
            raise RuntimeError("not a Dynkin diagram component")
        u, v = multi[0]
        if a[u - 1][v - 1] * a[v - 1][u - 1] == 3:
            assert k == 2
            return SimpleType("G", 2)
        if a[u - 1][v - 1] != -2:  # want alpha_v short, alpha_u long
            u, v = v, u
        short = len(_chain_from(v, {u}, members, a))
        long = k - short
        if short == 1 and long == 1:
            return SimpleType("B", 2)
        if short == 1:
            return SimpleType("B", k)
        if long == 1:
            return SimpleType("C", k)
        if short == 2 and long == 2:
            return SimpleType("F", 4)
        raise RuntimeError("not a Dynkin diagram component")
    forks = [u for u in members if deg[u] == 3]
    if not forks:
        if max(deg.values()) > 2:
            raise RuntimeError("not a Dynkin diagram component")
        return SimpleType("A", k)
    if len(forks) > 1 or max(deg.values()) > 3:
        raise RuntimeError("not a Dynkin diagram component")
    center = forks[0]
    arms = sorted(
        len(_chain_from(v, {center}, members, a)) for v in _neighbors(center, members, a)
    )
    if arms[:2] == [1, 1]:
        return SimpleType("D", k)
    if arms == [1, 2, 2]:
        return SimpleType("E", 6)
    if arms == [1, 2, 3]:
        return SimpleType("E", 7)
    if arms == [1, 2, 4]:
        return SimpleType("E", 8)
    raise RuntimeError("not a Dynkin diagram component")


def _relabel(members: tuple[int, ...], a: Matrix, ctyp: SimpleType) -> Vector:
    """Lexicographically largest image tuple among all valid identifications."""
    k = ctyp.rank
    ca = cartan_matrix(ctyp)
    # breadth-first order over canonical positions: after the first position,
    # every new one has an already-placed neighbor, which prunes hard
    order = [1]
    for p in order:
        for q in range(1, k + 1):
            if q not in order and ca[p - 1][q - 1] != 0:
                order.append(q)
    assert len(order) == k
    images: list[Vector] = []
    assignment: dict[int, int] = {}

    def extend(step: int) -> None:
        if step == k:
            images.append(tuple(assignment[p] for p in range(1, k + 1)))
            return
        p = order[step]
        for cand in members:
            if cand in assignment.values():
                continue
            if all(
                ca[p - 1][q - 1] == a[cand - 1][node - 1]
                and ca[q - 1][p - 1] == a[node - 1][cand - 1]
                for q, node in assignment.items()
            ):
                assignment[p] = cand
                extend(step + 1)
                del assignment[p]

    extend(0)
    if not images:
        raise RuntimeError("component does not match its identified type")
    return max(images)
