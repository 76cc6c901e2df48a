"""The subgroup-codimension invariants m, r, and d of a simple group.

m is the smallest dimension of a highest weight vector orbit among the
fundamental modules, i.e. min over nodes of dim u + 1 for the maximal
parabolic at that node.  r is the smallest codimension of a proper
reductive subgroup; the minimizing subgroup for each type is catalogued
and only its codimension is computed here.  d is the smallest
codimension of a proper subgroup acting with a dense orbit on some
G / P_lambda, obtained as the minimum over three certificate families:

  * the reductive witness itself,
  * the refined bound at a node i (Sukhanov's subalgebra theorem
    applied inside the Levi): dim u + 1 + min(dim V(alpha_i), r(L')),
  * the crude bound dim u(S) + 2 for a support S of two or more nodes.

Since dim u(S) grows strictly with S, the crude family is minimized on
pairs; compute_d(prune=False) sweeps every support as a cross-check.
Each value of d is certified by an explicit subgroup of that
codimension, reductive or of the form H' * U(S) inside a parabolic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple, Union

from .grading import dim_v_alpha
from .parabolic import closure_is_smooth, levi_data
from .rootsys import Component, SimpleType, canonicalize, dim_simple


@dataclass(frozen=True)
class Torus:
    """A central torus factor of a witness subgroup."""

    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("torus rank must be positive")

    def __str__(self) -> str:
        return f"T{self.rank}"


Factor = Union[SimpleType, Torus]


def _dim_factor(factor: Factor) -> int:
    return factor.rank if isinstance(factor, Torus) else dim_simple(factor)


def _product_name(factors: tuple[Factor, ...]) -> str:
    return " x ".join(str(f) for f in factors)


@dataclass(frozen=True)
class ReductiveWitness:
    """A maximal reductive subgroup of minimal codimension."""

    ambient: SimpleType
    factors: tuple[Factor, ...]

    @property
    def dim_h(self) -> int:
        return sum(_dim_factor(f) for f in self.factors)

    @property
    def codim(self) -> int:
        return dim_simple(self.ambient) - self.dim_h

    def __str__(self) -> str:
        return _product_name(self.factors)


@dataclass(frozen=True)
class BoundCertificate:
    """One evaluated upper bound for d, with its provenance inside G."""

    source: str  # "reductive" | "refined" | "crude"
    nodes: tuple[int, ...]
    value: int
    detail: str


@dataclass(frozen=True)
class ExistenceWitness:
    """A subgroup attaining d: reductive factors, optionally times u(S)."""

    ambient: SimpleType
    reductive_factors: tuple[Factor, ...]
    unipotent_support: tuple[int, ...] | None

    @property
    def dim_h(self) -> int:
        dim = sum(_dim_factor(f) for f in self.reductive_factors)
        if self.unipotent_support is not None:
            dim += levi_data(self.ambient, self.unipotent_support).dim_u
        return dim

    @property
    def codim(self) -> int:
        return dim_simple(self.ambient) - self.dim_h

    def __str__(self) -> str:
        name = _product_name(self.reductive_factors)
        if self.unipotent_support is not None:
            nodes = ",".join(str(i) for i in self.unipotent_support)
            name = f"{name} . U({nodes})"
        return name


class MResult(NamedTuple):
    m: int
    p: int
    argmin: tuple[int, ...]


class RResult(NamedTuple):
    r: int
    witness: ReductiveWitness


class DResult(NamedTuple):
    d: int
    certificates: tuple[BoundCertificate, ...]
    witness: ExistenceWitness


def compute_m(typ: SimpleType) -> MResult:
    """Minimal highest weight orbit dimension and the nodes attaining it."""
    typ = canonicalize(typ)
    dims = {i: levi_data(typ, [i]).dim_u + 1 for i in range(1, typ.rank + 1)}
    m = min(dims.values())
    return MResult(m, m - 1, tuple(i for i, v in dims.items() if v == m))


def _minimal_reductive(typ: SimpleType) -> tuple[Factor, ...]:
    family, n = typ.family, typ.rank
    if family == "A":
        if n == 1:
            return (Torus(1),)
        if n == 2:
            return (SimpleType("A", 1), Torus(1))
        if n == 3:
            return (SimpleType("B", 2),)
        return (SimpleType("A", n - 1), Torus(1))
    if family == "B":
        if n == 2:
            return (SimpleType("A", 1), SimpleType("A", 1))
        return (canonicalize(SimpleType("D", n)),)
    if family == "C":
        return (canonicalize(SimpleType("C", n - 1)), SimpleType("A", 1))
    if family == "D":
        return (SimpleType("B", n - 1),)
    if family == "F":
        return (SimpleType("B", 4),)
    if family == "G":
        return (SimpleType("A", 2),)
    return {
        6: (SimpleType("F", 4),),
        7: (SimpleType("E", 6), Torus(1)),
        8: (SimpleType("E", 7), SimpleType("A", 1)),
    }[n]


def compute_r(typ: SimpleType) -> RResult:
    """Codimension of the minimal proper reductive subgroup, with witness."""
    typ = canonicalize(typ)
    witness = ReductiveWitness(typ, _minimal_reductive(typ))
    return RResult(witness.codim, witness)


def r_of_levi(components) -> int | float:
    """min of r over the simple factors; infinity when there are none."""
    values = [
        compute_r(c.typ if isinstance(c, Component) else c).r for c in components
    ]
    return min(values, default=math.inf)


def sukhanov_refined(typ: SimpleType, node: int) -> BoundCertificate:
    """The refined bound at one node, as a certificate with its arithmetic."""
    typ = canonicalize(typ)
    data = levi_data(typ, [node])
    head = data.dim_u + 1
    in_module = dim_v_alpha(typ, node)
    in_levi = r_of_levi(data.components)
    value = head + min(in_module, in_levi)
    detail = (
        f"(dim u + 1) + min(dim V(alpha_{node}), r(Levi)) = "
        f"{head} + min({in_module}, {in_levi})"
    )
    return BoundCertificate("refined", (node,), value, detail)


def _existence_witness(typ: SimpleType) -> ExistenceWitness:
    if typ == SimpleType("E", 7):
        return ExistenceWitness(typ, (SimpleType("B", 5),), (1,))
    if typ == SimpleType("E", 8):
        return ExistenceWitness(typ, (SimpleType("E", 6),), (7, 8))
    return ExistenceWitness(typ, compute_r(typ).witness.factors, None)


_SOURCE_ORDER = {"reductive": 0, "refined": 1, "crude": 2}


def compute_d(typ: SimpleType, prune: bool = True) -> DResult:
    """Minimum over the certificate families, with the attaining witness.

    prune=True evaluates the crude family on pairs only, which suffices
    because dim u(S) is strictly increasing in S; prune=False sweeps all
    2^rank supports and must give the same result.
    """
    typ = canonicalize(typ)
    n = typ.rank
    r_value, r_witness = compute_r(typ)
    candidates = [
        BoundCertificate("reductive", (), r_value, f"H = {r_witness}")
    ]
    candidates.extend(sukhanov_refined(typ, i) for i in range(1, n + 1))
    for size in [2] if prune else range(2, n + 1):
        for nodes in combinations(range(1, n + 1), size):
            u = levi_data(typ, nodes).dim_u
            candidates.append(
                BoundCertificate("crude", nodes, u + 2, f"dim u(S) + 2 = {u} + 2")
            )
    d = min(c.value for c in candidates)
    certificates = tuple(
        sorted(
            (c for c in candidates if c.value == d),
            key=lambda c: (_SOURCE_ORDER[c.source], c.nodes),
        )
    )
    witness = _existence_witness(typ)
    assert witness.codim == d
    return DResult(d, certificates, witness)


def adjoint_nullcone_dim(typ: SimpleType) -> int:
    """Dimension of the nilpotent cone of g: dim g minus the rank."""
    typ = canonicalize(typ)
    return dim_simple(typ) - typ.rank


@dataclass(frozen=True)
class InvariantReport:
    typ: SimpleType
    dim: int
    m: MResult
    r: RResult
    d: DResult
    d_equals_r: bool
    smooth_fundamentals: tuple[int, ...]


def full_report(typ: SimpleType) -> InvariantReport:
    """All three invariants plus the fundamental smoothness sweep."""
    typ = canonicalize(typ)
    m = compute_m(typ)
    r = compute_r(typ)
    d = compute_d(typ)
    assert m.m <= d.d <= r.r
    smooth = tuple(
        i
        for i in range(1, typ.rank + 1)
        if closure_is_smooth(typ, tuple(int(k == i) for k in range(1, typ.rank + 1)))
    )
    return InvariantReport(
        typ, dim_simple(typ), m, r, d, d.d == r.r, smooth
    )
