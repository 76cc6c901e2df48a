"""Standard parabolics, Levi decompositions, and highest-weight orbits.

A standard parabolic subalgebra is determined by the set of simple nodes
it removes: the Levi factor is the reductive subalgebra on the kept
nodes plus the full Cartan, and the nilradical u is spanned by the
positive root spaces whose roots involve a removed node.  Dimensions
are pure root counts, cross-checked against the bookkeeping identity

    dim g = dim [l, l] + #removed + 2 dim u.

The orbit of a highest weight vector in the irreducible module V_lambda
is a cone over G/P_lambda, where P_lambda removes exactly the support
of lambda, so its dimension is dim u + 1.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from math import gcd

from .repdim import Weight, dim_irrep
from .rootsys import (
    Component,
    SimpleType,
    dim_simple,
    positive_roots,
    subdiagram_components,
)


@dataclass(frozen=True)
class LeviData:
    """Dimension data of the parabolic that removes the given nodes."""

    typ: SimpleType
    removed: tuple[int, ...]
    kept: tuple[int, ...]
    components: tuple[Component, ...]
    dim_levi_ss: int
    dim_u: int

    @property
    def dim_levi(self) -> int:
        return self.dim_levi_ss + len(self.removed)

    @property
    def dim_parabolic(self) -> int:
        return self.dim_levi + self.dim_u


def _normalized_nodes(typ: SimpleType, removed: Iterable[int]) -> tuple[int, ...]:
    nodes = sorted({int(i) for i in removed})
    if nodes and not (1 <= nodes[0] and nodes[-1] <= typ.rank):
        raise ValueError(f"removed nodes {nodes} out of range for {typ}")
    return tuple(nodes)


def levi_data(typ: SimpleType, removed: Iterable[int]) -> LeviData:
    rem = _normalized_nodes(typ, removed)
    rem_ix = [i - 1 for i in rem]
    kept = tuple(i for i in range(1, typ.rank + 1) if i not in rem)
    components = subdiagram_components(typ, kept)
    dim_ss = sum(dim_simple(c.typ) for c in components)
    dim_u = sum(1 for beta in positive_roots(typ) if any(beta[i] for i in rem_ix))
    assert dim_simple(typ) == dim_ss + len(rem) + 2 * dim_u
    return LeviData(typ, rem, kept, components, dim_ss, dim_u)


def dim_u_by_accounting(typ: SimpleType, removed: Iterable[int]) -> int:
    """Nilradical dimension recovered from the bookkeeping identity alone.

    Counts no roots of g: it only needs the semisimple dimensions of the
    kept components, so it serves as an independent route to dim u.
    """
    rem = _normalized_nodes(typ, removed)
    kept = [i for i in range(1, typ.rank + 1) if i not in rem]
    dim_ss = sum(dim_simple(c.typ) for c in subdiagram_components(typ, kept))
    q, r = divmod(dim_simple(typ) - dim_ss - len(rem), 2)
    assert r == 0
    return q


def _checked_nonzero_dominant(typ: SimpleType, weight: Iterable[int]) -> Weight:
    w = tuple(int(c) for c in weight)
    if len(w) != typ.rank:
        raise ValueError(f"weight length {len(w)} does not match rank of {typ}")
    if any(c < 0 for c in w):
        raise ValueError(f"weight {w} is not dominant")
    if not any(w):
        raise ValueError("weight must be nonzero")
    return w


def parabolic_of_weight(typ: SimpleType, weight: Iterable[int]) -> LeviData:
    """The stabilizer parabolic of a highest weight line: removes supp(lambda)."""
    w = _checked_nonzero_dominant(typ, weight)
    return levi_data(typ, [i + 1 for i, c in enumerate(w) if c])


def dim_min_orbit(typ: SimpleType, weight: Iterable[int]) -> int:
    """Dimension of the cone of highest weight vectors in V_lambda."""
    return parabolic_of_weight(typ, weight).dim_u + 1


def orbit_type(typ: SimpleType, weight: Iterable[int]) -> tuple[Weight, int]:
    """Primitive weight and multiplier: lambda = k * lambda_0 with gcd one.

    All weights k * lambda_0 share the same highest weight orbit shape;
    only the embedding module V_lambda changes with k.
    """
    w = _checked_nonzero_dominant(typ, weight)
    k = gcd(*w)
    return tuple(c // k for c in w), k


def closure_is_smooth(typ: SimpleType, weight: Iterable[int]) -> bool:
    """Whether the orbit closure in V_lambda is smooth at the origin.

    The closure is the cone over the projective orbit; it is smooth
    exactly when it is a linear subspace, i.e. all of V_lambda.
    """
    w = _checked_nonzero_dominant(typ, weight)
    return dim_min_orbit(typ, w) == dim_irrep(typ, w)
