"""Gradings of the adjoint module by a single simple-root coefficient.

Fixing a node i grades g by the coefficient of alpha_i: g_k is spanned
by the root spaces with coefficient k, plus the Cartan at k = 0.  The
grade-one piece V(alpha_i) is the degree-one part of the nilradical of
the maximal parabolic at i; as a module over the semisimple Levi its
lowest weight vector is the root vector of alpha_i itself, so the
lowest weight is read off the Cartan row of i restricted to the kept
components.  branch_adjoint refines the grading into irreducible
summands by locating the maximal root vectors of each grade.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .parabolic import LeviData, levi_data
from .repdim import dim_irrep_product, dual_weight
from .rootsys import (
    SimpleType,
    cartan_matrix,
    dim_simple,
    highest_root,
    positive_roots,
    root_to_weight,
)

Weight = tuple[int, ...]


@dataclass(frozen=True)
class GradingReport:
    typ: SimpleType
    node: int
    dims: dict[int, int]
    max_grade: int


@dataclass(frozen=True)
class VAlphaData:
    """V(alpha_i) as a module over the semisimple Levi at node i."""

    typ: SimpleType
    node: int
    levi: LeviData
    lowest: tuple[Weight, ...]
    highest: tuple[Weight, ...]
    dim: int


@dataclass(frozen=True)
class BranchSummand:
    """One irreducible summand, a highest weight per kept component."""

    weights: tuple[Weight, ...]
    dim: int
    torus: bool = False


@dataclass(frozen=True)
class BranchReport:
    typ: SimpleType
    node: int
    grades: dict[int, tuple[BranchSummand, ...]]
    max_grade: int


def _checked_node(typ: SimpleType, node: int) -> int:
    node = int(node)
    if not 1 <= node <= typ.rank:
        raise ValueError(f"node {node} out of range for {typ}")
    return node


def grade_adjoint(typ: SimpleType, node: int) -> GradingReport:
    """Dimension of each graded piece, keyed by grade (negatives included)."""
    ix = _checked_node(typ, node) - 1
    counts = Counter(beta[ix] for beta in positive_roots(typ))
    top = highest_root(typ)[ix]
    dims = {0: typ.rank + 2 * counts.get(0, 0)}
    for k in range(1, top + 1):
        dims[k] = counts[k]
        dims[-k] = counts[k]
    assert sum(dims.values()) == dim_simple(typ)
    return GradingReport(typ, node, dims, top)


def dim_v_alpha(typ: SimpleType, node: int) -> int:
    """dim of the grade-one piece, counted directly on roots."""
    ix = _checked_node(typ, node) - 1
    return sum(1 for beta in positive_roots(typ) if beta[ix] == 1)


def lowest_weight_of_v_alpha(typ: SimpleType, node: int) -> VAlphaData:
    """Lowest and highest weights of V(alpha_i), with its Weyl dimension.

    The dimension here comes from the Weyl product over the Levi, not
    from counting grade-one roots, so the two routes check each other.
    """
    node = _checked_node(typ, node)
    levi = levi_data(typ, [node])
    row = cartan_matrix(typ)[node - 1]
    lowest = tuple(
        tuple(row[orig - 1] for orig in comp.nodes) for comp in levi.components
    )
    highest = tuple(
        dual_weight(comp.typ, tuple(-x for x in low))
        for comp, low in zip(levi.components, lowest)
    )
    dim = dim_irrep_product(
        (comp.typ, w) for comp, w in zip(levi.components, highest)
    )
    return VAlphaData(typ, node, levi, lowest, highest, dim)


def branch_adjoint(typ: SimpleType, node: int) -> BranchReport:
    """Irreducible summands of every nonnegative grade over the Levi.

    Grade zero is the Levi itself: the adjoint of each kept component
    plus a one-dimensional center line.  For k >= 1 the summands are
    generated by the roots of grade k that no kept node can raise, and
    their highest weights are those roots restricted to the components.
    Negative grades are the duals of the positive ones and are omitted.
    """
    node = _checked_node(typ, node)
    levi = levi_data(typ, [node])
    comps = levi.components
    grading = grade_adjoint(typ, node)
    pos = positive_roots(typ)
    posset = set(pos)
    ix = node - 1
    kept_ix = [i - 1 for i in levi.kept]

    zero = []
    for ci, comp in enumerate(comps):
        adj = root_to_weight(comp.typ, highest_root(comp.typ))
        weights = tuple(
            adj if cj == ci else (0,) * other.typ.rank
            for cj, other in enumerate(comps)
        )
        zero.append(BranchSummand(weights, dim_simple(comp.typ)))
    zero.append(BranchSummand(tuple((0,) * c.typ.rank for c in comps), 1, torus=True))
    grades = {0: tuple(zero)}
    assert sum(s.dim for s in grades[0]) == grading.dims[0]

    for k in range(1, grading.max_grade + 1):
        tops = []
        for beta in pos:
            if beta[ix] != k:
                continue
            if any(_raised(beta, j) in posset for j in kept_ix):
                continue
            tops.append((sum(beta), beta))
        tops.sort(reverse=True)
        summands = []
        for _, beta in tops:
            m = root_to_weight(typ, beta)
            weights = tuple(
                tuple(m[orig - 1] for orig in comp.nodes) for comp in comps
            )
            dim = dim_irrep_product(
                (comp.typ, w) for comp, w in zip(comps, weights)
            )
            summands.append(BranchSummand(weights, dim))
        assert sum(s.dim for s in summands) == grading.dims[k]
        grades[k] = tuple(summands)
    return BranchReport(typ, node, grades, grading.max_grade)


def _raised(beta: Weight, j: int) -> Weight:
    return beta[:j] + (beta[j] + 1,) + beta[j + 1 :]
