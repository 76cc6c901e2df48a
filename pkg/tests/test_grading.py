"""Adjoint gradings, grade-one modules, and branch decompositions."""

import pytest

from minorb import (
    branch_adjoint,
    dim_simple,
    dim_v_alpha,
    grade_adjoint,
    highest_root,
    levi_data,
    lowest_weight_of_v_alpha,
    parse_type,
)

from util import MID_TYPES


def test_grading_pinned_small():
    a1 = grade_adjoint(parse_type("A1"), 1)
    assert a1.dims == {0: 1, 1: 1, -1: 1} and a1.max_grade == 1
    b2 = grade_adjoint(parse_type("B2"), 2)
    assert b2.dims == {0: 4, 1: 2, -1: 2, 2: 1, -2: 1}
    b2s = grade_adjoint(parse_type("B2"), 1)
    assert b2s.dims == {0: 4, 1: 3, -1: 3}


def test_grading_e8_node7():
    """The published grading with graded dimensions 82, 54, 27, 2."""
    rep = grade_adjoint(parse_type("E8"), 7)
    assert rep.max_grade == 3
    assert rep.dims == {0: 82, 1: 54, -1: 54, 2: 27, -2: 27, 3: 2, -3: 2}


@pytest.mark.parametrize("typ", MID_TYPES, ids=str)
def test_grading_properties(typ):
    for node in range(1, typ.rank + 1):
        rep = grade_adjoint(typ, node)
        assert rep.max_grade == highest_root(typ)[node - 1]
        assert set(rep.dims) == set(range(-rep.max_grade, rep.max_grade + 1))
        assert sum(rep.dims.values()) == dim_simple(typ)
        assert all(rep.dims[k] == rep.dims[-k] for k in rep.dims)
        assert rep.dims[1] == dim_v_alpha(typ, node)
        positive_part = sum(rep.dims[k] for k in rep.dims if k > 0)
        assert positive_part == levi_data(typ, [node]).dim_u


@pytest.mark.parametrize("typ", MID_TYPES, ids=str)
def test_v_alpha_weyl_dimension_matches_root_count(typ):
    """Weyl product over the Levi against the direct grade-one root count."""
    for node in range(1, typ.rank + 1):
        data = lowest_weight_of_v_alpha(typ, node)
        assert data.dim == dim_v_alpha(typ, node)


# Lowest weights of V(alpha_i) from the published case analysis, given
# per kept component in that component's own Bourbaki coordinates.
V_ALPHA_PINNED = [
    ("E8", 1, ["D7"], ((0, 0, 0, 0, 0, -1, 0),), ((0, 0, 0, 0, 0, 0, 1),), 64),
    ("E8", 7, ["E6", "A1"], ((-1, 0, 0, 0, 0, 0), (-1,)),
     ((0, 0, 0, 0, 0, 1), (1,)), 54),
    ("E8", 8, ["E7"], ((0, 0, 0, 0, 0, 0, -1),), ((0, 0, 0, 0, 0, 0, 1),), 56),
    ("E7", 1, ["D6"], ((0, 0, 0, 0, -1, 0),), ((0, 0, 0, 0, 1, 0),), 32),
    ("E7", 7, ["E6"], ((-1, 0, 0, 0, 0, 0),), ((0, 0, 0, 0, 0, 1),), 27),
    ("E6", 1, ["D5"], ((0, 0, 0, -1, 0),), ((0, 0, 0, 0, 1),), 16),
    ("E6", 2, ["A5"], ((0, 0, -1, 0, 0),), ((0, 0, 1, 0, 0),), 20),
    ("F4", 1, ["C3"], ((0, 0, -1),), ((0, 0, 1),), 14),
    ("A1", 1, [], (), (), 1),
]


@pytest.mark.parametrize(
    "name,node,shapes,lowest,highest,dim", V_ALPHA_PINNED, ids=lambda v: str(v)
)
def test_v_alpha_pinned(name, node, shapes, lowest, highest, dim):
    data = lowest_weight_of_v_alpha(parse_type(name), node)
    assert [str(c.typ) for c in data.levi.components] == shapes
    assert data.lowest == lowest
    assert data.highest == highest
    assert data.dim == dim


def test_branch_e8_node7():
    """Grade-by-grade summands of the published rank-eight decomposition."""
    rep = branch_adjoint(parse_type("E8"), 7)
    assert rep.max_grade == 3
    zero = rep.grades[0]
    assert [(s.weights, s.dim, s.torus) for s in zero] == [
        (((0, 1, 0, 0, 0, 0), (0,)), 78, False),
        (((0, 0, 0, 0, 0, 0), (2,)), 3, False),
        (((0, 0, 0, 0, 0, 0), (0,)), 1, True),
    ]
    assert [(s.weights, s.dim) for s in rep.grades[1]] == [
        (((0, 0, 0, 0, 0, 1), (1,)), 54)
    ]
    assert [(s.weights, s.dim) for s in rep.grades[2]] == [
        (((1, 0, 0, 0, 0, 0), (0,)), 27)
    ]
    assert [(s.weights, s.dim) for s in rep.grades[3]] == [
        (((0, 0, 0, 0, 0, 0), (1,)), 2)
    ]


def test_branch_e7_node1():
    rep = branch_adjoint(parse_type("E7"), 1)
    assert rep.max_grade == 2
    assert [(s.weights, s.dim) for s in rep.grades[1]] == [
        (((0, 0, 0, 0, 1, 0),), 32)
    ]
    assert [(s.weights, s.dim) for s in rep.grades[2]] == [(((0,) * 6,), 1)]


@pytest.mark.parametrize("n", [3, 4, 6], ids=lambda n: f"C{n}")
def test_branch_symplectic_node1(n):
    rep = branch_adjoint(parse_type(f"C{n}"), 1)
    assert rep.max_grade == 2
    # the Levi is C_{n-1}; for n = 3 it appears in its B2 labeling,
    # where the four-dimensional module sits at omega_2
    std = (0, 1) if n == 3 else (1,) + (0,) * (n - 2)
    assert [(s.weights, s.dim) for s in rep.grades[1]] == [((std,), 2 * n - 2)]
    assert [s.dim for s in rep.grades[2]] == [1]


@pytest.mark.parametrize("typ", MID_TYPES, ids=str)
def test_branch_totals(typ):
    for node in range(1, typ.rank + 1):
        rep = branch_adjoint(typ, node)
        grading = grade_adjoint(typ, node)
        assert set(rep.grades) == set(range(grading.max_grade + 1))
        for k, summands in rep.grades.items():
            assert sum(s.dim for s in summands) == grading.dims[k]
            torus_lines = [s for s in summands if s.torus]
            assert len(torus_lines) == (1 if k == 0 else 0)


def test_node_out_of_range():
    with pytest.raises(ValueError):
        grade_adjoint(parse_type("A2"), 3)
    with pytest.raises(ValueError):
        dim_v_alpha(parse_type("A2"), 0)
