"""Weyl dimension arithmetic against published tables and closed forms."""

import math
from fractions import Fraction
from itertools import product

import pytest

from minorb import (
    dim_irrep,
    dim_irrep_product,
    dim_simple,
    dual_weight,
    highest_root,
    parse_type,
    positive_roots,
    root_to_weight,
    symmetrizers,
    weyl_vector,
)

from util import ALL_TYPES, SMALL_TYPES


def fund(typ, i):
    """Fundamental weight omega_i as a coordinate tuple."""
    return tuple(int(k == i) for k in range(1, typ.rank + 1))


# Fundamental-module dimensions from the published case analysis.
PINNED_DIMS = [
    ("A1", (1,), 2),
    ("A1", (2,), 3),
    ("A2", (1, 1), 8),
    ("A5", (0, 0, 1, 0, 0), 20),
    ("A6", (0, 0, 1, 0, 0, 0), 35),
    ("B2", (1, 0), 5),
    ("B2", (0, 1), 4),
    ("B3", (0, 0, 1), 8),
    ("B4", (0, 0, 0, 1), 16),
    ("C3", (1, 0, 0), 6),
    ("C3", (0, 1, 0), 14),
    ("C3", (0, 0, 1), 14),
    ("D4", (1, 0, 0, 0), 8),
    ("D4", (0, 0, 1, 0), 8),
    ("D4", (0, 0, 0, 1), 8),
    ("D5", (0, 0, 0, 0, 1), 16),
    ("D6", (0, 0, 0, 0, 1, 0), 32),
    ("D7", (0, 0, 0, 0, 0, 0, 1), 64),
    ("E6", (1, 0, 0, 0, 0, 0), 27),
    ("E6", (0, 0, 0, 0, 0, 1), 27),
    ("E7", (1, 0, 0, 0, 0, 0, 0), 133),
    ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
    ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
    ("F4", (1, 0, 0, 0), 52),
    ("F4", (0, 0, 0, 1), 26),
    ("G2", (1, 0), 7),
    ("G2", (0, 1), 14),
]


@pytest.mark.parametrize("name,weight,expected", PINNED_DIMS, ids=lambda v: str(v))
def test_pinned_dimensions(name, weight, expected):
    assert dim_irrep(parse_type(name), weight) == expected


@pytest.mark.parametrize("typ", ALL_TYPES, ids=str)
def test_adjoint_dimension(typ):
    """The highest root generates the adjoint module."""
    lam = root_to_weight(typ, highest_root(typ))
    assert dim_irrep(typ, lam) == dim_simple(typ)


@pytest.mark.parametrize("typ", ALL_TYPES, ids=str)
def test_standard_module_closed_form(typ):
    n = typ.rank
    expected = {"A": n + 1, "B": 2 * n + 1, "C": 2 * n, "D": 2 * n}.get(typ.family)
    if expected is None:
        return
    assert dim_irrep(typ, fund(typ, 1)) == expected


@pytest.mark.parametrize("typ", [t for t in ALL_TYPES if t.family == "A"], ids=str)
def test_exterior_powers_of_standard(typ):
    """For A_n every fundamental module is an exterior power of K^(n+1)."""
    for i in range(1, typ.rank + 1):
        assert dim_irrep(typ, fund(typ, i)) == math.comb(typ.rank + 1, i)


@pytest.mark.parametrize(
    "typ", [t for t in ALL_TYPES if t.family in "BD"], ids=str
)
def test_spin_module_dimensions(typ):
    n = typ.rank
    if typ.family == "B":
        assert dim_irrep(typ, fund(typ, n)) == 2**n
    else:
        assert dim_irrep(typ, fund(typ, n - 1)) == 2 ** (n - 1)
        assert dim_irrep(typ, fund(typ, n)) == 2 ** (n - 1)


@pytest.mark.parametrize("typ", ALL_TYPES, ids=str)
def test_trivial_and_weyl_vector(typ):
    assert dim_irrep(typ, (0,) * typ.rank) == 1
    # dim V_rho = 2^(number of positive roots): every factor doubles.
    assert dim_irrep(typ, weyl_vector(typ)) == 2 ** len(positive_roots(typ))


@pytest.mark.parametrize("typ", SMALL_TYPES, ids=str)
def test_duality_preserves_dimension(typ):
    n = typ.rank
    bound = 3 if n <= 3 else 2
    for w in product(range(bound), repeat=n):
        assert dim_irrep(typ, w) == dim_irrep(typ, dual_weight(typ, w))


def test_dual_weight_involutions():
    a3 = parse_type("A3")
    assert dual_weight(a3, (1, 0, 0)) == (0, 0, 1)
    assert dual_weight(a3, (2, 1, 0)) == (0, 1, 2)
    d7 = parse_type("D7")
    assert dual_weight(d7, (0, 0, 0, 0, 0, 1, 0)) == (0, 0, 0, 0, 0, 0, 1)
    d6 = parse_type("D6")
    assert dual_weight(d6, (0, 0, 0, 0, 1, 0)) == (0, 0, 0, 0, 1, 0)
    e6 = parse_type("E6")
    assert dual_weight(e6, (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    assert dual_weight(e6, (0, 1, 0, 0, 0, 0)) == (0, 1, 0, 0, 0, 0)
    b4 = parse_type("B4")
    assert dual_weight(b4, (1, 2, 3, 4)) == (1, 2, 3, 4)


@pytest.mark.parametrize("typ", SMALL_TYPES, ids=str)
def test_dual_weight_is_involution(typ):
    for w in product(range(2), repeat=typ.rank):
        assert dual_weight(typ, dual_weight(typ, w)) == w


@pytest.mark.parametrize("typ", ["B3", "C4", "F4", "G2"], ids=str)
def test_dimension_ignores_symmetrizer_scale(typ):
    """Rescaling the invariant form leaves the Weyl quotient unchanged."""
    typ = parse_type(typ)
    d = symmetrizers(typ)
    for w in [(1,) * typ.rank, fund(typ, 1), fund(typ, typ.rank)]:
        value = Fraction(1)
        for beta in positive_roots(typ):
            shifted = sum((w[j] + 1) * c * 2 * d[j] for j, c in enumerate(beta))
            plain = sum(c * 2 * d[j] for j, c in enumerate(beta))
            value *= Fraction(shifted, plain)
        assert value == dim_irrep(typ, w)


def test_product_dimensions():
    a1 = parse_type("A1")
    d5 = parse_type("D5")
    assert dim_irrep_product([]) == 1
    assert dim_irrep_product([(a1, (1,)), (a1, (2,))]) == 6
    assert dim_irrep_product([(d5, (0, 0, 0, 0, 1)), (a1, (1,))]) == 32


def test_rejects_bad_weights():
    a2 = parse_type("A2")
    with pytest.raises(ValueError):
        dim_irrep(a2, (1, -1))
    with pytest.raises(ValueError):
        dim_irrep(a2, (1, 0, 0))
    with pytest.raises(ValueError):
        dual_weight(a2, (1,))
