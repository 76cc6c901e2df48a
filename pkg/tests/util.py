"""Shared fixtures-by-import for the test suite: type inventories and closed forms."""

from minorb import SimpleType


def classical(max_rank: int) -> list[SimpleType]:
    out = [SimpleType("A", n) for n in range(1, max_rank + 1)]
    out += [SimpleType("B", n) for n in range(2, max_rank + 1)]
    out += [SimpleType("C", n) for n in range(3, max_rank + 1)]
    out += [SimpleType("D", n) for n in range(4, max_rank + 1)]
    return out


EXCEPTIONAL = [
    SimpleType("E", 6),
    SimpleType("E", 7),
    SimpleType("E", 8),
    SimpleType("F", 4),
    SimpleType("G", 2),
]

# the table row inventory: classical families to rank 12 plus the exceptionals
ALL_TYPES = classical(12) + EXCEPTIONAL

SMALL_TYPES = [t for t in ALL_TYPES if t.rank <= 6]
MID_TYPES = [t for t in ALL_TYPES if t.rank <= 8]


def dim_closed_form(typ: SimpleType) -> int:
    """Dimension of the algebra from the classical closed forms, no root data."""
    n = typ.rank
    if typ.family == "A":
        return n * (n + 2)
    if typ.family in ("B", "C"):
        return n * (2 * n + 1)
    if typ.family == "D":
        return n * (2 * n - 1)
    return {("E", 6): 78, ("E", 7): 133, ("E", 8): 248, ("F", 4): 52, ("G", 2): 14}[
        (typ.family, n)
    ]
