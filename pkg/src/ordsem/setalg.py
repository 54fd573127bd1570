"""Subset algebra over a finite ordered semigroup.

Subsets are plain int bitmasks (bit i = element i), so union, intersection,
containment and equality are single bitwise operations.  All functions are
pure and take the owning structure explicitly.
"""

from __future__ import annotations

import enum
from typing import Iterator

from .core import OrderedSemigroup, iter_bits, zero_of

Subset = int


class IdealKind(enum.Enum):
    LEFT = "left"
    RIGHT = "right"
    TWO_SIDED = "two-sided"


def product(s: OrderedSemigroup, a: Subset, b: Subset) -> Subset:
    """Complex product {x*y | x in A, y in B}; empty if either side is."""
    out = 0
    for x in iter_bits(a):
        row = s.cayley[x]
        for y in iter_bits(b):
            out |= 1 << row[y]
    return out


def down_closure(s: OrderedSemigroup, a: Subset) -> Subset:
    """All elements lying below some member of A."""
    out = 0
    for x in iter_bits(a):
        out |= s.below[x]
    return out


def is_ideal(s: OrderedSemigroup, a: Subset, kind: IdealKind) -> bool:
    """Nonempty, product-absorbing on the required side(s), downward closed."""
    if a == 0:
        return False
    if down_closure(s, a) != a:
        return False
    full = s.universe
    if kind is not IdealKind.RIGHT and product(s, full, a) & ~a:
        return False
    if kind is not IdealKind.LEFT and product(s, a, full) & ~a:
        return False
    return True


def annihilator(s: OrderedSemigroup, a: Subset, side: IdealKind) -> Subset:
    """Elements sending all of A to the zero (left: x*A, right: A*x).

    Defined only on structures with a zero and for nonempty A; the result
    always contains the zero itself.
    """
    if side is IdealKind.TWO_SIDED:
        raise ValueError("annihilator side must be LEFT or RIGHT")
    z = zero_of(s)
    if z is None:
        raise ValueError("annihilator undefined without zero")
    if a == 0:
        raise ValueError("annihilator of the empty set is undefined")
    out = 0
    members = list(iter_bits(a))
    for x in range(s.size):
        if side is IdealKind.LEFT:
            ok = all(s.cayley[x][m] == z for m in members)
        else:
            ok = all(s.cayley[m][x] == z for m in members)
        if ok:
            out |= 1 << x
    return out


def left_annihilator(s: OrderedSemigroup, a: Subset) -> Subset:
    return annihilator(s, a, IdealKind.LEFT)


def right_annihilator(s: OrderedSemigroup, a: Subset) -> Subset:
    return annihilator(s, a, IdealKind.RIGHT)


def enumerate_ideals(s: OrderedSemigroup, kind: IdealKind) -> list[Subset]:
    """All ideals of the given kind, in ascending bitmask order."""
    return [a for a in range(1, s.universe + 1) if is_ideal(s, a, kind)]


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0, in ascending numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


def is_ideal_of_subsemigroup(
    s: OrderedSemigroup,
    t: Subset,
    l: Subset,
    kind: IdealKind = IdealKind.TWO_SIDED,
) -> bool:
    """Is L an ideal of the subsemigroup T, under the order inherited from S?

    T must be closed under the product of S; a witness pair is reported
    otherwise.  Membership and downward closure are tested relative to T.
    """
    for x in iter_bits(t):
        row = s.cayley[x]
        for y in iter_bits(t):
            if not (t >> row[y]) & 1:
                raise ValueError(
                    f"subset is not product-closed: "
                    f"{s.names[x]}*{s.names[y]} = {s.names[row[y]]} escapes"
                )
    if l == 0 or l & ~t:
        return False
    if kind is not IdealKind.RIGHT and product(s, t, l) & ~l:
        return False
    if kind is not IdealKind.LEFT and product(s, l, t) & ~l:
        return False
    for x in iter_bits(l):
        if s.below[x] & t & ~l:
            return False
    return True
