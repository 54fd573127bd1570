"""Machine checks for the annihilator/ideal claims, with counterexample witnesses.

Each check quantifies over an explicit universe (subsets, ideals, order
pairs) and reports pass/fail plus the universe size, so coverage itself is
assertable.  Checks that need a zero return not-applicable on zero-free
structures instead of failing.

Witness dictionaries map role names to values: ``frozenset`` of element
indices for subsets, ``int`` for single elements, ``str`` for tags.  Every
fail witness re-verifies through the setalg operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .core import OrderedSemigroup, iter_bits, zero_of
from .setalg import (
    IdealKind,
    down_closure,
    enumerate_ideals,
    is_ideal,
    is_ideal_of_subsemigroup,
    left_annihilator,
    product,
    right_annihilator,
    submasks,
)

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"

#: Claim identifiers in fixed report order.
CLAIM_IDS = (
    "1.1.1",
    "1.1.2",
    "1.1.4",
    "schwarz.a",
    "schwarz.b",
    "schwarz.c",
    "schwarz.simple",
    "remark",
    "2.15.4",
    "2.15.4.left",
)

_SCHWARZ_IDS = ("schwarz.a", "schwarz.b", "schwarz.c", "schwarz.simple")


@dataclass(frozen=True)
class LemmaEntry:
    claim: str
    universe: int
    status: str
    witness: Optional[dict] = None


@dataclass(frozen=True)
class LemmaReport:
    entries: tuple[LemmaEntry, ...]

    @property
    def failures(self) -> tuple[LemmaEntry, ...]:
        return tuple(e for e in self.entries if e.status == FAIL)

    @property
    def passed(self) -> bool:
        return not self.failures

    def entry(self, claim: str) -> LemmaEntry:
        for e in self.entries:
            if e.claim == claim:
                return e
        raise KeyError(claim)


def fset(mask: int) -> frozenset[int]:
    """Bitmask subset as a frozenset of element indices."""
    return frozenset(iter_bits(mask))


def _nonempty_subsets(s: OrderedSemigroup) -> range:
    return range(1, s.universe + 1)


def check_lemma_1_1_1(s: OrderedSemigroup) -> LemmaEntry:
    """Left/right annihilators of nonempty subsets are left/right ideals."""
    z = zero_of(s)
    universe = (1 << s.size) - 1
    if z is None:
        return LemmaEntry("1.1.1", 0, NOT_APPLICABLE)
    for a in _nonempty_subsets(s):
        la = left_annihilator(s, a)
        if not is_ideal(s, la, IdealKind.LEFT):
            return LemmaEntry(
                "1.1.1", universe, FAIL,
                {"A": fset(a), "annihilator": fset(la), "side": "left"},
            )
        ra = right_annihilator(s, a)
        if not is_ideal(s, ra, IdealKind.RIGHT):
            return LemmaEntry(
                "1.1.1", universe, FAIL,
                {"A": fset(a), "annihilator": fset(ra), "side": "right"},
            )
    return LemmaEntry("1.1.1", universe, PASS)


def check_lemma_1_1_2(s: OrderedSemigroup) -> LemmaEntry:
    """Every nonempty A sits inside r(l(A)) and inside l(r(A))."""
    z = zero_of(s)
    universe = (1 << s.size) - 1
    if z is None:
        return LemmaEntry("1.1.2", 0, NOT_APPLICABLE)
    for a in _nonempty_subsets(s):
        rla = right_annihilator(s, left_annihilator(s, a))
        if a & ~rla:
            return LemmaEntry(
                "1.1.2", universe, FAIL,
                {"A": fset(a), "image": fset(rla), "composition": "r(l(A))"},
            )
        lra = left_annihilator(s, right_annihilator(s, a))
        if a & ~lra:
            return LemmaEntry(
                "1.1.2", universe, FAIL,
                {"A": fset(a), "image": fset(lra), "composition": "l(r(A))"},
            )
    return LemmaEntry("1.1.2", universe, PASS)


def check_lemma_1_1_4(s: OrderedSemigroup) -> LemmaEntry:
    """r(M) is a two-sided ideal for every right ideal M."""
    z = zero_of(s)
    if z is None:
        return LemmaEntry("1.1.4", 0, NOT_APPLICABLE)
    rights = enumerate_ideals(s, IdealKind.RIGHT)
    for m in rights:
        rm = right_annihilator(s, m)
        if not is_ideal(s, rm, IdealKind.TWO_SIDED):
            return LemmaEntry(
                "1.1.4", len(rights), FAIL,
                {"M": fset(m), "annihilator": fset(rm)},
            )
    return LemmaEntry("1.1.4", len(rights), PASS)


def check_schwarz_steps(s: OrderedSemigroup) -> list[LemmaEntry]:
    """The three product identities behind the r(M) argument, plus the
    direct elementwise route to S*r(M) being contained in r(M)."""
    z = zero_of(s)
    if z is None:
        return [LemmaEntry(cid, 0, NOT_APPLICABLE) for cid in _SCHWARZ_IDS]
    rights = enumerate_ideals(s, IdealKind.RIGHT)
    full = s.universe
    zmask = 1 << z
    count = len(rights)
    entries = []

    witness = None
    for m in rights:
        rm = right_annihilator(s, m)
        if product(s, m, rm) != zmask:
            witness = {"M": fset(m), "annihilator": fset(rm)}
            break
    entries.append(LemmaEntry("schwarz.a", count, FAIL if witness else PASS, witness))

    witness = None
    for m in rights:
        rm = right_annihilator(s, m)
        if (product(s, m, product(s, full, rm)) != zmask
                or product(s, m, product(s, rm, full)) != zmask):
            witness = {"M": fset(m), "annihilator": fset(rm)}
            break
    entries.append(LemmaEntry("schwarz.b", count, FAIL if witness else PASS, witness))

    witness = None
    for m in rights:
        rm = right_annihilator(s, m)
        if product(s, full, rm) & ~rm or product(s, rm, full) & ~rm:
            witness = {"M": fset(m), "annihilator": fset(rm)}
            break
    entries.append(LemmaEntry("schwarz.c", count, FAIL if witness else PASS, witness))

    # elementwise: a in S, b in r(M) forces a*b in r(M), checked without
    # the annihilator helper
    witness = None
    for m in rights:
        rm = right_annihilator(s, m)
        members = list(iter_bits(m))
        for a in range(s.size):
            for b in iter_bits(rm):
                ab = s.cayley[a][b]
                if not all(s.cayley[x][ab] == z for x in members):
                    witness = {"M": fset(m), "a": a, "b": b}
                    break
            if witness:
                break
        if witness:
            break
    entries.append(LemmaEntry("schwarz.simple", count, FAIL if witness else PASS, witness))
    return entries


def check_remark_downclosure(s: OrderedSemigroup) -> LemmaEntry:
    """y <= x forces y*A inside the down-closure of x*A; no zero needed."""
    n = s.size
    pairs = [(y, x) for y in range(n) for x in iter_bits(s.leq[y])]
    universe = ((1 << n) - 1) * len(pairs)
    for a in _nonempty_subsets(s):
        for y, x in pairs:
            ya = product(s, 1 << y, a)
            xa = product(s, 1 << x, a)
            if ya & ~down_closure(s, xa):
                return LemmaEntry(
                    "remark", universe, FAIL,
                    {"A": fset(a), "y": y, "x": x,
                     "y_product": fset(ya), "x_product": fset(xa)},
                )
    return LemmaEntry("remark", universe, PASS)


def _check_relative_promotion(
    s: OrderedSemigroup, claim: str, kind: IdealKind
) -> LemmaEntry:
    # For every two-sided ideal A: every relative ideal L of r(A) (of the
    # given kind) should be an ideal of S of the same kind and contain the
    # zero.  The universe counts hypothesis-satisfying (A, L) pairs.
    z = zero_of(s)
    if z is None:
        return LemmaEntry(claim, 0, NOT_APPLICABLE)
    count = 0
    witness = None
    for a in enumerate_ideals(s, IdealKind.TWO_SIDED):
        t = right_annihilator(s, a)
        for l in submasks(t):
            if l == 0 or not is_ideal_of_subsemigroup(s, t, l, kind):
                continue
            count += 1
            if witness is None and not is_ideal(s, l, kind):
                witness = {"A": fset(a), "T": fset(t), "L": fset(l)}
            if witness is None and not (l >> z) & 1:
                witness = {"A": fset(a), "T": fset(t), "L": fset(l), "missing": z}
    return LemmaEntry(claim, count, FAIL if witness else PASS, witness)


def check_lemma_2_15_4(s: OrderedSemigroup) -> LemmaEntry:
    """Relative two-sided ideals of r(A) promote to ideals of S."""
    return _check_relative_promotion(s, "2.15.4", IdealKind.TWO_SIDED)


def check_lemma_2_15_4_left(s: OrderedSemigroup) -> LemmaEntry:
    """Relative left ideals of r(A) promote to left ideals of S."""
    return _check_relative_promotion(s, "2.15.4.left", IdealKind.LEFT)


def check_all(s: OrderedSemigroup) -> LemmaReport:
    """Every claim check, in fixed claim-id order."""
    entries = [
        check_lemma_1_1_1(s),
        check_lemma_1_1_2(s),
        check_lemma_1_1_4(s),
        *check_schwarz_steps(s),
        check_remark_downclosure(s),
        check_lemma_2_15_4(s),
        check_lemma_2_15_4_left(s),
    ]
    return LemmaReport(tuple(entries))


def refute_monotonicity(s: OrderedSemigroup) -> list[dict]:
    """Every (M, y, x) with y < x where multiplying an ideal M by y is not
    contained in multiplying it by x.

    Left ideals are multiplied from the left (y*M vs x*M), right ideals
    from the right (M*y vs M*x); witnesses carry a side tag and both
    computed products.
    """
    out = []
    n = s.size
    for kind, side in ((IdealKind.LEFT, "left"), (IdealKind.RIGHT, "right")):
        for m in enumerate_ideals(s, kind):
            for y in range(n):
                for x in iter_bits(s.leq[y]):
                    if x == y:
                        continue
                    if kind is IdealKind.LEFT:
                        yp = product(s, 1 << y, m)
                        xp = product(s, 1 << x, m)
                    else:
                        yp = product(s, m, 1 << y)
                        xp = product(s, m, 1 << x)
                    if yp & ~xp:
                        out.append({
                            "side": side, "M": fset(m), "y": y, "x": x,
                            "y_product": fset(yp), "x_product": fset(xp),
                        })
    return out
