"""Finite ordered semigroups: construction and axiom validation.

Elements are dense indices 0..n-1; printable labels exist only at the I/O
boundary.  The partial order is stored as one bitmask row per element
(bit j of ``leq[i]`` set iff i <= j), so the subset algebra elsewhere can
stay on plain machine ints.  n is capped at 16 for that reason.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

MAX_ELEMENTS = 16

#: Axiom identifiers in report order.
AXIOM_IDS = (
    "associativity",
    "reflexivity",
    "antisymmetry",
    "transitivity",
    "left-compatibility",
    "right-compatibility",
    "zero-product",
    "zero-order",
)

_BAD_LABEL_CHARS = set('(),#"')


def iter_bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    """Bitmask with the given element indices set."""
    out = 0
    for i in indices:
        out |= 1 << i
    return out


class BuildError(ValueError):
    """The raw ingredients cannot form a structure at all."""

    def __init__(self, message: str, cycle: Sequence[int] = ()) -> None:
        super().__init__(message)
        self.cycle = tuple(cycle)


@dataclass(frozen=True)
class Violation:
    """A broken axiom together with a minimal witness.

    The witness is a tuple of element indices; re-evaluating the axiom at
    those elements reproduces the failure.
    """

    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def witness_for(self, axiom: str) -> Optional[tuple[int, ...]]:
        for v in self.violations:
            if v.axiom == axiom:
                return v.witness
        return None


@dataclass(frozen=True)
class OrderedSemigroup:
    """Immutable finite structure: carrier, Cayley table, partial order.

    ``cayley[i][j]`` is the index of the product i*j.  ``leq[i]`` is the
    bitmask of elements j with i <= j.  ``zero`` is the declared zero
    element, if any; it is checked by :func:`validate`, not trusted.
    Instances are safe to share across workers.
    """

    names: tuple[str, ...]
    cayley: tuple[tuple[int, ...], ...]
    leq: tuple[int, ...]
    zero: Optional[int] = None

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def universe(self) -> int:
        """Bitmask of the whole carrier."""
        return (1 << len(self.names)) - 1

    @cached_property
    def below(self) -> tuple[int, ...]:
        """``below[j]`` = bitmask of elements i with i <= j."""
        out = [0] * self.size
        for i, row in enumerate(self.leq):
            for j in iter_bits(row):
                out[j] |= 1 << i
        return tuple(out)

    def mul(self, i: int, j: int) -> int:
        return self.cayley[i][j]

    def le(self, i: int, j: int) -> bool:
        return bool((self.leq[i] >> j) & 1)

    def index(self, label: str) -> int:
        try:
            return self.names.index(label)
        except ValueError:
            raise KeyError(f"unknown element label {label!r}") from None

    def label_set(self, mask: int) -> list[str]:
        """Labels of the elements in ``mask``, in index order."""
        return [self.names[i] for i in iter_bits(mask)]


def _check_names(names: tuple[str, ...]) -> None:
    if not names:
        raise BuildError("at least one element is required")
    if len(names) > MAX_ELEMENTS:
        raise BuildError(f"at most {MAX_ELEMENTS} elements are supported, got {len(names)}")
    seen = set()
    for name in names:
        if not name or any(ch.isspace() or ch in _BAD_LABEL_CHARS for ch in name):
            raise BuildError(f"invalid element label {name!r}")
        if name in seen:
            raise BuildError(f"duplicate element name {name!r}")
        seen.add(name)


def _check_table(cayley: Sequence[Sequence[int]], n: int) -> tuple[tuple[int, ...], ...]:
    if len(cayley) != n:
        raise BuildError(f"expected {n} table rows, got {len(cayley)}")
    rows = []
    for i, row in enumerate(cayley):
        row = tuple(row)
        if len(row) != n:
            raise BuildError(f"table row {i} has {len(row)} entries, expected {n}")
        for j, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise BuildError(f"table entry out of range at ({i},{j}): {v!r}")
        rows.append(row)
    return tuple(rows)


def _close_covering(n: int, covering: Sequence[tuple[int, int]], names: tuple[str, ...]) -> tuple[int, ...]:
    # Reflexive-transitive closure over bitmask rows; rejects cycles.
    succ = [1 << i for i in range(n)]
    adj: list[list[int]] = [[] for _ in range(n)]
    for x, y in covering:
        if not (0 <= x < n and 0 <= y < n):
            raise BuildError(f"covering pair ({x},{y}) out of range")
        if x == y:
            raise BuildError(f"covering pair relates {names[x]!r} to itself", cycle=(x,))
        succ[x] |= 1 << y
        adj[x].append(y)
    changed = True
    while changed:
        changed = False
        for i in range(n):
            acc = succ[i]
            for j in iter_bits(acc):
                acc |= succ[j]
            if acc != succ[i]:
                succ[i] = acc
                changed = True
    for i in range(n):
        for j in iter_bits(succ[i]):
            if j != i and (succ[j] >> i) & 1:
                cycle = _find_cycle(adj, i, j)
                labels = " < ".join(names[k] for k in cycle)
                raise BuildError(f"covering pairs close a cycle: {labels} < {names[cycle[0]]}", cycle=cycle)
    return tuple(succ)


def _find_cycle(adj: Sequence[Sequence[int]], i: int, j: int) -> tuple[int, ...]:
    # i reaches j and j reaches i through covering edges; stitch both paths.
    return _bfs_path(adj, i, j)[:-1] + _bfs_path(adj, j, i)[:-1]


def _bfs_path(adj: Sequence[Sequence[int]], src: int, dst: int) -> tuple[int, ...]:
    # src != dst and dst is reachable (the closure said so).
    prev: dict[int, Optional[int]] = {src: None}
    queue = deque([src])
    while queue:
        node = queue.popleft()
        if node == dst:
            break
        for nxt in adj[node]:
            if nxt not in prev:
                prev[nxt] = node
                queue.append(nxt)
    path = [dst]
    while prev[path[-1]] is not None:
        path.append(prev[path[-1]])  # type: ignore[arg-type]
    path.reverse()
    return tuple(path)


def build(
    names: Sequence[str],
    cayley: Sequence[Sequence[int]],
    covering: Sequence[tuple[int, int]] = (),
    zero: Optional[int] = None,
) -> OrderedSemigroup:
    """Assemble a structure from a table and a covering/strict relation.

    ``covering`` pairs (x, y) mean x < y; the stored order is their
    reflexive-transitive closure.  The result is *not* validated; run
    :func:`validate` separately.  Raises :class:`BuildError` for shape
    problems, duplicate names, out-of-range entries, or a covering cycle.
    """
    names = tuple(names)
    _check_names(names)
    n = len(names)
    table = _check_table(cayley, n)
    leq = _close_covering(n, list(covering), names)
    if zero is not None and not 0 <= zero < n:
        raise BuildError(f"declared zero index {zero} out of range")
    return OrderedSemigroup(names, table, leq, zero)


def from_leq(
    names: Sequence[str],
    cayley: Sequence[Sequence[int]],
    leq: Sequence[Sequence[int]],
    zero: Optional[int] = None,
) -> OrderedSemigroup:
    """Assemble a structure from a full order matrix.

    ``leq[i][j]`` truthy means i <= j.  The matrix is stored as given and
    verified by :func:`validate`; it is never closed.
    """
    names = tuple(names)
    _check_names(names)
    n = len(names)
    table = _check_table(cayley, n)
    if len(leq) != n or any(len(row) != n for row in leq):
        raise BuildError(f"order matrix must be {n}x{n}")
    rows = tuple(mask_of(j for j in range(n) if leq[i][j]) for i in range(n))
    if zero is not None and not 0 <= zero < n:
        raise BuildError(f"declared zero index {zero} out of range")
    return OrderedSemigroup(names, table, rows, zero)


def validate(s: OrderedSemigroup) -> ValidationReport:
    """Check every axiom, returning one minimal witness per broken axiom.

    Never raises on mathematical failure; all problems accumulate in the
    report.  Zero axioms are checked only against a declared zero.
    """
    n = s.size
    t = s.cayley
    violations: list[Violation] = []

    witness = None
    for i in range(n):
        row_i = t[i]
        for j in range(n):
            tij = t[i][j]
            row_ij = t[tij]
            row_j = t[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    witness = (i, j, k)
                    break
            if witness:
                break
        if witness:
            break
    if witness:
        violations.append(Violation("associativity", witness))

    for i in range(n):
        if not s.le(i, i):
            violations.append(Violation("reflexivity", (i, i)))
            break

    witness = None
    for i in range(n):
        for j in range(i + 1, n):
            if s.le(i, j) and s.le(j, i):
                witness = (i, j)
                break
        if witness:
            break
    if witness:
        violations.append(Violation("antisymmetry", witness))

    witness = None
    for i in range(n):
        for j in iter_bits(s.leq[i]):
            # i <= j; every successor of j must be a successor of i
            if s.leq[j] & ~s.leq[i]:
                k = next(iter_bits(s.leq[j] & ~s.leq[i]))
                witness = (i, j, k)
                break
        if witness:
            break
    if witness:
        violations.append(Violation("transitivity", witness))

    for axiom, left_side in (("left-compatibility", True), ("right-compatibility", False)):
        witness = None
        for a in range(n):
            for b in iter_bits(s.leq[a]):
                for c in range(n):
                    if left_side:
                        ok = s.le(t[c][a], t[c][b])
                    else:
                        ok = s.le(t[a][c], t[b][c])
                    if not ok:
                        witness = (a, b, c)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            violations.append(Violation(axiom, witness))

    if s.zero is not None:
        z = s.zero
        for x in range(n):
            if t[z][x] != z or t[x][z] != z:
                violations.append(Violation("zero-product", (x,)))
                break
        for x in range(n):
            if not s.le(z, x):
                violations.append(Violation("zero-order", (x,)))
                break

    return ValidationReport(tuple(violations))


def find_zero(s: OrderedSemigroup) -> Optional[int]:
    """The unique element that absorbs products and bottoms the order.

    Returns None when no element qualifies.  Uniqueness is forced by
    antisymmetry on valid structures.
    """
    full = s.universe
    for z in range(s.size):
        if s.leq[z] != full:
            continue
        if all(s.cayley[z][x] == z == s.cayley[x][z] for x in range(s.size)):
            return z
    return None


def zero_of(s: OrderedSemigroup) -> Optional[int]:
    """Declared zero if present, otherwise the discovered one."""
    return s.zero if s.zero is not None else find_zero(s)


def covering_pairs(s: OrderedSemigroup) -> list[tuple[int, int]]:
    """Minimal strict pairs (i, j) whose closure recovers the full order."""
    out = []
    for i in range(s.size):
        strict = s.leq[i] & ~(1 << i)
        for j in iter_bits(strict):
            between = strict & s.below[j] & ~(1 << j)
            if not between:
                out.append((i, j))
    return out
