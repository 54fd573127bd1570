"""Exhaustive generation of small ordered semigroups and property search.

Tables come from a backtracking kernel with immediate associativity
pruning; compatible orders from an include/exclude DFS over strict pairs.
Search runs a named property over every generated structure, optionally
partitioned across worker processes by the first table row; results are
merged and sorted canonically, so output is identical for any worker count.
"""

from __future__ import annotations

import itertools
import string
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from . import kernel
from .core import OrderedSemigroup, iter_bits
from .lemmas import FAIL, check_all, refute_monotonicity
from .setalg import product

MAX_EXHAUSTIVE_N = 4
SAMPLED_N = 5

#: P1: left ideals M with y <= x always satisfy y*M inside x*M.
#: P2: right ideals M with y <= x always satisfy M*y inside M*x.
#: P3: the whole claim suite holds (meta-test; witnesses point at claims
#:     that fail on a concrete structure).
PROPERTY_IDS = ("P1", "P2", "P3")

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SearchTask:
    """An enumeration job: structure size, filters, property, reporting caps."""

    order_n: int
    prop: str = "P3"
    require_zero: bool = False
    limit: Optional[int] = None
    dedup: bool = False
    jobs: int = 1
    seed: int = 0
    sample_cap: int = 25
    node_budget: int = 5_000_000


@dataclass(frozen=True)
class SearchResult:
    structures_examined: int
    witnesses: tuple[tuple[OrderedSemigroup, dict], ...]
    complete: bool


def default_names(n: int) -> tuple[str, ...]:
    return tuple(string.ascii_lowercase[:n])


def _decode_table(raw: bytes, n: int) -> Table:
    return tuple(tuple(raw[i * n:(i + 1) * n]) for i in range(n))


def _encode_table(table: Table) -> bytes:
    return bytes(v for row in table for v in row)


def relabel_table(table: Table, perm: Sequence[int]) -> Table:
    n = len(table)
    inv = [0] * n
    for i, p in enumerate(perm):
        inv[p] = i
    return tuple(
        tuple(perm[table[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
    )


def relabel_leq(leq: Sequence[int], perm: Sequence[int]) -> tuple[int, ...]:
    n = len(leq)
    out = [0] * n
    for i in range(n):
        for j in iter_bits(leq[i]):
            out[perm[i]] |= 1 << perm[j]
    return tuple(out)


def canonical_table(table: Table) -> Table:
    n = len(table)
    return min(relabel_table(table, perm) for perm in itertools.permutations(range(n)))


def is_canonical_table(table: Table) -> bool:
    return table == canonical_table(table)


def is_canonical_structure(table: Table, leq: Sequence[int]) -> bool:
    """Is (table, leq) minimal in its joint relabeling orbit?"""
    n = len(table)
    key = (table, tuple(leq))
    for perm in itertools.permutations(range(n)):
        if (relabel_table(table, perm), relabel_leq(leq, perm)) < key:
            return False
    return True


def enumerate_semigroups(
    n: int,
    dedup: bool = False,
    first_row: Optional[Sequence[int]] = None,
) -> Iterator[Table]:
    """All associative n*n tables, ascending; one per isomorphism class
    (minimal under relabeling) when dedup is set."""
    if not 1 <= n <= MAX_EXHAUSTIVE_N:
        raise ValueError(
            f"n out of range for exhaustive enumeration: {n} (supported 1..{MAX_EXHAUSTIVE_N})"
        )
    for raw in kernel.assoc_tables(n, first_row):
        table = _decode_table(raw, n)
        if dedup and not is_canonical_table(table):
            continue
        yield table


def enumerate_compatible_orders(table: Table) -> Iterator[tuple[int, ...]]:
    """All partial orders compatible with the (associative) table; the
    discrete order always comes first."""
    n = len(table)
    yield from kernel.compatible_orders(n, _encode_table(table))


def _zero_from(table: Table, leq: Sequence[int], n: int) -> Optional[int]:
    full = (1 << n) - 1
    for z in range(n):
        if leq[z] != full:
            continue
        if all(table[z][x] == z == table[x][z] for x in range(n)):
            return z
    return None


def enumerate_ordered_semigroups(
    n: int,
    require_zero: bool = False,
    dedup: bool = False,
    first_row: Optional[Sequence[int]] = None,
) -> Iterator[OrderedSemigroup]:
    """Every valid ordered semigroup on n labeled elements.

    Structures carry their discovered zero.  With dedup, one representative
    per joint (table, order) relabeling orbit.
    """
    names = default_names(n)
    for table in enumerate_semigroups(n, first_row=first_row):
        for leq in enumerate_compatible_orders(table):
            if dedup and not is_canonical_structure(table, leq):
                continue
            zero = _zero_from(table, leq, n)
            if require_zero and zero is None:
                continue
            yield OrderedSemigroup(names, table, leq, zero)


def evaluate_property(s: OrderedSemigroup, prop: str) -> list[dict]:
    """Violation witnesses of the named property on one structure."""
    if prop == "P1":
        return [w for w in refute_monotonicity(s) if w["side"] == "left"]
    if prop == "P2":
        return [w for w in refute_monotonicity(s) if w["side"] == "right"]
    if prop == "P3":
        return [
            {"claim": e.claim, **(e.witness or {})}
            for e in check_all(s).entries
            if e.status == FAIL
        ]
    raise ValueError(f"unknown property id: {prop!r}")


def _value_sort_key(v: object) -> tuple:
    if isinstance(v, frozenset):
        return (2, tuple(sorted(v)))
    if isinstance(v, int):
        return (1, v)
    return (0, str(v))


def _witness_sort_key(item: tuple[OrderedSemigroup, dict]) -> tuple:
    s, w = item
    return (
        s.size,
        s.cayley,
        s.leq,
        -1 if s.zero is None else s.zero,
        tuple(sorted((k, _value_sort_key(v)) for k, v in w.items())),
    )


def _scan(task: SearchTask, first_rows: Optional[list[tuple[int, ...]]]):
    examined = 0
    found: list[tuple[OrderedSemigroup, dict]] = []
    if first_rows is None:
        rows_iter: list[Optional[tuple[int, ...]]] = [None]
    else:
        rows_iter = list(first_rows)
    for fr in rows_iter:
        for s in enumerate_ordered_semigroups(
            task.order_n,
            require_zero=task.require_zero,
            dedup=task.dedup,
            first_row=fr,
        ):
            examined += 1
            for w in evaluate_property(s, task.prop):
                found.append((s, w))
    return examined, found


def _scan_chunk(args: tuple[SearchTask, list[tuple[int, ...]]]):
    return _scan(*args)


def _search_sampled(task: SearchTask) -> SearchResult:
    names = default_names(task.order_n)
    examined = 0
    found: list[tuple[OrderedSemigroup, dict]] = []
    for raw in kernel.sample_tables(
        task.order_n, task.seed, task.sample_cap, task.node_budget
    ):
        table = _decode_table(raw, task.order_n)
        if task.dedup and not is_canonical_table(table):
            continue
        for leq in enumerate_compatible_orders(table):
            zero = _zero_from(table, leq, task.order_n)
            if task.require_zero and zero is None:
                continue
            s = OrderedSemigroup(names, table, leq, zero)
            examined += 1
            for w in evaluate_property(s, task.prop):
                found.append((s, w))
    found.sort(key=_witness_sort_key)
    if task.limit is not None:
        found = found[: task.limit]
    return SearchResult(examined, tuple(found), complete=False)


def search(task: SearchTask) -> SearchResult:
    """Run the task's property over its whole structure space.

    Exhaustive for order 1..4; order 5 is a seeded bounded sample
    (complete=False).  The space is always swept fully so that results do
    not depend on the worker count; ``limit`` truncates the sorted witness
    list afterwards.
    """
    if task.prop not in PROPERTY_IDS:
        raise ValueError(f"unknown property id: {task.prop!r}")
    if task.order_n == SAMPLED_N:
        return _search_sampled(task)
    if not 1 <= task.order_n <= MAX_EXHAUSTIVE_N:
        raise ValueError(
            f"search size out of range: {task.order_n} "
            f"(1..{MAX_EXHAUSTIVE_N} exhaustive, {SAMPLED_N} sampled)"
        )

    if task.jobs <= 1:
        examined, found = _scan(task, None)
    else:
        n = task.order_n
        first_rows = list(itertools.product(range(n), repeat=n))
        chunks = [first_rows[k:: task.jobs] for k in range(task.jobs)]
        with ProcessPoolExecutor(max_workers=task.jobs) as pool:
            parts = list(pool.map(_scan_chunk, [(task, chunk) for chunk in chunks]))
        examined = sum(p[0] for p in parts)
        found = [item for p in parts for item in p[1]]

    found.sort(key=_witness_sort_key)
    if task.limit is not None:
        found = found[: task.limit]
    return SearchResult(examined, tuple(found), complete=True)


def reverify_witness(s: OrderedSemigroup, w: dict) -> bool:
    """Independent recomputation of a monotonicity witness.

    Recomputes both complex products from the Cayley table and re-checks
    the three defining facts: y < x, the reported products, and the
    non-containment.
    """
    from .core import mask_of
    from .setalg import IdealKind, is_ideal

    y, x = w["y"], w["x"]
    m = mask_of(w["M"])
    if not s.le(y, x) or y == x:
        return False
    if w["side"] == "left":
        if not is_ideal(s, m, IdealKind.LEFT):
            return False
        yp = product(s, 1 << y, m)
        xp = product(s, 1 << x, m)
    else:
        if not is_ideal(s, m, IdealKind.RIGHT):
            return False
        yp = product(s, m, 1 << y)
        xp = product(s, m, 1 << x)
    return (
        yp == mask_of(w["y_product"])
        and xp == mask_of(w["x_product"])
        and bool(yp & ~xp)
    )
