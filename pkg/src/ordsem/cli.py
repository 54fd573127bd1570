"""Structure file format, command-line interface, structured reports.

File format (UTF-8, ``#`` starts a comment line)::

    elements a b c d f
    table
    a b a a a
    ...           # n rows, row i column j = product of element i by j
    order (a,b) (c,a)
    zero a        # optional

Exit codes: 0 all checks passed / search completed clean, 1 a check failed
or a refutation witness exists, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .core import (
    AXIOM_IDS,
    BuildError,
    OrderedSemigroup,
    ValidationReport,
    Violation,
    build,
    covering_pairs,
    find_zero,
    mask_of,
    validate,
)
from .enumeration import PROPERTY_IDS, SearchTask, search
from .lemmas import (
    FAIL,
    NOT_APPLICABLE,
    LemmaEntry,
    check_all,
    check_lemma_1_1_1,
    check_lemma_1_1_2,
    check_lemma_1_1_4,
    check_lemma_2_15_4,
    check_lemma_2_15_4_left,
    check_remark_downclosure,
    check_schwarz_steps,
    fset,
    refute_monotonicity,
)
from .setalg import IdealKind, annihilator, enumerate_ideals

EXIT_OK = 0
EXIT_FINDINGS = 1
EXIT_USAGE = 2

_KEYWORDS = frozenset({"elements", "table", "order", "zero"})
_PAIR_RE = re.compile(r"\(\s*([^\s(),]+)\s*,\s*([^\s(),]+)\s*\)")

#: Machine report shape; every entry carries id, status, universe, witness.
REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "structure", "entries", "exit_code"],
    "properties": {
        "command": {"type": "string"},
        "structure": {
            "anyOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["names", "n"],
                    "properties": {
                        "names": {"type": "array", "items": {"type": "string"}},
                        "n": {"type": "integer"},
                        "zero": {"anyOf": [{"type": "null"}, {"type": "string"}]},
                    },
                },
            ]
        },
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["id", "status", "universe", "witness"],
                "properties": {
                    "id": {"type": "string"},
                    "status": {"enum": ["pass", "fail", "not-applicable"]},
                    "universe": {"type": "integer", "minimum": 0},
                    "witness": {"anyOf": [{"type": "null"}, {"type": "object"}]},
                },
            },
        },
        "exit_code": {"type": "integer", "enum": [0, 1, 2]},
        "search": {
            "anyOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["structures_examined", "complete"],
                    "properties": {
                        "structures_examined": {"type": "integer"},
                        "complete": {"type": "boolean"},
                    },
                },
            ]
        },
    },
}


class ParseError(ValueError):
    """Structure file syntax error, with position when known."""

    def __init__(self, message: str, line: Optional[int] = None,
                 column: Optional[int] = None) -> None:
        self.line = line
        self.column = column
        at = ""
        if line is not None:
            at = f"line {line}: " if column is None else f"line {line}, column {column}: "
        super().__init__(at + message)


def parse_structure(text: str) -> OrderedSemigroup:
    """Parse the file format into a built (but unvalidated) structure."""
    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    pos = 0

    def peek_keyword() -> Optional[str]:
        if pos < len(lines):
            head = lines[pos][1].split()[0]
            return head if head in _KEYWORDS else None
        return None

    if not lines:
        raise ParseError("empty input, expected 'elements' line")

    lineno, content = lines[pos]
    pos += 1
    tokens = content.split()
    if tokens[0] != "elements":
        raise ParseError(f"expected 'elements', found {tokens[0]!r}", lineno)
    names = tokens[1:]
    if not names:
        raise ParseError("element list is empty", lineno)
    seen = set()
    for name in names:
        if name in _KEYWORDS:
            raise ParseError(f"element label {name!r} is a reserved keyword", lineno)
        if name in seen:
            raise ParseError(f"duplicate element label {name!r}", lineno)
        seen.add(name)
    n = len(names)
    index = {name: k for k, name in enumerate(names)}

    if pos >= len(lines):
        raise ParseError("unexpected end of input, expected 'table'")
    lineno, content = lines[pos]
    pos += 1
    if content.split() != ["table"]:
        raise ParseError(f"expected 'table', found {content.split()[0]!r}", lineno)

    rows = []
    for i in range(n):
        if pos >= len(lines) or peek_keyword() is not None:
            where = lines[pos][0] if pos < len(lines) else None
            raise ParseError(
                f"table row {i + 1} of {n} (element {names[i]!r}) is missing", where
            )
        lineno, content = lines[pos]
        pos += 1
        tokens = content.split()
        if len(tokens) != n:
            raise ParseError(
                f"table row {i + 1} (element {names[i]!r}) has {len(tokens)} entries, "
                f"expected {n}", lineno,
            )
        row = []
        for j, tok in enumerate(tokens):
            if tok not in index:
                raise ParseError(
                    f"unknown element label {tok!r} in table row {i + 1}",
                    lineno, column=j + 1,
                )
            row.append(index[tok])
        rows.append(row)

    if pos >= len(lines):
        raise ParseError("unexpected end of input, expected 'order' line")
    lineno, content = lines[pos]
    pos += 1
    head = content.split()[0]
    if head != "order":
        raise ParseError(f"expected 'order', found {head!r}", lineno)
    rest = content[len("order"):]
    leftover = _PAIR_RE.sub(" ", rest).strip()
    if leftover:
        raise ParseError(f"malformed order pair near {leftover.split()[0]!r}", lineno)
    pairs = []
    for m in _PAIR_RE.finditer(rest):
        for label in (m.group(1), m.group(2)):
            if label not in index:
                raise ParseError(
                    f"unknown element label {label!r} in order pair", lineno
                )
        pairs.append((index[m.group(1)], index[m.group(2)]))

    zero = None
    if pos < len(lines) and lines[pos][1].split()[0] == "zero":
        lineno, content = lines[pos]
        pos += 1
        tokens = content.split()
        if len(tokens) != 2:
            raise ParseError("expected 'zero LABEL'", lineno)
        if tokens[1] not in index:
            raise ParseError(
                f"unknown element label {tokens[1]!r} in zero declaration", lineno
            )
        zero = index[tokens[1]]
        if pos < len(lines) and lines[pos][1].split()[0] == "zero":
            raise ParseError("duplicate zero declaration", lines[pos][0])

    if pos < len(lines):
        raise ParseError(f"unexpected content {lines[pos][1]!r}", lines[pos][0])

    return build(names, rows, pairs, zero)


def serialize_structure(s: OrderedSemigroup) -> str:
    """Emit the file format; parsing the result reproduces ``s`` exactly."""
    lines = ["elements " + " ".join(s.names), "table"]
    for row in s.cayley:
        lines.append(" ".join(s.names[v] for v in row))
    pairs = covering_pairs(s)
    lines.append("order" + "".join(f" ({s.names[i]},{s.names[j]})" for i, j in pairs))
    if s.zero is not None:
        lines.append(f"zero {s.names[s.zero]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- reports

@dataclass
class Entry:
    id: str
    status: str
    universe: int
    witness: Optional[dict]
    text: str = ""


@dataclass
class Report:
    command: str
    structure: Optional[OrderedSemigroup]
    entries: list[Entry]
    exit_code: int
    search_info: Optional[dict] = None
    header: list[str] = field(default_factory=list)


def witness_json(s: OrderedSemigroup, w: Optional[dict]) -> Optional[dict]:
    """Witness roles rendered with element labels and raw indices."""
    if w is None:
        return None
    labels: dict = {}
    indices: dict = {}
    extra: dict = {}
    for key, value in w.items():
        if isinstance(value, frozenset):
            indices[key] = sorted(value)
            labels[key] = [s.names[i] for i in sorted(value)]
        elif isinstance(value, bool):
            extra[key] = value
        elif isinstance(value, int):
            indices[key] = value
            labels[key] = s.names[value]
        else:
            extra[key] = value
    out = {"labels": labels, "indices": indices}
    out.update(extra)
    return out


def format_subset(s: OrderedSemigroup, members: frozenset[int]) -> str:
    return "{" + ", ".join(s.names[i] for i in sorted(members)) + "}"


def _witness_text(s: OrderedSemigroup, w: dict) -> str:
    parts = []
    for key, value in w.items():
        if isinstance(value, frozenset):
            parts.append(f"{key}={format_subset(s, value)}")
        elif isinstance(value, bool):
            parts.append(f"{key}={value}")
        elif isinstance(value, int):
            parts.append(f"{key}={s.names[value]}")
        else:
            parts.append(f"{key}={value}")
    return " ".join(parts)


def structure_json(s: Optional[OrderedSemigroup]) -> Optional[dict]:
    if s is None:
        return None
    return {
        "names": list(s.names),
        "n": s.size,
        "zero": None if s.zero is None else s.names[s.zero],
    }


def report_json(report: Report) -> dict:
    out = {
        "command": report.command,
        "structure": structure_json(report.structure),
        "entries": [
            {"id": e.id, "status": e.status, "universe": e.universe, "witness": e.witness}
            for e in report.entries
        ],
        "exit_code": report.exit_code,
    }
    if report.search_info is not None:
        out["search"] = report.search_info
    return out


def render_text(report: Report) -> None:
    for line in report.header:
        print(line)
    for e in report.entries:
        print(e.text if e.text else f"{e.id}: {e.status} (universe {e.universe})")


# ------------------------------------------------------------- commands

def _load(path: str, require_valid: bool = True) -> OrderedSemigroup:
    text = Path(path).read_text(encoding="utf-8")
    try:
        s = parse_structure(text)
    except (ParseError, BuildError) as exc:
        raise ParseError(f"{path}: {exc}") from exc
    if require_valid:
        rep = validate(s)
        if not rep.valid:
            v = rep.violations[0]
            raise ValueError(
                f"{path}: structure fails validation: "
                f"{v.axiom} violated at ({_witness_labels(s, v)})"
            )
    return s


def _witness_labels(s: OrderedSemigroup, v: Violation) -> str:
    return ", ".join(s.names[i] for i in v.witness)


def _axiom_universe(s: OrderedSemigroup, axiom: str) -> int:
    n = s.size
    pairs = sum(bin(row).count("1") for row in s.leq)
    return {
        "associativity": n ** 3,
        "reflexivity": n,
        "antisymmetry": n * (n - 1) // 2,
        "transitivity": n ** 3,
        "left-compatibility": pairs * n,
        "right-compatibility": pairs * n,
        "zero-product": n,
        "zero-order": n,
    }[axiom]


def cmd_validate(args) -> Report:
    s = _load(args.file, require_valid=False)
    rep = validate(s)
    entries = []
    for axiom in AXIOM_IDS:
        witness = rep.witness_for(axiom)
        if axiom.startswith("zero") and s.zero is None:
            entries.append(Entry(axiom, NOT_APPLICABLE, 0, None,
                                 f"{axiom}: not-applicable (no declared zero)"))
            continue
        universe = _axiom_universe(s, axiom)
        if witness is None:
            entries.append(Entry(axiom, "pass", universe, None,
                                 f"{axiom}: pass (universe {universe})"))
        else:
            labels = [s.names[i] for i in witness]
            entries.append(Entry(
                axiom, "fail", universe,
                {"labels": {"witness": labels}, "indices": {"witness": list(witness)}},
                f"{axiom}: FAIL at ({', '.join(labels)})",
            ))
    code = EXIT_FINDINGS if not rep.valid else EXIT_OK
    z = find_zero(s)
    header = [
        f"structure: {s.size} elements ({' '.join(s.names)})",
        "valid: " + ("yes" if rep.valid else "no"),
        "zero: " + (s.names[z] if z is not None else "none"),
    ]
    return Report("validate", s, entries, code, header=header)


_KIND_BY_NAME = {
    "left": IdealKind.LEFT,
    "right": IdealKind.RIGHT,
    "two-sided": IdealKind.TWO_SIDED,
}


def cmd_ideals(args) -> Report:
    s = _load(args.file)
    kind = _KIND_BY_NAME[args.kind]
    masks = enumerate_ideals(s, kind)
    universe = (1 << s.size) - 1
    entries = [
        Entry("ideal", "pass", universe,
              witness_json(s, {"set": fset(m), "kind": args.kind}),
              format_subset(s, fset(m)))
        for m in masks
    ]
    header = [f"{args.kind} ideals: {len(masks)}"]
    return Report("ideals", s, entries, EXIT_OK, header=header)


def cmd_ann(args) -> Report:
    s = _load(args.file)
    labels = [t for t in args.set.split(",") if t]
    if not labels:
        raise ValueError("--set needs at least one element label")
    a = mask_of(s.index(lbl) for lbl in labels)
    side = _KIND_BY_NAME[args.side]
    result = annihilator(s, a, side)
    name = "l" if side is IdealKind.LEFT else "r"
    entry = Entry(
        f"annihilator.{args.side}", "pass", s.size,
        witness_json(s, {"A": fset(a), "result": fset(result)}),
        f"{name}({format_subset(s, fset(a))}) = {format_subset(s, fset(result))}",
    )
    return Report("ann", s, [entry], EXIT_OK)


_LEMMA_RUNNERS = {
    "1.1.1": lambda s: [check_lemma_1_1_1(s)],
    "1.1.2": lambda s: [check_lemma_1_1_2(s)],
    "1.1.4": lambda s: [check_lemma_1_1_4(s)],
    "schwarz": check_schwarz_steps,
    "remark": lambda s: [check_remark_downclosure(s)],
    "2.15.4": lambda s: [check_lemma_2_15_4(s), check_lemma_2_15_4_left(s)],
    "all": lambda s: list(check_all(s).entries),
}


def _lemma_entry(s: OrderedSemigroup, e: LemmaEntry) -> Entry:
    if e.status == FAIL:
        text = f"{e.claim}: FAIL ({_witness_text(s, e.witness or {})})"
    elif e.status == NOT_APPLICABLE:
        text = f"{e.claim}: not-applicable (no zero)"
    else:
        text = f"{e.claim}: pass (universe {e.universe})"
    return Entry(e.claim, e.status, e.universe, witness_json(s, e.witness), text)


def cmd_check(args) -> Report:
    s = _load(args.file)
    lemma_entries = _LEMMA_RUNNERS[args.lemma](s)
    entries = [_lemma_entry(s, e) for e in lemma_entries]
    code = EXIT_FINDINGS if any(e.status == FAIL for e in lemma_entries) else EXIT_OK
    return Report("check", s, entries, code)


def cmd_refute(args) -> Report:
    s = _load(args.file)
    witnesses = refute_monotonicity(s)
    strict = sum(
        1 for y in range(s.size) for x in range(s.size)
        if x != y and s.le(y, x)
    )
    entries = []
    for side in ("left", "right"):
        side_wits = [w for w in witnesses if w["side"] == side]
        kind = _KIND_BY_NAME[side]
        universe = len(enumerate_ideals(s, kind)) * strict
        if not side_wits:
            entries.append(Entry(
                f"monotonicity.{side}", "pass", universe, None,
                f"monotonicity.{side}: no witnesses (universe {universe})",
            ))
        for w in side_wits:
            entries.append(Entry(
                f"monotonicity.{side}", "fail", universe, witness_json(s, w),
                f"monotonicity.{side}: {_witness_text(s, w)}",
            ))
    code = EXIT_FINDINGS if witnesses else EXIT_OK
    return Report("refute", s, entries, code)


def cmd_search(args) -> Report:
    task = SearchTask(
        order_n=args.size,
        prop=args.property,
        require_zero=args.zero,
        limit=args.limit,
        dedup=args.dedup,
        jobs=args.jobs,
        seed=args.seed,
    )
    result = search(task)
    entries = []
    for s, w in result.witnesses:
        wj = witness_json(s, w) or {}
        wj["structure"] = serialize_structure(s)
        entries.append(Entry(
            args.property, "fail", result.structures_examined, wj,
            f"{args.property} witness on {s.size}-element structure: "
            f"{_witness_text(s, w)}",
        ))
    info = {
        "structures_examined": result.structures_examined,
        "complete": result.complete,
        "witnesses": len(result.witnesses),
    }
    header = [
        f"examined {result.structures_examined} structures "
        f"({'complete' if result.complete else 'sampled'}), "
        f"{len(result.witnesses)} witnesses",
    ]
    code = EXIT_FINDINGS if result.witnesses else EXIT_OK
    return Report("search", None, entries, code, search_info=info, header=header)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ordsem",
        description="Workbench for finite ordered semigroups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit a machine report")

    p = sub.add_parser("validate", help="check every axiom, with witnesses")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("ideals", help="enumerate ideals of one kind")
    p.add_argument("file")
    p.add_argument("--kind", required=True, choices=["left", "right", "two-sided"])
    add_json(p)
    p.set_defaults(handler=cmd_ideals)

    p = sub.add_parser("ann", help="annihilator of a subset")
    p.add_argument("file")
    p.add_argument("--side", required=True, choices=["left", "right"])
    p.add_argument("--set", required=True, help="comma-separated element labels")
    add_json(p)
    p.set_defaults(handler=cmd_ann)

    p = sub.add_parser("check", help="machine-check the claim suite")
    p.add_argument("file")
    p.add_argument("--lemma", default="all",
                   choices=["1.1.1", "1.1.2", "1.1.4", "schwarz", "remark",
                            "2.15.4", "all"])
    add_json(p)
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("refute", help="monotonicity counterexamples on ideals")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(handler=cmd_refute)

    p = sub.add_parser("search", help="enumerate structures and hunt violations")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--zero", action="store_true", help="only structures with a zero")
    p.add_argument("--property", required=True, choices=list(PROPERTY_IDS))
    p.add_argument("--dedup", action="store_true",
                   help="one representative per isomorphism class")
    p.add_argument("--limit", type=int, default=None, help="max witnesses to report")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--seed", type=int, default=0, help="seed for sampled sizes")
    add_json(p)
    p.set_defaults(handler=cmd_search)

    return parser


def run_command(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own diagnostics
        code = exc.code
        return EXIT_USAGE if code not in (0, None) else EXIT_OK
    try:
        report = args.handler(args)
    except (ParseError, BuildError, OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.json:
        print(json.dumps(report_json(report), indent=2))
    else:
        render_text(report)
    return report.exit_code


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
