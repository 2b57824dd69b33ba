"""Line-oriented structure files and DOT export.

The file format is plain UTF-8 text: `#` starts a comment, blank lines are
ignored, and each section is a `key: value` line.  `kind` selects lattice,
ortho, or groupoid; `elements` and `covers` define the order; `comp` gives the
complement map for ortho files; `odot`/`imp` hold row-per-left-operand tables
for groupoid files, columns in `elements` order.  Serialization normalizes key
order and spacing, so parse-then-serialize is the identity on normalized
files and serialize-then-parse reproduces the structure exactly.
"""

from __future__ import annotations

from .errors import ParseError, TableNotTotalError, UnknownElementError
from .order import BoundedLattice, lattice_from_covers, transitive_reduction
from .ortho import OrthoCandidate, UnaryTable
from .residuated import LrGroupoid

_KINDS = ("lattice", "ortho", "groupoid")
_KEYS = ("kind", "elements", "covers", "comp", "odot", "imp")
_FORBIDDEN_NAME_CHARS = set("<=:#")


def _strip_comment(line: str) -> str:
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def _check_name(name: str, lineno: int) -> None:
    if name in _KEYS:
        raise ParseError(f"element name {name!r} is a reserved word", lineno)
    bad = _FORBIDDEN_NAME_CHARS.intersection(name)
    if bad:
        raise ParseError(
            f"element name {name!r} contains forbidden character {sorted(bad)[0]!r}",
            lineno,
        )


def parse_structure(text: str):
    """Parse a structure file into a validated lattice, ortho, or groupoid."""
    lines = text.splitlines()
    sections: dict[str, object] = {}
    section_line: dict[str, int] = {}
    i = 0
    while i < len(lines):
        lineno = i + 1
        stripped = _strip_comment(lines[i])
        if not stripped:
            i += 1
            continue
        key, sep, rest = stripped.partition(":")
        key = key.strip()
        rest = rest.strip()
        if not sep or key not in _KEYS:
            raise ParseError(f"expected one of {', '.join(_KEYS)}", lineno)
        if key in sections:
            raise ParseError(f"duplicate section {key!r}", lineno)
        section_line[key] = lineno
        if key in ("odot", "imp"):
            if rest:
                raise ParseError(f"table header '{key}:' takes no inline value", lineno)
            rows: dict[str, tuple[list[str], int]] = {}
            i += 1
            while i < len(lines):
                row = _strip_comment(lines[i])
                if not row:
                    i += 1
                    continue
                rkey, rsep, rrest = row.partition(":")
                rkey = rkey.strip()
                if not rsep:
                    raise ParseError("expected 'name: entries' table row", i + 1)
                if rkey in _KEYS:
                    break
                if rkey in rows:
                    raise ParseError(f"duplicate table row {rkey!r}", i + 1)
                rows[rkey] = (rrest.split(), i + 1)
                i += 1
            sections[key] = rows
            continue
        sections[key] = rest
        i += 1

    if "kind" not in sections:
        raise ParseError("missing 'kind' line")
    kind = sections["kind"]
    if kind not in _KINDS:
        raise ParseError(
            f"kind must be one of {', '.join(_KINDS)}, got {kind!r}",
            section_line["kind"],
        )
    if "elements" not in sections:
        raise ParseError("missing 'elements' line")
    names = str(sections["elements"]).split()
    if not names:
        raise ParseError("elements line is empty", section_line["elements"])
    for name in names:
        _check_name(name, section_line["elements"])
    if "covers" not in sections:
        raise ParseError("missing 'covers' line")
    covers: list[tuple[str, str]] = []
    for tok in str(sections["covers"]).split():
        if tok.count("<") != 1:
            raise ParseError(
                f"bad cover {tok!r}, expected lower<upper", section_line["covers"]
            )
        lo, hi = tok.split("<")
        if not lo or not hi:
            raise ParseError(
                f"bad cover {tok!r}, expected lower<upper", section_line["covers"]
            )
        covers.append((lo, hi))
    lattice = lattice_from_covers(names, covers)

    allowed = {
        "lattice": {"kind", "elements", "covers"},
        "ortho": {"kind", "elements", "covers", "comp"},
        "groupoid": {"kind", "elements", "covers", "odot", "imp"},
    }[str(kind)]
    for key in sections:
        if key not in allowed:
            raise ParseError(
                f"section {key!r} is not allowed in a {kind} file", section_line[key]
            )

    if kind == "lattice":
        return lattice

    if kind == "ortho":
        if "comp" not in sections:
            raise ParseError("ortho file requires a 'comp' line")
        lineno = section_line["comp"]
        assigned: dict[str, str] = {}
        for tok in str(sections["comp"]).split():
            if tok.count("=") != 1:
                raise ParseError(f"bad comp entry {tok!r}, expected x=y", lineno)
            x, y = tok.split("=")
            if x in assigned:
                raise ParseError(f"element {x!r} assigned twice in comp", lineno)
            assigned[x] = y
        table = []
        for name in names:
            if name not in assigned:
                raise TableNotTotalError(f"comp map is missing element {name!r}")
            target = assigned.pop(name)
            if target not in names:
                raise UnknownElementError(f"unknown element {target!r} in comp")
            table.append(lattice.index(target))
        if assigned:
            extra = sorted(assigned)[0]
            raise UnknownElementError(f"unknown element {extra!r} in comp")
        return OrthoCandidate(lattice, tuple(table))

    for key in ("odot", "imp"):
        if key not in sections:
            raise TableNotTotalError(f"groupoid file requires an '{key}' table")
    tables = {}
    for key in ("odot", "imp"):
        rows = sections[key]
        for rkey in rows:
            if rkey not in names:
                raise UnknownElementError(f"unknown element {rkey!r} in {key} table")
        table = []
        for name in names:
            if name not in rows:
                raise TableNotTotalError(f"{key} table is missing the row for {name!r}")
            entries, lineno = rows[name]
            if len(entries) != len(names):
                raise TableNotTotalError(
                    f"{key} row for {name!r} has {len(entries)} entries, "
                    f"expected {len(names)}"
                )
            for entry in entries:
                if entry not in names:
                    raise UnknownElementError(
                        f"unknown element {entry!r} in {key} row for {name!r}"
                    )
            table.append(tuple(lattice.index(entry) for entry in entries))
        tables[key] = tuple(table)
    return LrGroupoid(lattice, tables["odot"], tables["imp"])


def _validate_serializable_names(names) -> None:
    for name in names:
        if (
            not name
            or name in _KEYS
            or _FORBIDDEN_NAME_CHARS.intersection(name)
            or any(ch.isspace() for ch in name)
        ):
            raise ValueError(f"element name {name!r} cannot be serialized")


def serialize_structure(s) -> str:
    """Render a structure in normalized file form (fixed key order and spacing)."""
    if isinstance(s, BoundedLattice):
        kind, lattice = "lattice", s
    elif isinstance(s, OrthoCandidate):
        kind, lattice = "ortho", s.lattice
    elif isinstance(s, LrGroupoid):
        kind, lattice = "groupoid", s.lattice
    else:
        raise TypeError(f"cannot serialize {type(s).__name__}")
    names = lattice.names
    _validate_serializable_names(names)
    lines = [f"kind: {kind}", "elements: " + " ".join(names)]
    covers = transitive_reduction(lattice.poset)
    lines.append(
        ("covers: " + " ".join(f"{names[x]}<{names[y]}" for x, y in covers)).rstrip()
    )
    if isinstance(s, OrthoCandidate):
        lines.append(
            "comp: " + " ".join(f"{names[x]}={names[s.comp[x]]}" for x in range(lattice.n))
        )
    if isinstance(s, LrGroupoid):
        for key, table in (("odot", s.odot), ("imp", s.imp)):
            lines.append(f"{key}:")
            for x in range(lattice.n):
                lines.append(
                    f"  {names[x]}: " + " ".join(names[v] for v in table[x])
                )
    return "\n".join(lines) + "\n"


def _quote(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(l: BoundedLattice, comp: UnaryTable | None = None) -> str:
    """Hasse diagram as DOT: cover edges upward, complements as dashed links."""
    lines = ["digraph lattice {", "  rankdir=BT;"]
    for name in l.names:
        lines.append(f"  {_quote(name)};")
    for x, y in transitive_reduction(l.poset):
        lines.append(f"  {_quote(l.names[x])} -> {_quote(l.names[y])};")
    if comp is not None:
        for x in range(l.n):
            if x < comp[x]:
                lines.append(
                    f"  {_quote(l.names[x])} -> {_quote(l.names[comp[x]])}"
                    " [style=dashed, dir=none];"
                )
    lines.append("}")
    return "\n".join(lines) + "\n"
