"""Readers and writers for on-disk group sources.

Three source formats are supported:

- construction spec: a JSON object with a ``kind`` field (see
  :mod:`classprod.constructions`); conventional extensions ``.spec`` and
  ``.json``.
- Cayley table (``.cayley`` / ``.table``): first non-comment line is the
  order n, followed by n lines of n space-separated 0-based indices; row
  i, column j holds the index of element i times element j, and element
  0 must be the identity.
- permutation generators (``.perm``): first line is the degree d,
  followed by one generator per line as d space-separated 0-based
  images.

Blank lines and lines starting with ``#`` are ignored in the numeric
formats.  ``load_group`` dispatches on extension and falls back to
sniffing the content.  Every rejection names the file and, where it
applies, the offending line.
"""

from __future__ import annotations

import json
import os

from .constructions import ConstructionSpec, build
from .errors import FormatError, InvalidParameterError
from .groups import (
    DEFAULT_ORDER_CAP,
    CayleyTableGroup,
    GroupHandle,
    PermutationGroup,
)


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: cannot read file: {exc}") from exc


def _numeric_lines(text: str, path: str) -> list[tuple[int, list[int]]]:
    """(line number, parsed integers) for each meaningful line."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = []
        for token in stripped.split():
            try:
                values.append(int(token))
            except ValueError:
                raise FormatError(
                    f"{path}:{lineno}: {token!r} is not an integer") from None
        out.append((lineno, values))
    return out


def load_cayley_table(path: str,
                      order_cap: int = DEFAULT_ORDER_CAP) -> CayleyTableGroup:
    """Load and fully validate a multiplication-table file."""
    rows = _numeric_lines(_read_text(path), path)
    if not rows:
        raise FormatError(f"{path}: file has no content")
    head_line, head = rows[0]
    if len(head) != 1 or head[0] < 1:
        raise FormatError(
            f"{path}:{head_line}: first line must be the order, one positive "
            "integer")
    n = head[0]
    body = rows[1:]
    if len(body) != n:
        raise FormatError(
            f"{path}: expected {n} table rows after the order line, found "
            f"{len(body)}")
    for lineno, row in body:
        if len(row) != n:
            raise FormatError(
                f"{path}:{lineno}: table row has {len(row)} entries, "
                f"expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise FormatError(
                    f"{path}:{lineno}: entry {v} outside 0..{n - 1}")
    try:
        return CayleyTableGroup([row for _, row in body], order_cap=order_cap)
    except InvalidParameterError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def load_permutation_group(path: str,
                           order_cap: int = DEFAULT_ORDER_CAP) -> PermutationGroup:
    """Load generator permutations given as image vectors."""
    rows = _numeric_lines(_read_text(path), path)
    if not rows:
        raise FormatError(f"{path}: file has no content")
    head_line, head = rows[0]
    if len(head) != 1 or head[0] < 1:
        raise FormatError(
            f"{path}:{head_line}: first line must be the degree, one positive "
            "integer")
    degree = head[0]
    body = rows[1:]
    if not body:
        raise FormatError(f"{path}: no generator lines after the degree")
    for lineno, row in body:
        if len(row) != degree:
            raise FormatError(
                f"{path}:{lineno}: generator has {len(row)} images, expected "
                f"{degree}")
        if sorted(row) != list(range(degree)):
            raise FormatError(
                f"{path}:{lineno}: generator is not a bijection of "
                f"0..{degree - 1}")
    try:
        return PermutationGroup([row for _, row in body], order_cap=order_cap)
    except InvalidParameterError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def load_construction_spec(path: str) -> ConstructionSpec:
    text = _read_text(path)
    try:
        return ConstructionSpec.from_json(text)
    except InvalidParameterError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def _sniff_kind(text: str, path: str) -> str:
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return "spec"
    rows = _numeric_lines(text, path)
    if not rows:
        raise FormatError(f"{path}: file has no content")
    head = rows[0][1]
    if len(head) != 1:
        raise FormatError(
            f"{path}: cannot identify the format; the first line should be a "
            "single integer (order or degree) or a JSON object")
    n = head[0]
    body = rows[1:]
    if len(body) == n and all(len(row) == n for _, row in body):
        return "cayley"
    if body and all(len(row) == n for _, row in body):
        return "perm"
    raise FormatError(
        f"{path}: cannot identify the format; rows match neither an order-"
        f"{n} table nor degree-{n} permutations")


def load_group(path: str,
               order_cap: int = DEFAULT_ORDER_CAP) -> tuple[GroupHandle, dict]:
    """Load a group from any supported source file.

    Dispatches on the file extension (.spec/.json, .cayley/.table, .perm)
    and otherwise sniffs the content.  Returns the group plus a
    descriptor for reports: the spec tree itself for constructions, or
    the file kind and path for the tabular formats.
    """
    ext = os.path.splitext(path)[1].lower()
    if ext in (".spec", ".json"):
        kind = "spec"
    elif ext in (".cayley", ".table"):
        kind = "cayley"
    elif ext == ".perm":
        kind = "perm"
    else:
        kind = _sniff_kind(_read_text(path), path)
    if kind == "spec":
        spec = load_construction_spec(path)
        return build(spec, order_cap), spec.to_plain()
    if kind == "cayley":
        return (load_cayley_table(path, order_cap),
                {"kind": "cayley-table-file", "path": path})
    return (load_permutation_group(path, order_cap),
            {"kind": "permutation-file", "path": path})


def cayley_table_text(g: GroupHandle) -> str:
    """Render any enumerable group in the table file format.

    The identity is listed first; the remaining elements follow in
    encoding order.  The result loads back as an isomorphic group.
    """
    elems = list(g._raw_elements())
    elems.remove(g._identity_raw)
    ordered = [g._identity_raw] + elems
    index = {raw: i for i, raw in enumerate(ordered)}
    lines = [str(len(ordered))]
    for x in ordered:
        lines.append(" ".join(str(index[g._mul(x, y)]) for y in ordered))
    return "\n".join(lines) + "\n"


def dump_cayley_table(g: GroupHandle, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(cayley_table_text(g))
