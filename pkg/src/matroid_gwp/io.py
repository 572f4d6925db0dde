"""Reading and writing matroid and matrix files.

Matroid text format::

    n=7
    {1,3,6}
    {1,3,5}
    ...

or JSON ``{"n": 7, "bases": [[1, 3, 6], ...]}``. Blank lines and lines
starting with ``#`` are ignored in text files.

Matrix text format::

    p=5 m=1 rows=3 cols=7
    1 0 0 3 3 3 4
    ...

Entries are compact integers sum(a_i * p**i) (canonical) or polynomial
strings in ``t`` such as ``1+2*t`` or ``t^2+1``.
"""

from __future__ import annotations

import json
import re
from pathlib import Path

from .errors import MatroidError, ParseError
from .gf import FieldMatrix, FiniteField, field, matrix
from .matroid import Matroid, from_bases

_HEADER_N = re.compile(r"^n\s*=\s*(\d+)$")
_BASIS = re.compile(r"^\{\s*([\d\s,]*)\}$")
_MATRIX_HEADER = re.compile(
    r"^p\s*=\s*(\d+)\s+m\s*=\s*(\d+)\s+rows\s*=\s*(\d+)\s+cols\s*=\s*(\d+)$"
)
_TERM = re.compile(r"^(?:(\d+)\*?)?(t(?:\^(\d+))?)?$")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def parse_matroid(text: str, path=None, validate: bool = True) -> Matroid:
    stripped = text.lstrip()
    if stripped.startswith("{") and '"n"' in stripped:
        return _parse_matroid_json(text, path, validate)
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matroid file", path=path)
    lineno, first = lines[0]
    mh = _HEADER_N.match(first)
    if not mh:
        raise ParseError("expected header 'n=<int>'", line=lineno, path=path)
    n = int(mh.group(1))
    bases = []
    for lineno, line in lines[1:]:
        mb = _BASIS.match(line)
        if not mb:
            raise ParseError(f"expected a basis like {{1,3,6}}, got {line!r}", line=lineno, path=path)
        body = mb.group(1).strip()
        try:
            labels = [int(x) for x in body.split(",")] if body else []
        except ValueError:
            raise ParseError(f"bad element list {body!r}", line=lineno, path=path) from None
        bad = [e for e in labels if not 1 <= e <= n]
        if bad:
            raise ParseError(f"element {bad[0]} outside 1..{n}", line=lineno, path=path)
        bases.append(labels)
    try:
        return from_bases(n, bases, validate=validate)
    except MatroidError as exc:
        raise ParseError(str(exc), path=path) from exc


def _parse_matroid_json(text: str, path, validate: bool) -> Matroid:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, path=path) from None
    try:
        n = int(data["n"])
        bases = [[int(e) for e in b] for b in data["bases"]]
        return from_bases(n, bases, validate=validate)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"invalid matroid JSON: {exc}", path=path) from None


def format_matroid(M: Matroid) -> str:
    lines = [f"n={M.n}"]
    lines += ["{" + ",".join(map(str, b)) + "}" for b in M.basis_labels()]
    return "\n".join(lines) + "\n"


def matroid_to_json(M: Matroid) -> dict:
    return {"n": M.n, "bases": [list(b) for b in M.basis_labels()]}


def parse_element(token: str, F: FiniteField) -> int:
    """Compact integer or polynomial string in t."""
    if token.isdigit():
        v = int(token)
        if v >= F.order:
            raise ValueError(f"{v} is not an element of {F}")
        return v
    digits = [0] * F.m
    for term in token.split("+"):
        term = term.strip()
        if not term:
            continue
        mt = _TERM.match(term)
        if not mt or (mt.group(1) is None and mt.group(2) is None):
            raise ValueError(f"cannot parse field element {token!r}")
        coef = int(mt.group(1)) if mt.group(1) is not None else 1
        deg = 0
        if mt.group(2):
            deg = int(mt.group(3)) if mt.group(3) else 1
        if deg >= F.m:
            raise ValueError(f"degree {deg} too large for {F}")
        digits[deg] = (digits[deg] + coef) % F.p
    return F.from_digits(digits)


def parse_matrix(text: str, path=None) -> FieldMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", path=path)
    lineno, first = lines[0]
    mh = _MATRIX_HEADER.match(first)
    if not mh:
        raise ParseError(
            "expected header 'p=<int> m=<int> rows=<int> cols=<int>'", line=lineno, path=path
        )
    p, m, nrows, ncols = (int(g) for g in mh.groups())
    try:
        F = field(p, m)
    except ValueError as exc:
        raise ParseError(str(exc), line=lineno, path=path) from None
    body = lines[1:]
    if len(body) != nrows:
        where = body[nrows][0] if len(body) > nrows else lineno
        raise ParseError(f"expected {nrows} rows, found {len(body)}", line=where, path=path)
    rows = []
    for lineno, line in body:
        tokens = line.split()
        if len(tokens) != ncols:
            raise ParseError(f"expected {ncols} entries, found {len(tokens)}", line=lineno, path=path)
        try:
            rows.append([parse_element(tok, F) for tok in tokens])
        except ValueError as exc:
            raise ParseError(str(exc), line=lineno, path=path) from None
    return matrix(F, rows, ncols)


def format_matrix(A: FieldMatrix) -> str:
    F = A.field
    lines = [f"p={F.p} m={F.m} rows={A.nrows} cols={A.ncols}"]
    lines += [" ".join(map(str, r)) for r in A.rows]
    return "\n".join(lines) + "\n"


def read_matroid(path) -> Matroid:
    path = Path(path)
    return parse_matroid(path.read_text(), path=path)


def read_matrix(path) -> FieldMatrix:
    path = Path(path)
    return parse_matrix(path.read_text(), path=path)


def format_subset(labels) -> str:
    return "{" + ",".join(map(str, labels)) + "}"


__all__ = [
    "format_matrix",
    "format_matroid",
    "format_subset",
    "matroid_to_json",
    "parse_element",
    "parse_matrix",
    "parse_matroid",
    "read_matrix",
    "read_matroid",
]
