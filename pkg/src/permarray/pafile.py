"""Plain-text interchange format for permutation arrays and constant-weight
binary codes.

A file is a header line followed by one body line per member. The header is
whitespace-separated: a kind token ("pa" for permutation arrays, "cw" for
constant-weight binary codes) and key=value fields n, d, w, count, where w is
"-" for arrays without a fixed weight. Body lines are comma-separated
integers: the image tuple of a permutation, or the sorted support of a word.
Blank lines and '#' comments are ignored. Example::

    pa n=4 d=4 w=- count=4
    0,1,2,3
    1,0,3,2
    2,3,0,1
    3,2,1,0

The d field records the distance the writer claims; readers re-verify rather
than trust it.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .constructions import BinaryCwCode, PermutationArray
from .perm import Permutation


class PaFormatError(ValueError):
    """Raised when a file does not parse as this format."""


@dataclass(frozen=True)
class PaHeader:
    """Parsed header line: object kind plus declared parameters."""

    kind: str
    n: int
    d: int
    w: int | None
    count: int


def _format_header(kind: str, n: int, d: int, w: int | None, count: int) -> str:
    w_text = "-" if w is None else str(w)
    return f"{kind} n={n} d={d} w={w_text} count={count}"


def dump_pa(array: PermutationArray, d: int, w: int | None = None) -> str:
    """Render an array to format text, claiming distance d (and weight w for
    constant-weight arrays)."""
    lines = [_format_header("pa", array.n, d, w, len(array))]
    lines.extend(",".join(str(v) for v in p) for p in array)
    return "\n".join(lines) + "\n"


def dump_cw(code: BinaryCwCode) -> str:
    """Render a constant-weight binary code to format text."""
    lines = [_format_header("cw", code.n, code.distance, code.weight, len(code))]
    lines.extend(",".join(str(v) for v in word) for word in code)
    return "\n".join(lines) + "\n"


def write_pa(array: PermutationArray, d: int, path: str | Path, w: int | None = None) -> None:
    Path(path).write_text(dump_pa(array, d, w), encoding="utf-8")


def write_cw(code: BinaryCwCode, path: str | Path) -> None:
    Path(path).write_text(dump_cw(code), encoding="utf-8")


def _parse_header(line: str, lineno: int) -> PaHeader:
    fields = line.split()
    if not fields or fields[0] not in ("pa", "cw"):
        raise PaFormatError(f"line {lineno}: header must start with 'pa' or 'cw': {line!r}")
    values: dict[str, str] = {}
    for field in fields[1:]:
        key, sep, value = field.partition("=")
        if not sep or key not in ("n", "d", "w", "count"):
            raise PaFormatError(f"line {lineno}: bad header field {field!r}")
        values[key] = value
    missing = {"n", "d", "w", "count"} - set(values)
    if missing:
        raise PaFormatError(f"line {lineno}: header missing {sorted(missing)}")
    try:
        w = None if values["w"] == "-" else int(values["w"])
        header = PaHeader(fields[0], int(values["n"]), int(values["d"]), w, int(values["count"]))
    except ValueError as exc:
        raise PaFormatError(f"line {lineno}: non-integer header value") from exc
    if fields[0] == "cw" and header.w is None:
        raise PaFormatError(f"line {lineno}: cw header requires an integer weight")
    return header


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((lineno, line))
    return out


def loads(text: str) -> tuple[PaHeader, PermutationArray | BinaryCwCode]:
    """Parse format text into its header and payload, validating the member
    count and (for permutations) bijectivity. The claimed distance is parsed
    but not checked here."""
    lines = _content_lines(text)
    if not lines:
        raise PaFormatError("empty file")
    header = _parse_header(lines[0][1], lines[0][0])
    rows: list[tuple[int, ...]] = []
    for lineno, line in lines[1:]:
        try:
            rows.append(tuple(int(v) for v in line.split(",")))
        except ValueError as exc:
            raise PaFormatError(f"line {lineno}: non-integer entry in {line!r}") from exc
    if len(rows) != header.count:
        raise PaFormatError(f"header promises {header.count} members, found {len(rows)}")
    if header.kind == "pa":
        members = []
        for row in rows:
            try:
                members.append(Permutation(row))
            except ValueError as exc:
                raise PaFormatError(str(exc)) from exc
            if len(row) != header.n:
                raise PaFormatError(f"member {row!r} does not have length {header.n}")
        payload: PermutationArray | BinaryCwCode = PermutationArray(header.n, members)
        if len(payload) != header.count:
            raise PaFormatError("duplicate members in body")
    else:
        try:
            payload = BinaryCwCode(header.n, header.w, tuple(rows), header.d)
        except ValueError as exc:
            raise PaFormatError(str(exc)) from exc
    return header, payload


def load(path: str | Path) -> tuple[PaHeader, PermutationArray | BinaryCwCode]:
    """Read and parse a file in this format."""
    return loads(Path(path).read_text(encoding="utf-8"))
