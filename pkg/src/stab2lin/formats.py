"""Text file formats for stabilizer codes and generator matrices.

Stabilizer files: UTF-8, '#' starts a comment, each non-blank line is either
a Pauli string over {I, X, Y, Z} (optional '+' prefix) or a binary line
"a_1...a_n|b_1...b_n".  One file, one format; mixing is rejected.

Generator matrix files: k lines of n characters over {0, 1}, '#' comments
permitted.
"""

from __future__ import annotations

import numpy as np

from .lincode import GeneratorMatrix
from .pauli import PauliParseError, parse_pauli
from .stabilizer import StabilizerCode


class FormatError(ValueError):
    """Parse failure; carries the 1-based line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_stabilizer_text(text: str) -> StabilizerCode:
    rows = []
    mode = None  # "pauli" | "binary"
    n = None
    for lineno, line in _content_lines(text):
        this_mode = "binary" if "|" in line else "pauli"
        if mode is None:
            mode = this_mode
        elif mode != this_mode:
            raise FormatError(
                f"mixed formats: file started with {mode} lines", lineno
            )
        if this_mode == "pauli":
            try:
                p = parse_pauli(line)
            except PauliParseError as exc:
                raise FormatError(str(exc), lineno) from exc
            if n is None:
                n = p.n
            elif p.n != n:
                raise FormatError(f"expected {n} positions, got {p.n}", lineno)
            rows.append(p.to_bits())
        else:
            left, _, right = line.partition("|")
            left, right = left.strip(), right.strip()
            if len(left) != len(right):
                raise FormatError(
                    f"a/b halves differ in length ({len(left)} vs {len(right)})", lineno
                )
            if not left or set(left + right) - {"0", "1"}:
                raise FormatError("binary line must be nonempty over {0,1}", lineno)
            if n is None:
                n = len(left)
            elif len(left) != n:
                raise FormatError(f"expected {n} positions, got {len(left)}", lineno)
            rows.append(
                np.array([int(c) for c in left + right], dtype=np.uint8)
            )
    if not rows:
        raise FormatError("no generators found", 1)
    return StabilizerCode(np.array(rows, dtype=np.uint8), n)


def load_stabilizer(path) -> StabilizerCode:
    with open(path, encoding="utf-8") as fh:
        return parse_stabilizer_text(fh.read())


def write_stabilizer_text(code: StabilizerCode, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in (comments or [])]
    lines.extend(code.pauli_strings())
    return "\n".join(lines) + "\n"


def parse_generator_text(text: str) -> GeneratorMatrix:
    rows = []
    n = None
    for lineno, line in _content_lines(text):
        if set(line) - {"0", "1"}:
            raise FormatError("generator rows must be over {0,1}", lineno)
        if n is None:
            n = len(line)
        elif len(line) != n:
            raise FormatError(f"expected {n} columns, got {len(line)}", lineno)
        rows.append([int(c) for c in line])
    if not rows:
        raise FormatError("no generator rows found", 1)
    return GeneratorMatrix(np.array(rows, dtype=np.uint8))


def load_generator(path) -> GeneratorMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_generator_text(fh.read())


def write_generator_text(g: GeneratorMatrix, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in (comments or [])]
    lines.extend("".join(str(int(b)) for b in row) for row in g.rows)
    return "\n".join(lines) + "\n"
