"""Text formats for matrices and block operators.

Matrix files: first data line is ``n m``, followed by n rows of m
whitespace-separated reals. An optional section introduced by a line
``imag`` carries the imaginary parts in the same layout. Lines starting
with ``#`` are comments. Block-operator files are matrix sections
separated by ``---`` lines; a ``# name: <label>`` comment inside a
section names that block.
"""

from __future__ import annotations

import numpy as np

from .blocks import BlockOperator
from .errors import MatrixFormatError
from .linalg import HermitianMatrix, RectMatrix

_LABEL_PREFIX = "# name:"


def _parse_rows(lines: list[str], n: int, m: int, what: str) -> np.ndarray:
    if len(lines) < n:
        raise MatrixFormatError(
            f"expected {n} rows of {what} data, found {len(lines)}"
        )
    rows = []
    for i in range(n):
        parts = lines[i].split()
        if len(parts) != m:
            raise MatrixFormatError(
                f"row {i + 1} of {what} data has {len(parts)} values, expected {m}"
            )
        try:
            rows.append([float(p) for p in parts])
        except ValueError as exc:
            raise MatrixFormatError(f"bad number in row {i + 1}: {exc}") from exc
    return np.array(rows)


def parse_matrix_text(text: str) -> np.ndarray:
    """Parse matrix text into a real or complex 2-D array."""
    lines = [
        ln.strip()
        for ln in text.splitlines()
        if ln.strip() and not ln.lstrip().startswith("#")
    ]
    if not lines:
        raise MatrixFormatError("no data lines found")
    header = lines[0].split()
    if len(header) != 2:
        raise MatrixFormatError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError as exc:
        raise MatrixFormatError(f"bad header {lines[0]!r}: {exc}") from exc
    if n < 1 or m < 1:
        raise MatrixFormatError(f"dimensions must be positive, got {n} x {m}")
    body = lines[1:]
    real = _parse_rows(body, n, m, "real")
    rest = body[n:]
    if not rest:
        return real
    if rest[0].lower() != "imag":
        raise MatrixFormatError(
            f"unexpected content after matrix rows: {rest[0]!r}"
        )
    imag = _parse_rows(rest[1:], n, m, "imaginary")
    if rest[1 + n:]:
        raise MatrixFormatError("trailing content after imaginary rows")
    return real + 1j * imag


def format_matrix_text(a: np.ndarray) -> str:
    """Serialize an array in the matrix text format (round-trips exactly)."""
    a = np.asarray(a)
    n, m = a.shape
    out = [f"{n} {m}"]
    real = a.real if np.iscomplexobj(a) else a
    out.extend(" ".join(repr(float(v)) for v in row) for row in real)
    if np.iscomplexobj(a):
        out.append("imag")
        out.extend(" ".join(repr(float(v)) for v in row) for row in a.imag)
    return "\n".join(out) + "\n"


def load_rect_matrix(path: str) -> RectMatrix:
    with open(path, encoding="utf-8") as fh:
        a = parse_matrix_text(fh.read())
    if np.iscomplexobj(a):
        raise MatrixFormatError("rectangular matrices must be real")
    return RectMatrix(a)


def load_hermitian_matrix(path: str) -> HermitianMatrix:
    with open(path, encoding="utf-8") as fh:
        a = parse_matrix_text(fh.read())
    return HermitianMatrix(a)


def parse_block_text(text: str) -> BlockOperator:
    """Parse a block-operator file: matrix sections separated by ``---``."""
    sections: list[list[str]] = [[]]
    for ln in text.splitlines():
        if ln.strip() == "---":
            sections.append([])
        else:
            sections[-1].append(ln)
    blocks = []
    labels = []
    any_label = False
    for idx, section in enumerate(sections):
        body = "\n".join(section)
        if not any(
            ln.strip() and not ln.lstrip().startswith("#") for ln in section
        ):
            raise MatrixFormatError(f"block {idx + 1} is empty")
        label = None
        for ln in section:
            if ln.strip().startswith(_LABEL_PREFIX):
                label = ln.strip()[len(_LABEL_PREFIX):].strip()
        a = parse_matrix_text(body)
        if a.shape[0] != a.shape[1]:
            raise MatrixFormatError(
                f"block {idx + 1} is {a.shape[0]} x {a.shape[1]}, expected square"
            )
        blocks.append(HermitianMatrix(a))
        labels.append(label)
        any_label = any_label or label is not None
    resolved = (
        tuple(lb if lb is not None else f"block{i + 1}" for i, lb in enumerate(labels))
        if any_label
        else None
    )
    return BlockOperator(tuple(blocks), labels=resolved)


def format_block_text(b: BlockOperator) -> str:
    parts = []
    for i, blk in enumerate(b.blocks):
        section = ""
        if b.labels is not None:
            section += f"{_LABEL_PREFIX} {b.labels[i]}\n"
        section += format_matrix_text(blk.entries)
        parts.append(section)
    return "---\n".join(parts)


def load_block_operator(path: str) -> BlockOperator:
    with open(path, encoding="utf-8") as fh:
        return parse_block_text(fh.read())
