"""Text export of truncated operators in a matrix-market-style coordinate format.

Entries are exact and written as ``p/q*sqrt(k)`` (trivial parts omitted);
rows and columns are 1-based positions in the graded canonical basis, which
is listed in the header so the file is self-describing::

    %%MatrixMarket matrix coordinate exact general
    % operator l(0/a) side=left variant=sym truncation=2
    % basis 1 *
    % basis 2 0/1:1
    ...
    <rows> <cols> <nnz>
    <row> <col> <entry>
"""

from __future__ import annotations

from fractions import Fraction

from .fock import FockSpace, SparseOperator
from .scalar import Surd, format_term, parse_surd

HEADER = "%%MatrixMarket matrix coordinate exact general"


def entry_text(c) -> str:
    if isinstance(c, Surd):
        return str(c)
    return format_term(Fraction(c), 1)


def export_text(fock: FockSpace, op, basis, title: str) -> str:
    mat = SparseOperator.from_operator(op, basis)
    lines = [HEADER, f"% operator {title} variant={fock.variant} truncation={fock.N}"]
    for i, w in enumerate(mat.basis, start=1):
        lines.append(f"% basis {i} {fock.format_word(w)}")
    lines.append(f"{len(basis)} {len(basis)} {mat.nnz()}")
    for i, j, c in mat.entries():
        lines.append(f"{i} {j} {entry_text(c)}")
    return "\n".join(lines) + "\n"


def read_text(text: str) -> tuple[list[str], dict[tuple[int, int], Surd]]:
    """Parse an exported file back into ``(basis labels, {(row, col): value})``."""
    lines = text.splitlines()
    if not lines or lines[0] != HEADER:
        raise ValueError("not an exact coordinate matrix file")
    basis, entries, size = [], {}, None
    for line in lines[1:]:
        if line.startswith("% basis "):
            basis.append(line.split(" ", 3)[3])
            continue
        if line.startswith("%"):
            continue
        parts = line.split(" ", 2)
        if size is None:
            size = tuple(int(p) for p in parts)
            continue
        entries[(int(parts[0]), int(parts[1]))] = parse_surd(parts[2])
    if size is None or size[2] != len(entries) or size[0] != len(basis):
        raise ValueError("size line does not match the entries")
    return basis, entries
