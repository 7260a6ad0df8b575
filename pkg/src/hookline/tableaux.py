"""Standard Young tableaux and the Robinson-Schensted correspondence (row insertion)."""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Sequence

from .errors import DomainError, ParseError, ShapeMismatch
from .perm_core import Permutation, is_involution

__all__ = [
    "StandardTableau", "parse_tableau", "rs_correspondence", "rs_inverse",
    "transpose", "tableau_descent_set", "involution_transpose",
]


@dataclass(frozen=True)
class StandardTableau:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        for upper, lower in zip(rows, rows[1:]):
            if len(lower) > len(upper):
                raise ParseError(f"row lengths not weakly decreasing: {self.shape}")
            if any(lower[c] <= upper[c] for c in range(len(lower))):
                raise ParseError("columns must increase top to bottom")
        for r in rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                raise ParseError(f"row {r} is not strictly increasing")
        cells = sorted(v for r in rows for v in r)
        if cells != list(range(1, len(cells) + 1)):
            raise ParseError(f"entries must be exactly 1..{len(cells)}")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row_of(self) -> dict[int, int]:
        """Map each entry to its 0-indexed row."""
        return {v: r for r, row in enumerate(self.rows) for v in row}

    def __str__(self):
        return "; ".join(" ".join(map(str, r)) for r in self.rows)


def parse_tableau(text: str) -> StandardTableau:
    """``"1 2 5; 3 4"`` -> tableau with rows (1,2,5), (3,4)."""
    rows = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            rows.append(tuple(int(t) for t in chunk.replace(",", " ").split()))
        except ValueError:
            raise ParseError(f"bad tableau row {chunk!r}") from None
    return StandardTableau(tuple(rows))


def rs_correspondence(perm: Permutation | Sequence[int]) -> tuple[StandardTableau, StandardTableau]:
    """Return ``(P, Q)``: insertion and recording tableaux under row insertion."""
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, value in enumerate(perm, 1):
        x = value
        r = 0
        while True:
            if r == len(P):
                P.append([x])
                Q.append([step])
                break
            row = P[r]
            c = bisect.bisect_right(row, x)
            if c == len(row):
                row.append(x)
                Q[r].append(step)
                break
            row[c], x = x, row[c]
            r += 1
    return (StandardTableau(tuple(map(tuple, P))), StandardTableau(tuple(map(tuple, Q))))


def rs_inverse(P: StandardTableau, Q: StandardTableau) -> Permutation:
    if P.shape != Q.shape:
        raise ShapeMismatch(f"shapes differ: {P.shape} vs {Q.shape}")
    prows = [list(r) for r in P.rows]
    where = Q.row_of()
    n = P.size
    word = [0] * n
    for step in range(n, 0, -1):
        r = where[step]
        x = prows[r].pop()
        if not prows[r]:
            prows.pop()
        for rr in range(r - 1, -1, -1):
            row = prows[rr]
            c = bisect.bisect_left(row, x) - 1
            row[c], x = x, row[c]
        word[step - 1] = x
    return Permutation(tuple(word))


def transpose(T: StandardTableau) -> StandardTableau:
    if not T.rows:
        return T
    cols = [tuple(row[c] for row in T.rows if c < len(row)) for c in range(len(T.rows[0]))]
    return StandardTableau(tuple(cols))


def tableau_descent_set(T: StandardTableau) -> frozenset[int]:
    """``{i : i+1 sits in a strictly lower row than i}``."""
    where = T.row_of()
    return frozenset(i for i in range(1, T.size) if where[i + 1] > where[i])


def involution_transpose(perm: Permutation | Sequence[int]) -> Permutation:
    """The involution whose RS tableau is the transpose of ``perm``'s."""
    if not is_involution(perm):
        raise DomainError(f"{' '.join(map(str, perm))} is not an involution")
    P, Q = rs_correspondence(perm)
    assert P == Q, "RS symmetry failed for an involution"
    Qt = transpose(Q)
    return rs_inverse(Qt, Qt)
