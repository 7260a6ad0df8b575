"""N/E lattice paths: peak sets, step matching and the path bijections.

Steps are numbered ``1..len`` and vertices ``0..len``; vertex ``i`` sits between
step ``i`` and step ``i+1``, so a peak ``NE`` at steps ``i, i+1`` has label ``i``.

Kinds of path (all start at the origin):

* prefix -- never goes below ``y = x``;
* grand  -- ends at ``(ceil(n/2), floor(n/2))``; odd lengths allowed;
* dyck   -- a prefix ending on ``y = x``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

from .errors import DomainError, ParseError
from .perm_core import Permutation, avoids_321, is_involution
from .tableaux import StandardTableau, rs_correspondence, rs_inverse

__all__ = [
    "LatticePath", "PathKind", "StepMatching", "parse_path", "classify", "peak_set",
    "match_steps", "xi", "xi_inverse", "rho", "rho_inverse", "s321_to_dyck",
    "dyck_to_s321", "enumerate_paths",
]

_ALIASES = {"N": "N", "U": "N", "E": "E", "R": "E"}


@dataclass(frozen=True)
class LatticePath:
    steps: str

    def __post_init__(self):
        if set(self.steps) - {"N", "E"}:
            raise ParseError(f"path {self.steps!r} uses letters other than N and E")

    def __len__(self):
        return len(self.steps)

    @property
    def endpoint(self) -> tuple[int, int]:
        e = self.steps.count("E")
        return (e, len(self.steps) - e)

    def vertices(self) -> list[tuple[int, int]]:
        x = y = 0
        out = [(0, 0)]
        for s in self.steps:
            if s == "N":
                y += 1
            else:
                x += 1
            out.append((x, y))
        return out

    def __str__(self):
        return self.steps


def parse_path(text: str | LatticePath) -> LatticePath:
    if isinstance(text, LatticePath):
        return text
    out = []
    for ch in text.strip().upper():
        if ch in " ,":
            continue
        if ch not in _ALIASES:
            raise ParseError(f"unexpected step {ch!r} in path {text!r}")
        out.append(_ALIASES[ch])
    return LatticePath("".join(out))


class PathKind(NamedTuple):
    is_prefix: bool
    is_grand: bool
    is_dyck: bool


def _is_prefix(steps: str) -> bool:
    height = 0
    for s in steps:
        height += 1 if s == "N" else -1
        if height < 0:
            return False
    return True


def classify(path: LatticePath | str) -> PathKind:
    path = parse_path(path)
    n = len(path)
    x, y = path.endpoint
    prefix = _is_prefix(path.steps)
    return PathKind(prefix, (x, y) == ((n + 1) // 2, n // 2), prefix and x == y)


def peak_set(path: LatticePath | str) -> frozenset[int]:
    s = parse_path(path).steps
    return frozenset(i for i in range(1, len(s)) if s[i - 1] == "N" and s[i] == "E")


@dataclass(frozen=True)
class StepMatching:
    """Parenthesis matching with N opening and E closing; indices are 1-based."""

    pairs: frozenset[tuple[int, int]]
    unmatched: tuple[int, ...]


def match_steps(path: LatticePath | str) -> StepMatching:
    s = parse_path(path).steps
    stack: list[int] = []
    pairs = []
    unmatched_e = []
    for i, step in enumerate(s, 1):
        if step == "N":
            stack.append(i)
        elif stack:
            pairs.append((stack.pop(), i))
        else:
            unmatched_e.append(i)
    return StepMatching(frozenset(pairs), tuple(sorted(unmatched_e + stack)))


def _flip(steps: str, indices, to: str) -> str:
    out = list(steps)
    for i in indices:
        out[i - 1] = to
    return "".join(out)


def xi(prefix: LatticePath | str) -> LatticePath:
    """Dyck path prefix -> Grand Dyck path, flipping the first ceil(j/2) unmatched N's."""
    prefix = parse_path(prefix)
    if not classify(prefix).is_prefix:
        raise DomainError(f"{prefix} is not a Dyck path prefix")
    free = match_steps(prefix).unmatched
    return LatticePath(_flip(prefix.steps, free[: (len(free) + 1) // 2], "E"))


def xi_inverse(grand: LatticePath | str) -> LatticePath:
    grand = parse_path(grand)
    if not classify(grand).is_grand:
        raise DomainError(f"{grand} is not a Grand Dyck path")
    free = match_steps(grand).unmatched
    return LatticePath(_flip(grand.steps, [i for i in free if grand.steps[i - 1] == "E"], "N"))


def _tableau_to_word(T: StandardTableau) -> str:
    if len(T.rows) > 2:
        raise DomainError(f"tableau of shape {T.shape} has more than two rows")
    where = T.row_of()
    return "".join("N" if where[i] == 0 else "E" for i in range(1, T.size + 1))


def _word_to_tableau(steps: str) -> StandardTableau:
    top = tuple(i for i, s in enumerate(steps, 1) if s == "N")
    bottom = tuple(i for i, s in enumerate(steps, 1) if s == "E")
    return StandardTableau((top, bottom))


def rho(perm: Permutation | Sequence[int]) -> LatticePath:
    """321-avoiding involution -> Dyck path prefix (first tableau row = N steps)."""
    word = tuple(perm)
    if not is_involution(word) or not avoids_321(word):
        raise DomainError(f"{' '.join(map(str, word))} is not a 321-avoiding involution")
    P, Q = rs_correspondence(word)
    if P != Q:
        raise DomainError("insertion and recording tableaux differ")
    return LatticePath(_tableau_to_word(Q))


def rho_inverse(prefix: LatticePath | str) -> Permutation:
    prefix = parse_path(prefix)
    if not classify(prefix).is_prefix:
        raise DomainError(f"{prefix} is not a Dyck path prefix")
    Q = _word_to_tableau(prefix.steps)
    return rs_inverse(Q, Q)


def _reflect(steps: str) -> str:
    """Reverse the word and swap N <-> E."""
    return "".join("E" if s == "N" else "N" for s in reversed(steps))


def s321_to_dyck(perm: Permutation | Sequence[int]) -> LatticePath:
    """321-avoiding permutation of size n -> Dyck path of length 2n.

    First half: the recording tableau read as a prefix.  Second half: the
    insertion tableau's prefix, reflected so the path returns to the diagonal.
    """
    word = tuple(perm)
    if not avoids_321(word):
        raise DomainError(f"{' '.join(map(str, word))} contains 321")
    P, Q = rs_correspondence(word)
    return LatticePath(_tableau_to_word(Q) + _reflect(_tableau_to_word(P)))


def dyck_to_s321(path: LatticePath | str) -> Permutation:
    path = parse_path(path)
    if not classify(path).is_dyck:
        raise DomainError(f"{path} is not a Dyck path")
    n = len(path) // 2
    q_word = path.steps[:n]
    p_word = _reflect(path.steps[n:])
    return rs_inverse(_word_to_tableau(p_word), _word_to_tableau(q_word))


def _prefixes(n: int, floor_at: int | None, end: tuple[int, int] | None) -> Iterator[str]:
    out: list[str] = []

    def rec(x, y):
        k = x + y
        if k == n:
            if end is None or (x, y) == end:
                yield "".join(out)
            return
        if end is not None and (x > end[0] or y > end[1]):
            return
        out.append("N")
        yield from rec(x, y + 1)
        out.pop()
        if floor_at is None or y - x - 1 >= floor_at:
            out.append("E")
            yield from rec(x + 1, y)
            out.pop()

    yield from rec(0, 0)


def enumerate_paths(kind: str, n: int) -> Iterator[LatticePath]:
    """Stream ``P_n`` (prefixes of length n), ``G_n`` (grand, length n) or
    ``D_n`` (Dyck paths of semilength n, so length 2n)."""
    if n < 0:
        raise DomainError("length must be non-negative")
    if kind == "prefix":
        gen = _prefixes(n, 0, None)
    elif kind == "grand":
        gen = _prefixes(n, None, ((n + 1) // 2, n // 2))
    elif kind == "dyck":
        gen = _prefixes(2 * n, 0, (n, n))
    else:
        raise ParseError(f"unknown path kind {kind!r}")
    for steps in gen:
        yield LatticePath(steps)
