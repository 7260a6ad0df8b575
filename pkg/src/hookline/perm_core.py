"""Permutations in one-line notation, descent statistics, pattern avoidance
and enumeration of the permutation classes used throughout the package.

Positions are 1-indexed everywhere: ``Des(pi)`` is a subset of ``{1, ..., n-1}``.

>>> p = parse_permutation("3 4 1 2")
>>> sorted(descent_profile(p).descent_set)
[2]
>>> is_involution(p), avoids(p, (3, 2, 1))
(True, True)
"""

from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, NotFibonacci, ParseError, ResourceLimitExceeded

__all__ = [
    "Permutation", "DescentProfile", "PermClass", "Backend",
    "parse_permutation", "descent_profile", "descent_set", "ascent_set", "maj", "comaj",
    "is_involution", "avoids", "avoids_321", "left_to_right_minima",
    "fibonacci_blocks", "is_member", "enumerate_class", "BRUTE_MAX_N",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of ``1..n`` stored as its one-line word."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        object.__setattr__(self, "entries", entries)
        n = len(entries)
        seen = set()
        for v in entries:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ParseError(f"non-integer entry {v!r}")
            if not 1 <= v <= n:
                raise ParseError(f"value {v} out of range 1..{n}")
            if v in seen:
                raise ParseError(f"duplicate value {v}")
            seen.add(v)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __call__(self, i: int) -> int:
        """Value at 1-indexed position ``i``."""
        return self.entries[i - 1]

    def inverse(self) -> Permutation:
        inv = [0] * len(self.entries)
        for i, v in enumerate(self.entries, 1):
            inv[v - 1] = i
        return Permutation(tuple(inv))

    def __str__(self):
        return " ".join(map(str, self.entries))


_TOKEN_SPLIT = re.compile(r"[\s,]+")


def parse_permutation(text: str | Sequence[int]) -> Permutation:
    """Parse ``"3 4 1 2"`` / ``"3,4,1,2"`` (or a list of ints) into a Permutation."""
    if isinstance(text, Permutation):
        return text
    if not isinstance(text, str):
        return Permutation(tuple(text))
    tokens = [t for t in _TOKEN_SPLIT.split(text.strip()) if t]
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise ParseError(f"non-integer token {tok!r}") from None
    return Permutation(tuple(values))


@dataclass(frozen=True)
class DescentProfile:
    descent_set: frozenset[int]
    ascent_set: frozenset[int]
    maj: int
    comaj: int

    @property
    def des(self) -> int:
        return len(self.descent_set)

    @property
    def asc(self) -> int:
        return len(self.ascent_set)


def descent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def ascent_set(word: Sequence[int]) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] < word[i])


def maj(word: Sequence[int]) -> int:
    return sum(i for i in range(1, len(word)) if word[i - 1] > word[i])


def comaj(word: Sequence[int]) -> int:
    return sum(i for i in range(1, len(word)) if word[i - 1] < word[i])


def descent_profile(perm: Permutation | Sequence[int]) -> DescentProfile:
    word = tuple(perm)
    des = descent_set(word)
    asc = frozenset(range(1, len(word))) - des
    return DescentProfile(des, asc, sum(des), sum(asc))


def is_involution(perm: Permutation | Sequence[int]) -> bool:
    word = tuple(perm)
    return all(word[v - 1] == i for i, v in enumerate(word, 1))


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    order = sorted(range(len(values)), key=values.__getitem__)
    std = [0] * len(values)
    for rank, idx in enumerate(order, 1):
        std[idx] = rank
    return tuple(std)


def avoids(perm: Permutation | Sequence[int], pattern: Permutation | Sequence[int]) -> bool:
    """True iff no subsequence of ``perm`` is order-isomorphic to ``pattern``.

    Naive scan over all position subsets, ``O(n^m)`` for a pattern of length m.
    """
    word = tuple(perm)
    pat = tuple(pattern)
    if sorted(pat) != list(range(1, len(pat) + 1)):
        raise ParseError(f"pattern {pat} is not a permutation of 1..{len(pat)}")
    for sub in itertools.combinations(word, len(pat)):
        if _standardize(sub) == pat:
            return False
    return True


def avoids_321(perm: Permutation | Sequence[int]) -> bool:
    """Linear-time 321 test: entries that are not left-to-right maxima must increase."""
    top = 0
    low = 0
    for v in perm:
        if v > top:
            top = v
        elif v < low:
            return False
        else:
            low = v
    return True


def left_to_right_minima(perm: Permutation | Sequence[int]) -> frozenset[int]:
    out = []
    current = None
    for i, v in enumerate(perm, 1):
        if current is None or v < current:
            out.append(i)
            current = v
    return frozenset(out)


SINGLE = "single"
DOUBLE = "double"


def fibonacci_blocks(perm: Permutation | Sequence[int]) -> tuple[str, ...]:
    """Decompose ``perm`` as a direct sum of blocks ``1`` (single) and ``21`` (double)."""
    word = tuple(perm)
    blocks = []
    i = 0
    while i < len(word):
        if word[i] == i + 1:
            blocks.append(SINGLE)
            i += 1
        elif i + 1 < len(word) and word[i] == i + 2 and word[i + 1] == i + 1:
            blocks.append(DOUBLE)
            i += 2
        else:
            raise NotFibonacci(f"{' '.join(map(str, word))} is not a direct sum of 1 and 21")
    return tuple(blocks)


class PermClass(enum.Enum):
    ALL = "all"
    INVOLUTIONS = "inv"
    I_321 = "i321"
    I_123 = "i123"
    I_321_312 = "i321-312"
    I_321_213 = "i321-213"
    S_321 = "s321"

    @classmethod
    def parse(cls, name: str | PermClass) -> PermClass:
        if isinstance(name, cls):
            return name
        key = name.strip().lower().replace("_", "-")
        for member in cls:
            if key in (member.value, member.name.lower().replace("_", "-")):
                return member
        raise ParseError(f"unknown permutation class {name!r}")


class Backend(enum.Enum):
    BRUTE = "brute"
    STRUCTURAL = "structural"


BRUTE_MAX_N = 10

# structural streams are output-sensitive; these only guard against runaway requests
STRUCTURAL_MAX_N = {
    PermClass.ALL: 10,
    PermClass.INVOLUTIONS: 14,
    PermClass.I_321: 22,
    PermClass.I_123: 22,
    PermClass.I_321_312: 40,
    PermClass.I_321_213: 22,
    PermClass.S_321: 15,
}


def is_member(cls: PermClass, perm: Permutation | Sequence[int]) -> bool:
    """Decidable membership predicate for a class, by direct definition."""
    word = tuple(perm)
    if cls is PermClass.ALL:
        return True
    if cls is PermClass.S_321:
        return avoids(word, (3, 2, 1))
    if not is_involution(word):
        return False
    if cls is PermClass.INVOLUTIONS:
        return True
    if cls is PermClass.I_123:
        return avoids(word, (1, 2, 3))
    if not avoids(word, (3, 2, 1)):
        return False
    if cls is PermClass.I_321:
        return True
    if cls is PermClass.I_321_312:
        return avoids(word, (3, 1, 2))
    if cls is PermClass.I_321_213:
        return avoids(word, (2, 1, 3))
    raise AssertionError(cls)


def _brute(cls: PermClass, n: int) -> Iterator[tuple[int, ...]]:
    for word in itertools.permutations(range(1, n + 1)):
        # cheap filters first; is_member repeats them but only on survivors
        if cls is not PermClass.ALL and cls is not PermClass.S_321 and not is_involution(word):
            continue
        if is_member(cls, word):
            yield word


def _involutions(n: int) -> Iterator[tuple[int, ...]]:
    word = [0] * n

    def rec(i):
        while i < n and word[i]:
            i += 1
        if i == n:
            yield tuple(word)
            return
        word[i] = i + 1
        yield from rec(i + 1)
        word[i] = 0
        for j in range(i + 1, n):
            if not word[j]:
                word[i], word[j] = j + 1, i + 1
                yield from rec(i + 1)
                word[i] = word[j] = 0

    yield from rec(0)


def _fibonacci_perms(n: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix):
        k = len(prefix)
        if k == n:
            yield tuple(prefix)
            return
        yield from rec(prefix + [k + 1])
        if k + 2 <= n:
            yield from rec(prefix + [k + 2, k + 1])

    yield from rec([])


def _structural(cls: PermClass, n: int) -> Iterator[tuple[int, ...]]:
    from . import paths, tableaux

    if cls is PermClass.ALL:
        yield from itertools.permutations(range(1, n + 1))
    elif cls is PermClass.INVOLUTIONS:
        yield from _involutions(n)
    elif cls is PermClass.I_321:
        for p in paths.enumerate_paths("prefix", n):
            yield paths.rho_inverse(p).entries
    elif cls is PermClass.I_123:
        for p in paths.enumerate_paths("prefix", n):
            yield tableaux.involution_transpose(paths.rho_inverse(p)).entries
    elif cls is PermClass.I_321_312:
        yield from _fibonacci_perms(n)
    elif cls is PermClass.I_321_213:
        for p in paths.enumerate_paths("prefix", n):
            word = paths.rho_inverse(p).entries
            if avoids(word, (2, 1, 3)):
                yield word
    elif cls is PermClass.S_321:
        for d in paths.enumerate_paths("dyck", n):
            yield paths.dyck_to_s321(d).entries
    else:
        raise AssertionError(cls)


def enumerate_class(
    cls: PermClass | str,
    n: int,
    backend: Backend | str = Backend.STRUCTURAL,
    *,
    max_n: int | None = None,
) -> Iterator[Permutation]:
    """Yield every member of the class of size ``n`` exactly once.

    ``brute`` filters all of ``S_n`` by the definition of the class (n <= 10);
    ``structural`` builds members through the package's bijections.
    """
    cls = PermClass.parse(cls)
    backend = Backend(backend)
    if n < 0:
        raise DomainError(f"size must be non-negative, got {n}")
    limit = max_n
    if limit is None:
        limit = BRUTE_MAX_N if backend is Backend.BRUTE else STRUCTURAL_MAX_N[cls]
    if backend is Backend.BRUTE:
        limit = min(limit, BRUTE_MAX_N)
    if n > limit:
        raise ResourceLimitExceeded(f"{cls.value} with n={n} exceeds the {backend.value} limit {limit}")
    source = _brute(cls, n) if backend is Backend.BRUTE else _structural(cls, n)
    for word in source:
        yield Permutation(word)


def words(perms: Iterable[Permutation]) -> set[tuple[int, ...]]:
    return {p.entries for p in perms}
