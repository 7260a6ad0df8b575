"""Integer partitions in the box ``B_n``, hook decompositions and the
hook-to-peak bijection ``psi``.

``B_n`` has ``floor(n/2)`` rows and ``ceil(n/2)`` columns.  A partition inside
it is identified with the Grand Dyck path tracing the lower-right boundary of
its Young diagram, drawn from the lower-left corner ``(0, 0)`` of the box to
the upper-right corner ``(ceil(n/2), floor(n/2))``; the diagram is the region
of the box above that path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DomainError, ParseError
from .paths import LatticePath, classify, parse_path

__all__ = [
    "Partition", "BoxSpec", "HookDecomposition", "parse_partition", "conjugate",
    "durfee_side", "hook_decomposition", "boundary_path", "partition_from_boundary",
    "psi", "psi_inverse", "enumerate_in_box", "count_of_size", "partitions_of",
    "partition_count", "partitions_with_hd", "hd_count",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ParseError(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ParseError(f"parts must be weakly decreasing: {parts}")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __str__(self):
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class BoxSpec:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"box index must be >= 0, got {self.n}")

    @property
    def width(self) -> int:
        return (self.n + 1) // 2

    @property
    def height(self) -> int:
        return self.n // 2

    def fits(self, lam: Partition) -> bool:
        return len(lam) <= self.height and (not lam.parts or lam.parts[0] <= self.width)


class HookDecomposition(tuple):
    """Increasing hook sizes ``i_1 < ... < i_k``, consecutive gaps > 1."""

    def __new__(cls, hooks: Iterable[int] = ()):
        hooks = tuple(sorted(hooks))
        if any(h < 1 for h in hooks):
            raise DomainError(f"hook sizes must be positive: {hooks}")
        if any(b - a <= 1 for a, b in zip(hooks, hooks[1:])):
            raise DomainError(f"hook sizes need gaps > 1: {hooks}")
        return super().__new__(cls, hooks)


def parse_partition(text: str | Sequence[int] | Partition) -> Partition:
    if isinstance(text, Partition):
        return text
    if not isinstance(text, str):
        return Partition(tuple(text))
    text = text.strip().strip("()")
    if not text:
        return Partition(())
    try:
        return Partition(tuple(int(t) for t in text.replace(" ", ",").split(",") if t))
    except ValueError:
        raise ParseError(f"bad partition {text!r}") from None


def conjugate(lam: Partition) -> Partition:
    parts = lam.parts
    if not parts:
        return lam
    return Partition(tuple(sum(1 for p in parts if p > c) for c in range(parts[0])))


def durfee_side(lam: Partition) -> int:
    k = 0
    while k < len(lam) and lam.parts[k] >= k + 1:
        k += 1
    return k


def hook_decomposition(lam: Partition) -> HookDecomposition:
    """Sizes of the hooks peeled off the diagram, outermost first, returned sorted."""
    lam = parse_partition(lam)
    cols = conjugate(lam).parts
    k = durfee_side(lam)
    return HookDecomposition(lam.parts[t] + cols[t] - 2 * t - 1 for t in range(k))


def _check_fit(lam: Partition, box: BoxSpec):
    if not box.fits(lam):
        raise DomainError(f"partition ({lam}) does not fit in B_{box.n}")


def boundary_path(lam: Partition, box: BoxSpec | int) -> LatticePath:
    lam = parse_partition(lam)
    box = box if isinstance(box, BoxSpec) else BoxSpec(box)
    _check_fit(lam, box)
    H, W = box.height, box.width
    steps = []
    x = 0
    for y in range(H):
        # row at height [y, y+1] is the (H-y)-th part counted from the top
        idx = H - y - 1
        length = lam.parts[idx] if idx < len(lam) else 0
        steps.append("E" * (length - x))
        x = length
        steps.append("N")
    steps.append("E" * (W - x))
    return LatticePath("".join(steps))


def partition_from_boundary(path: LatticePath | str) -> Partition:
    path = parse_path(path)
    if not classify(path).is_grand:
        raise DomainError(f"{path} is not a Grand Dyck path")
    rows = []
    x = 0
    for s in path.steps:
        if s == "E":
            x += 1
        else:
            rows.append(x)
    return Partition(tuple(r for r in reversed(rows) if r))


def psi(lam: Partition, box: BoxSpec | int) -> LatticePath:
    """Grand Dyck path whose peak set is ``hd(lam)``.

    The boundary path is split at ``M = (k, H-k)``; E steps before M are
    numbered backwards from M (``a_j``), N steps after M forwards (``b_j``).
    The output is the unique path with peaks exactly at ``(b_j - 1, a_j)``.
    """
    lam = parse_partition(lam)
    box = box if isinstance(box, BoxSpec) else BoxSpec(box)
    H, W = box.height, box.width
    steps = boundary_path(lam, box).steps
    A, B = steps[:H], steps[H:]
    a = sorted(pos for pos, s in enumerate(reversed(A), 1) if s == "E")
    b = sorted(pos for pos, s in enumerate(B, 1) if s == "N")
    assert len(a) == len(b) == durfee_side(lam)
    return _path_with_peaks([(bj - 1, aj) for aj, bj in zip(a, b)], W, H)


def _path_with_peaks(peaks: Sequence[tuple[int, int]], width: int, height: int) -> LatticePath:
    out = []
    x = y = 0
    for px, py in peaks:
        out.append("E" * (px - x) + "N" * (py - y))
        x, y = px, py
    out.append("E" * (width - x) + "N" * (height - y))
    return LatticePath("".join(out))


def psi_inverse(path: LatticePath | str) -> Partition:
    path = parse_path(path)
    if not classify(path).is_grand:
        raise DomainError(f"{path} is not a Grand Dyck path")
    n = len(path)
    H, W = n // 2, (n + 1) // 2
    verts = path.vertices()
    peaks = [verts[i] for i in sorted(_peaks(path.steps))]
    k = len(peaks)
    a = {py for _, py in peaks}
    b = {px + 1 for px, _ in peaks}
    A = "".join("E" if H - t + 1 in a else "N" for t in range(1, H + 1))
    B = "".join("N" if t in b else "E" for t in range(1, W + 1))
    assert A.count("E") == k and B.count("N") == k
    return partition_from_boundary(LatticePath(A + B))


def _peaks(steps: str):
    return [i for i in range(1, len(steps)) if steps[i - 1] == "N" and steps[i] == "E"]


def _in_box(max_parts: int, max_part: int) -> Iterator[tuple[int, ...]]:
    def rec(prefix, cap):
        yield tuple(prefix)
        if len(prefix) == max_parts:
            return
        for p in range(cap, 0, -1):
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    yield from rec([], max_part)


def enumerate_in_box(box: BoxSpec | int) -> Iterator[Partition]:
    box = box if isinstance(box, BoxSpec) else BoxSpec(box)
    for parts in _in_box(box.height, box.width):
        yield Partition(parts)


def count_of_size(box: BoxSpec | int, m: int) -> int:
    return sum(1 for lam in enumerate_in_box(box) if lam.size == m)


def partitions_of(m: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``m`` in reverse lexicographic order."""
    if m < 0:
        raise DomainError("cannot partition a negative number")
    cap = m if max_part is None else max_part

    def rec(rest, cap, prefix):
        if rest == 0:
            yield Partition(tuple(prefix))
            return
        for p in range(min(rest, cap), 0, -1):
            prefix.append(p)
            yield from rec(rest - p, p, prefix)
            prefix.pop()

    yield from rec(m, cap, [])


@lru_cache(maxsize=None)
def partition_count(m: int) -> int:
    """p(m), by exhaustive generation."""
    return sum(1 for _ in partitions_of(m))


def _from_frobenius(arms: Sequence[int], legs: Sequence[int]) -> Partition:
    k = len(arms)
    rows = [arms[t] + t + 1 for t in range(k)]
    cols = [legs[t] + t + 1 for t in range(k)]
    depth = max(cols, default=0)
    rows += [sum(1 for c in cols if c > r) for r in range(k, depth)]
    return Partition(tuple(rows))


def partitions_with_hd(hooks: Iterable[int]) -> Iterator[Partition]:
    """All partitions (no box constraint) whose hook decomposition is ``hooks``.

    Hooks are placed from the innermost outwards; each new hook must stick out
    past the previous one by at least one cell in both arm and leg.
    """
    hooks = HookDecomposition(hooks)
    k = len(hooks)

    def rec(j, arms, legs):
        if j == k:
            # arms/legs were built inside-out; Frobenius order is outside-in
            yield _from_frobenius(arms[::-1], legs[::-1])
            return
        size = hooks[j] - 1
        lo = arms[-1] + 1 if arms else 0
        hi = size - (legs[-1] + 1 if legs else 0)
        for arm in range(lo, hi + 1):
            yield from rec(j + 1, arms + [arm], legs + [size - arm])

    yield from rec(0, [], [])


def hd_count(hooks: Iterable[int]) -> int:
    """``i_1 * prod (i_j - i_{j-1} - 1)``; 1 for the empty set."""
    hooks = HookDecomposition(hooks)
    if not hooks:
        return 1
    out = hooks[0]
    for a, b in zip(hooks, hooks[1:]):
        out *= b - a - 1
    return out
