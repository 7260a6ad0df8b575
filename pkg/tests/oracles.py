"""Independent brute-force oracles.

Nothing here calls into ``hookline``; each function works straight from a
definition so it can serve as ground truth for the fast paths.
"""

import itertools
from collections import Counter


def perms(n):
    return list(itertools.permutations(range(1, n + 1)))


def contains_pattern(word, pattern):
    m = len(pattern)
    for idx in itertools.combinations(range(len(word)), m):
        if all((word[idx[a]] < word[idx[b]]) == (pattern[a] < pattern[b])
               for a in range(m) for b in range(a + 1, m)):
            return True
    return False


def is_inv(word):
    return all(word[word[i] - 1] == i + 1 for i in range(len(word)))


def des(word):
    return frozenset(i + 1 for i in range(len(word) - 1) if word[i] > word[i + 1])


def i321(n):
    return [w for w in perms(n) if is_inv(w) and not contains_pattern(w, (3, 2, 1))]


def s321(n):
    return [w for w in perms(n) if not contains_pattern(w, (3, 2, 1))]


def words(n):
    return ["".join(w) for w in itertools.product("NE", repeat=n)]


def never_below(word):
    h = 0
    for s in word:
        h += 1 if s == "N" else -1
        if h < 0:
            return False
    return True


def prefixes(n):
    return [w for w in words(n) if never_below(w)]


def grands(n):
    return [w for w in words(n) if w.count("E") == (n + 1) // 2]


def dycks(semilength):
    return [w for w in words(2 * semilength) if never_below(w) and w.count("N") == semilength]


def peaks(word):
    return frozenset(i for i in range(1, len(word)) if word[i - 1:i + 1] == "NE")


def partitions_in_box(rows, cols):
    out = []
    for parts in itertools.product(range(cols + 1), repeat=rows):
        if all(parts[i] >= parts[i + 1] for i in range(rows - 1)):
            out.append(tuple(p for p in parts if p))
    return out


def partitions_of(m, cap=None):
    """Weakly decreasing tuples summing to m, built part by part."""
    cap = m if cap is None else cap
    if m == 0:
        return [()]
    return [(first,) + rest for first in range(min(m, cap), 0, -1) for rest in partitions_of(m - first, first)]


def hooks_by_peeling(parts):
    """Hook sizes found by literally deleting the first row and column each round."""
    parts = list(parts)
    hooks = []
    while parts and parts[0] > 0:
        hooks.append(parts[0] + len(parts) - 1)
        parts = [p - 1 for p in parts[1:] if p - 1 > 0]
    return sorted(hooks)


def qbinom_pascal(n, k):
    """Coefficient list of [n choose k]_q via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if k < 0 or k > n:
        return []
    if k == 0 or k == n:
        return [1]
    a = qbinom_pascal(n - 1, k - 1)
    b = [0] * k + qbinom_pascal(n - 1, k)
    size = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)]


def hist(values):
    c = Counter(values)
    if not c:
        return []
    return [c.get(d, 0) for d in range(max(c) + 1)]
