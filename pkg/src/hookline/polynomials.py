"""Exact polynomials and the closed forms / recurrences built on them.

Two value types:

* :class:`QPoly` -- univariate integer polynomial in ``q``, canonical (no
  trailing zeros).  Also used for power series truncated at a stated order.
* :class:`SubsetPoly` -- polynomial in ``x_1, x_2, ...`` whose monomials are
  squarefree, so a monomial is just a set of indices.

Coefficients are Python ints, so nothing can overflow.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import DomainError
from .perm_core import PermClass, descent_set, enumerate_class, maj as maj_of, comaj as comaj_of

__all__ = [
    "QPoly", "SubsetPoly", "q_binomial", "catalan", "des_count_formula", "joint_des_maj",
    "maj_poly", "fibonacci_maj", "fibonacci_des_counts", "double213_claim",
    "double213_enumerated", "superset_count", "exact_descent_count", "a_poly",
    "descent_set_poly", "specialize", "limit_series", "limit_joint_series",
    "limit_hd_series", "nonconsecutive_subsets", "has_consecutive",
]


class QPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> QPoly:
        return cls([0] * degree + [coeff])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPoly:
        """Sum of ``q^e`` over the given exponents (with multiplicity)."""
        counts: dict[int, int] = defaultdict(int)
        for e in exponents:
            counts[e] += 1
        if not counts:
            return cls()
        out = [0] * (max(counts) + 1)
        for e, c in counts.items():
            out[e] = c
        return cls(out)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_qpoly(other)
        size = max(len(self.coeffs), len(other.coeffs))
        return QPoly(self[i] + other[i] for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_qpoly(other))

    def __rsub__(self, other):
        return _as_qpoly(other) - self

    def __mul__(self, other):
        other = _as_qpoly(other)
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = QPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def shift(self, d: int) -> QPoly:
        """Multiply by ``q^d``."""
        return QPoly([0] * d + list(self.coeffs)) if self.coeffs else self

    def truncate(self, order: int) -> QPoly:
        """Drop every term of degree above ``order``."""
        return QPoly(self.coeffs[: order + 1])

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def divmod(self, divisor: QPoly) -> tuple[QPoly, QPoly]:
        """Long division over the integers; the divisor must be monic up to sign."""
        divisor = _as_qpoly(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise DomainError("integer long division needs a leading coefficient of +-1")
        rem = list(self.coeffs)
        dd = divisor.degree
        quot = [0] * max(len(rem) - dd, 0)
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i] * lead
            if c:
                quot[i - dd] = c
                for j, dc in enumerate(divisor.coeffs):
                    rem[i - dd + j] -= c * dc
        return QPoly(quot), QPoly(rem)

    def exact_div(self, divisor: QPoly) -> QPoly:
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return quot

    def series_inverse(self, order: int) -> QPoly:
        """Power series ``1/self`` truncated at degree ``order`` (needs constant term +-1)."""
        c0 = self[0]
        if c0 not in (1, -1):
            raise DomainError("series inverse needs constant term +-1")
        inv = [0] * (order + 1)
        inv[0] = c0
        for d in range(1, order + 1):
            acc = sum(self[i] * inv[d - i] for i in range(1, min(d, self.degree) + 1))
            inv[d] = -acc * c0
        return QPoly(inv)

    def to_json(self) -> dict:
        return {"var": "q", "coeffs": list(self.coeffs) or [0]}

    @classmethod
    def from_json(cls, data: Mapping) -> QPoly:
        if data.get("var", "q") != "q":
            raise DomainError(f"expected variable q, got {data.get('var')!r}")
        return cls(data["coeffs"])

    def __repr__(self):
        return f"QPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for d, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _as_qpoly(v) -> QPoly:
    if isinstance(v, QPoly):
        return v
    if isinstance(v, int):
        return QPoly([v])
    raise TypeError(f"cannot combine QPoly with {type(v).__name__}")


class SubsetPoly:
    """Integer combination of squarefree monomials ``x_S``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Iterable[int], int] | None = None):
        clean: dict[frozenset[int], int] = {}
        for key, c in (terms or {}).items():
            key = frozenset(key)
            if c:
                clean[key] = clean.get(key, 0) + c
                if not clean[key]:
                    del clean[key]
        self.terms = clean

    @classmethod
    def one(cls) -> SubsetPoly:
        return cls({frozenset(): 1})

    @classmethod
    def constant(cls, c: int) -> SubsetPoly:
        return cls({frozenset(): c})

    @classmethod
    def variable(cls, j: int) -> SubsetPoly:
        return cls({frozenset([j]): 1})

    def coefficient(self, S: Iterable[int]) -> int:
        return self.terms.get(frozenset(S), 0)

    @property
    def variables(self) -> frozenset[int]:
        return frozenset().union(*self.terms) if self.terms else frozenset()

    def __eq__(self, other):
        if isinstance(other, int):
            other = SubsetPoly.constant(other)
        return isinstance(other, SubsetPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _as_subset_poly(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SubsetPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SubsetPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_subset_poly(other))

    def __mul__(self, other):
        other = _as_subset_poly(other)
        out: dict[frozenset[int], int] = defaultdict(int)
        for ka, a in self.terms.items():
            for kb, b in other.terms.items():
                if ka & kb:
                    raise DomainError(f"product would square x_{min(ka & kb)}")
                out[ka | kb] += a * b
        return SubsetPoly(out)

    __rmul__ = __mul__

    def items(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms sorted by (degree, indices)."""
        return sorted(((tuple(sorted(k)), c) for k, c in self.terms.items()), key=lambda t: (len(t[0]), t[0]))

    def to_json(self) -> list[dict]:
        return [{"vars": list(k), "coeff": c} for k, c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> SubsetPoly:
        return cls({frozenset(t["vars"]): t["coeff"] for t in data})

    def __repr__(self):
        return f"SubsetPoly({dict(self.items())})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.items():
            mono = "*".join(f"x{j}" for j in k)
            if not mono:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
            parts.append(("-" if c < 0 else "+", body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _as_subset_poly(v) -> SubsetPoly:
    if isinstance(v, SubsetPoly):
        return v
    if isinstance(v, int):
        return SubsetPoly.constant(v)
    raise TypeError(f"cannot combine SubsetPoly with {type(v).__name__}")


# --- closed forms ---------------------------------------------------------


def _one_minus_q_power(e: int) -> QPoly:
    return QPoly([1] + [0] * (e - 1) + [-1]) if e > 0 else QPoly()


def q_binomial(n: int, j: int) -> QPoly:
    """Gaussian binomial: prod_{i<j} (1 - q^{n-i}) / (1 - q^{i+1}), divided exactly."""
    if n < 0 or not 0 <= j <= n:
        raise DomainError(f"q_binomial needs 0 <= j <= n, got n={n}, j={j}")
    j = min(j, n - j)
    out = QPoly([1])
    # multiply/divide in alternation so every partial quotient is itself a q-binomial
    for i in range(j):
        out = (out * _one_minus_q_power(n - i)).exact_div(_one_minus_q_power(i + 1))
    return out


def catalan(m: int) -> int:
    if m < 0:
        raise DomainError(f"Catalan index must be >= 0, got {m}")
    return math.comb(2 * m, m) // (m + 1)


def des_count_formula(n: int, k: int) -> int:
    """Number of 321-avoiding involutions of size n with k descents."""
    if k < 0:
        raise DomainError("k must be non-negative")
    return math.comb((n + 1) // 2, k) * math.comb(n // 2, k)


def _q_binomial_or_zero(a: int, k: int) -> QPoly:
    return q_binomial(a, k) if 0 <= k <= a else QPoly()


def joint_des_maj(n: int, k: int) -> QPoly:
    """``q^{k^2} [ceil(n/2) choose k]_q [floor(n/2) choose k]_q``."""
    if k < 0:
        raise DomainError("k must be non-negative")
    return (_q_binomial_or_zero((n + 1) // 2, k) * _q_binomial_or_zero(n // 2, k)).shift(k * k)


def maj_poly(cls: PermClass | str, n: int, stat: str = "maj", backend: str = "structural") -> QPoly:
    """Generating polynomial of ``maj`` (or ``comaj``) over a class, by enumeration."""
    if stat not in ("maj", "comaj"):
        raise DomainError(f"unknown statistic {stat!r}")
    f = maj_of if stat == "maj" else comaj_of
    return QPoly.from_exponents(f(p.entries) for p in enumerate_class(cls, n, backend))


def fibonacci_maj(n: int) -> QPoly:
    """``p_n = p_{n-1} + q^{n-1} p_{n-2}`` with ``p_0 = p_1 = 1``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    prev, cur = QPoly([1]), QPoly([1])
    for m in range(2, n + 1):
        prev, cur = cur, cur + prev.shift(m - 1)
    return cur


def fibonacci_des_counts(n: int) -> list[int]:
    """Coefficients of ``t^k x^n`` in ``1/(1 - x - t x^2)``, listed by k."""
    if n < 0:
        raise DomainError("n must be non-negative")
    # each row is a polynomial in t; the series satisfies f_n = f_{n-1} + t f_{n-2}
    rows = [QPoly([1])]
    for m in range(1, n + 1):
        rows.append(rows[m - 1] + (rows[m - 2].shift(1) if m >= 2 else QPoly()))
    return list(rows[n].coeffs)


def double213_claim(n: int) -> QPoly:
    """The closed form ``(1 - q^n)/(1 - q)`` asserted for I_n(321, 213)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return _one_minus_q_power(n).exact_div(_one_minus_q_power(1))


def double213_enumerated(n: int) -> QPoly:
    return maj_poly(PermClass.I_321_213, n)


def has_consecutive(S: Iterable[int]) -> bool:
    s = set(S)
    return any(i + 1 in s for i in s)


def nonconsecutive_subsets(n: int, base: Iterable[int] = ()) -> Iterator[frozenset[int]]:
    """Subsets of ``[n-1]`` containing ``base`` with no two consecutive elements."""
    base = frozenset(base)

    def rec(i, chosen):
        if i > n - 1:
            yield frozenset(chosen)
            return
        if i not in base:
            yield from rec(i + 1, chosen)
        chosen.append(i)
        yield from rec(i + 2, chosen)
        chosen.pop()

    for T in rec(1, []):
        if base <= T:
            yield T


def superset_count(n: int, S: Iterable[int]) -> int:
    """#{pi in S_n(321) : Des(pi) contains S}."""
    S = frozenset(S)
    _check_subset(n, S)
    return 0 if has_consecutive(S) else catalan(n - len(S))


def exact_descent_count(n: int, S: Iterable[int]) -> int:
    """#{pi in S_n(321) : Des(pi) = S} by inclusion-exclusion over supersets."""
    S = frozenset(S)
    _check_subset(n, S)
    return sum((-1) ** (len(T) - len(S)) * catalan(n - len(T)) for T in nonconsecutive_subsets(n, S))


def _check_subset(n: int, S: frozenset[int]):
    if any(not 1 <= i <= n - 1 for i in S):
        raise DomainError(f"{sorted(S)} is not a subset of [1, {n - 1}]")


def _catalan_or_zero(m: int) -> int:
    return catalan(m) if m >= 0 else 0


def a_poly(n: int, m: int, method: str = "recurrence") -> SubsetPoly:
    """``A_{n,m}(x) = sum_T C_{m-|T|} prod_{j in T} (x_j - 1)`` over non-consecutive T in [n-1]."""
    if n < 0 or m < 0:
        raise DomainError("n and m must be non-negative")
    if method == "direct":
        out = SubsetPoly()
        for T in nonconsecutive_subsets(n):
            term = SubsetPoly.constant(_catalan_or_zero(m - len(T)))
            for j in T:
                term = term * (SubsetPoly.variable(j) - 1)
            out = out + term
        return out
    if method == "recurrence":
        return _a_rec(n, m)
    raise DomainError(f"unknown method {method!r}")


def _a_rec(n: int, m: int) -> SubsetPoly:
    table: dict[tuple[int, int], SubsetPoly] = {}

    def get(a, b):
        key = (a, b)
        if key not in table:
            if a <= 1:
                table[key] = SubsetPoly.constant(catalan(b))
            elif b == 0:
                table[key] = SubsetPoly.one()
            else:
                table[key] = (SubsetPoly.variable(a - 1) - 1) * get(a - 2, b - 1) + get(a - 1, b)
        return table[key]

    # fill bottom-up so the recursion depth stays small
    for a in range(n + 1):
        for b in range(m + 1):
            get(a, b)
    return table[(n, m)]


def descent_set_poly(cls: PermClass | str, n: int, backend: str = "structural") -> SubsetPoly:
    counts: dict[frozenset[int], int] = defaultdict(int)
    for p in enumerate_class(cls, n, backend):
        counts[descent_set(p.entries)] += 1
    return SubsetPoly(counts)


def specialize(p: SubsetPoly) -> QPoly:
    """Substitute ``x_j -> q^j``."""
    out: dict[int, int] = defaultdict(int)
    for k, c in p.terms.items():
        out[sum(k)] += c
    if not out:
        return QPoly()
    return QPoly(out.get(d, 0) for d in range(max(out) + 1))


def limit_joint_series(k: int, order: int) -> QPoly:
    """``q^{k^2} / ((1-q)(1-q^2)...(1-q^k))^2`` truncated at degree ``order``."""
    if k < 0 or order < 0:
        raise DomainError("k and order must be non-negative")
    den = QPoly([1])
    for i in range(1, k + 1):
        den = den * _one_minus_q_power(i) * _one_minus_q_power(i)
    return den.series_inverse(order).shift(k * k).truncate(order)


def limit_hd_series(k: int, order: int) -> SubsetPoly:
    """Terms ``x_S`` with ``|S| = k`` and ``max S <= order`` of the large-n
    descent-set series, expanded from

        x^{(1, 3, ..., 2k-1)} / prod_j (1 - x_j x_{j+1} ... x_k)^2

    where exponent vector ``(i_1, ..., i_k)`` stands for ``S = {i_1 < ... < i_k}``.
    """
    if k < 0 or order < 0:
        raise DomainError("k and order must be non-negative")
    if k == 0:
        return SubsetPoly.one()
    out: dict[frozenset[int], int] = {}

    def rec(j, exps, weight):
        # exps[t] is the running exponent of x_{t+1}; factor j adds 1 to x_j..x_k
        if j == k:
            if exps[-1] <= order:
                out[frozenset(exps)] = out.get(frozenset(exps), 0) + weight
            return
        m = 0
        while True:
            trial = exps[:j] + [e + m for e in exps[j:]]
            if trial[-1] > order:
                break
            # 1/(1-y)^2 = sum (m+1) y^m
            rec(j + 1, trial, weight * (m + 1))
            m += 1

    rec(0, [2 * t + 1 for t in range(k)], 1)
    return SubsetPoly(out)


def limit_series(kind: str, k: int, order: int) -> QPoly | SubsetPoly:
    if kind == "joint_k":
        return limit_joint_series(k, order)
    if kind == "hd_multivariate":
        return limit_hd_series(k, order)
    raise DomainError(f"unknown limit series {kind!r}")
