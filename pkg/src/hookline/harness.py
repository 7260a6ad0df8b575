"""Verification suites, distribution tables and bijection traces.

Each suite compares a closed form or a bijection against an enumeration
oracle and returns one :class:`CheckRecord` per parameter value.  Every suite
has its own default size bound; ``n_max`` only ever lowers it.
"""

from __future__ import annotations

import csv
import io
import itertools
import math
import time
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

from . import paths as P
from .errors import DomainError, NotFibonacci, ParseError
from .partitions import (
    BoxSpec, Partition, boundary_path, enumerate_in_box, hd_count, hook_decomposition,
    partition_count, partition_from_boundary, partitions_of, partitions_with_hd,
    psi, psi_inverse,
)
from .perm_core import (
    PermClass, Permutation, avoids, avoids_321, ascent_set, comaj, descent_set,
    enumerate_class, fibonacci_blocks, maj, parse_permutation,
)
from .polynomials import (
    QPoly, SubsetPoly, a_poly, catalan, des_count_formula, descent_set_poly,
    double213_claim, exact_descent_count, fibonacci_des_counts, fibonacci_maj,
    joint_des_maj, limit_hd_series, limit_joint_series, nonconsecutive_subsets,
    q_binomial, specialize, superset_count,
)
from .tableaux import involution_transpose, rs_correspondence, rs_inverse

PASS = "pass"
FAIL = "fail"
KNOWN = "known-discrepancy"

# checks whose stated closed form disagrees with enumeration; reported, never failed
KNOWN_DISCREPANCIES = frozenset({"double-213/maj-claim"})


@dataclass
class CheckRecord:
    check: str
    param: str
    expected: object
    actual: object
    status: str


@dataclass
class VerificationReport:
    suite: str
    records: list[CheckRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.status != FAIL for r in self.records)

    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == FAIL]

    def known(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == KNOWN]

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "elapsed": round(self.elapsed, 3),
            "records": [asdict(r) for r in self.records],
        }

    def format_text(self, verbose: bool = False) -> str:
        lines = []
        by_check: dict[str, list[CheckRecord]] = defaultdict(list)
        for r in self.records:
            by_check[r.check].append(r)
        for check, recs in by_check.items():
            counts = Counter(r.status for r in recs)
            status = FAIL if counts[FAIL] else (KNOWN if counts[KNOWN] else PASS)
            lines.append(f"{status.upper():<18} {check}  ({len(recs)} cases)")
            for r in recs:
                if verbose or r.status != PASS:
                    lines.append(f"    {r.status:<18} {r.param}: expected {r.expected}, actual {r.actual}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"suite {self.suite}: {verdict} ({len(self.records)} records, {self.elapsed:.2f}s)")
        return "\n".join(lines)


def _record(check: str, param, expected, actual) -> CheckRecord:
    ok = expected == actual
    if ok:
        status = PASS
    elif check in KNOWN_DISCREPANCIES:
        status = KNOWN
    else:
        status = FAIL
    return CheckRecord(check, str(param), _plain(expected), _plain(actual), status)


def _plain(v):
    if isinstance(v, (QPoly, SubsetPoly, Partition)):
        return str(v)
    if isinstance(v, (set, frozenset)):
        return sorted((_plain(x) for x in v), key=str)
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in sorted(v.items(), key=lambda kv: str(kv[0]))}
    return v


def _bound(default: int, n_max: int | None) -> int:
    return default if n_max is None else min(default, n_max)


def _i321(n):
    return [p.entries for p in enumerate_class(PermClass.I_321, n)]


def _s321(n):
    return [p.entries for p in enumerate_class(PermClass.S_321, n)]


def _brute_set(cls, n):
    return {p.entries for p in enumerate_class(cls, n, "brute")}


def _same_set(check: str, param, oracle: set, other: set) -> CheckRecord:
    """Compare two member sets; records sizes rather than the sets themselves."""
    actual = len(other) if oracle == other else f"differs in {len(oracle ^ other)} members"
    return _record(check, param, len(oracle), actual)


# --- suites -----------------------------------------------------------------


def suite_round_trips(n_max=None):
    out = []
    for n in range(_bound(12, n_max) + 1):
        prefixes = list(P.enumerate_paths("prefix", n))
        grands = list(P.enumerate_paths("grand", n))
        invs = _i321(n)

        bad = sum(P.rho(P.rho_inverse(p)) != p for p in prefixes)
        bad += sum(P.rho_inverse(P.rho(w)).entries != w for w in invs)
        out.append(_record("round-trips/rho", f"n={n}", 0, bad))

        images = {P.xi(p) for p in prefixes}
        bad = sum(P.xi_inverse(P.xi(p)) != p for p in prefixes)
        bad += sum(P.xi(P.xi_inverse(g)) != g for g in grands)
        bad += images != set(grands)
        out.append(_record("round-trips/xi", f"n={n}", 0, bad))

        box = BoxSpec(n)
        parts = list(enumerate_in_box(box))
        bad = sum(psi_inverse(psi(lam, box)) != lam for lam in parts)
        bad += sum(psi(psi_inverse(g), box) != g for g in grands)
        out.append(_record("round-trips/psi", f"n={n}", 0, bad))

        bad = sum(partition_from_boundary(boundary_path(lam, box)) != lam for lam in parts)
        bad += sum(boundary_path(partition_from_boundary(g), box) != g for g in grands)
        out.append(_record("round-trips/boundary", f"n={n}", 0, bad))

    for n in range(_bound(8, n_max) + 1):
        bad = 0
        for p in enumerate_class(PermClass.ALL, n, "brute"):
            Pt, Qt = rs_correspondence(p)
            bad += rs_inverse(Pt, Qt) != p
        out.append(_record("round-trips/rs", f"n={n}", 0, bad))
    return out


def suite_peaks_xi(n_max=None):
    out = []
    for n in range(_bound(14, n_max) + 1):
        prefixes = list(P.enumerate_paths("prefix", n))
        bad = sum(P.peak_set(p) != P.peak_set(P.xi(p)) for p in prefixes)
        out.append(_record("peaks-xi/peak-preserved", f"n={n} |P_n|={len(prefixes)}", 0, bad))
    return out


def suite_des_peak(n_max=None):
    out = []
    for n in range(_bound(12, n_max) + 1):
        invs = _i321(n)
        bad = sum(descent_set(w) != P.peak_set(P.rho(w)) for w in invs)
        out.append(_record("des-peak/des-equals-peak", f"n={n}", 0, bad))
    for n in range(_bound(9, n_max) + 1):
        out.append(_same_set("des-peak/membership", f"n={n}", _brute_set(PermClass.I_321, n), set(_i321(n))))
    return out


def suite_des(n_max=None):
    out = []
    for n in range(_bound(14, n_max) + 1):
        hist = Counter(len(descent_set(w)) for w in _i321(n))
        formula = {k: des_count_formula(n, k) for k in range(max(n, 1)) if des_count_formula(n, k)}
        out.append(_record("des/histogram", f"n={n}", formula, dict(hist)))
        # the count of grand paths by peaks is the combinatorial identity the formula rests on
        if n <= 12:
            gh = Counter(len(P.peak_set(g)) for g in P.enumerate_paths("grand", n))
            out.append(_record("des/grand-peaks", f"n={n}", formula, dict(gh)))
    return out


def suite_maj(n_max=None):
    out = []
    for n in range(_bound(14, n_max) + 1):
        enumerated = QPoly.from_exponents(maj(w) for w in _i321(n))
        out.append(_record("maj/q-binomial", f"n={n}", q_binomial(n, n // 2), enumerated))
    return out


def suite_main_theorem(n_max=None):
    out = []
    for n in range(_bound(12, n_max) + 1):
        box = BoxSpec(n)
        perm_side = Counter(descent_set(w) for w in _i321(n))
        part_side = Counter(frozenset(hook_decomposition(lam)) for lam in enumerate_in_box(box))
        out.append(_record("main-theorem/counts", f"n={n}", dict(part_side), dict(perm_side)))
        bad = 0
        images = set()
        for w in _i321(n):
            lam = psi_inverse(P.xi(P.rho(w)))
            images.add(lam)
            bad += frozenset(hook_decomposition(lam)) != descent_set(w) or not box.fits(lam)
        bad += len(images) != sum(perm_side.values())
        out.append(_record("main-theorem/composition", f"n={n}", 0, bad))
    return out


def suite_joint(n_max=None):
    out = []
    for n in range(_bound(12, n_max) + 1):
        by_k: dict[int, list[int]] = defaultdict(list)
        for w in _i321(n):
            d = descent_set(w)
            by_k[len(d)].append(sum(d))
        for k in range(max(n, 1)):
            out.append(_record("joint/des-maj", f"n={n} k={k}", joint_des_maj(n, k), QPoly.from_exponents(by_k.get(k, []))))
    return out


def _fast_123_free(word) -> bool:
    return avoids_321(word[::-1])


def suite_strehl(n_max=None):
    out = []
    for n in range(_bound(9, n_max) + 1):
        bad = 0
        for w in enumerate_class(PermClass.INVOLUTIONS, n):
            t = involution_transpose(w)
            bad += ascent_set(w.entries) != descent_set(t.entries)
            bad += involution_transpose(t) != w
        out.append(_record("strehl/asc-equals-des-transpose", f"n={n}", 0, bad))
    for n in range(_bound(12, n_max) + 1):
        filtered = [w.entries for w in enumerate_class(PermClass.INVOLUTIONS, n) if _fast_123_free(w.entries)]
        transported = {w.entries for w in enumerate_class(PermClass.I_123, n)}
        out.append(_same_set("strehl/i123-membership", f"n={n}", set(filtered), transported))
        poly = QPoly.from_exponents(comaj(w) for w in filtered)
        out.append(_record("strehl/comaj-i123", f"n={n}", q_binomial(n, n // 2), poly))
    return out


def suite_p_of_m(n_max=None):
    out = []
    reported = [1, 1, 2, 3, 5, 7, 11, 15, 22]
    for m in range(_bound(8, n_max) + 1):
        n = 2 * m
        count = sum(1 for w in _i321(n) if maj(w) == m)
        out.append(_record("p-of-m/count", f"m={m} n={n}", partition_count(m), count))
        out.append(_record("p-of-m/reported", f"m={m}", reported[m], partition_count(m)))
    return out


def suite_large_n(n_max=None):
    out = []
    cap = _bound(6, n_max)
    for S in sorted(nonconsecutive_subsets(cap + 1), key=lambda s: (len(s), sorted(s))):
        if not S:
            continue
        hooks = sorted(S)
        k = len(hooks)
        n = 2 * (hooks[-1] - k + 1)
        formula = hd_count(hooks)
        des_count = sum(1 for w in _i321(n) if descent_set(w) == S)
        asc_count = sum(1 for w in enumerate_class(PermClass.I_123, n) if ascent_set(w.entries) == S)
        built = list(partitions_with_hd(hooks))
        exhaustive = {lam for lam in partitions_of(sum(hooks)) if list(hook_decomposition(lam)) == hooks}
        box = BoxSpec(n)
        out.append(_record("large-n/des-count", f"S={hooks} n={n}", formula, des_count))
        out.append(_record("large-n/asc-count-i123", f"S={hooks} n={n}", formula, asc_count))
        out.append(_record("large-n/hd-partitions", f"S={hooks}", exhaustive, set(built)))
        out.append(_record("large-n/fit-in-box", f"S={hooks} n={n}", len(built), sum(box.fits(l) for l in built)))
    return out


def suite_double_312(n_max=None):
    out = []
    for n in range(_bound(12, n_max) + 1):
        members = [w for w in _i321(n) if avoids(w, (3, 1, 2))]
        out.append(_record("double-312/maj-recurrence", f"n={n}", fibonacci_maj(n), QPoly.from_exponents(maj(w) for w in members)))
        hist = Counter(len(descent_set(w)) for w in members)
        series = fibonacci_des_counts(n)
        out.append(_record("double-312/des-series", f"n={n}", series, [hist.get(k, 0) for k in range(len(series))]))
        out.append(_record("double-312/des-binomial", f"n={n}", [math.comb(n - k, k) for k in range(n // 2 + 1)], series))
    for n in range(_bound(9, n_max) + 1):
        bad = 0
        brute = _brute_set(PermClass.I_321_312, n)
        for w in _brute_set(PermClass.INVOLUTIONS, n):
            try:
                fibonacci_blocks(w)
                ok = True
            except NotFibonacci:
                ok = False
            bad += ok != (w in brute)
        out.append(_record("double-312/fibonacci-blocks", f"n={n}", 0, bad))
    return out


def suite_double_213(n_max=None):
    out = []
    for n in range(1, _bound(10, n_max) + 1):
        members = [w for w in _i321(n) if avoids(w, (2, 1, 3))]
        enumerated = QPoly.from_exponents(maj(w) for w in members)
        out.append(_record("double-213/maj-claim", f"n={n}", double213_claim(n), enumerated))
        if n <= 9:
            out.append(_same_set("double-213/enumeration", f"n={n}", _brute_set(PermClass.I_321_213, n), set(members)))
    return out


def suite_s321(n_max=None):
    out = []
    for n in range(_bound(10, n_max) + 1):
        dp = descent_set_poly(PermClass.S_321, n)
        bad = 0
        subsets = [frozenset(c) for r in range(n) for c in itertools.combinations(range(1, n), r)]
        for S in subsets:
            sup = sum(c for key, c in dp.terms.items() if S <= key)
            bad += sup != superset_count(n, S)
        out.append(_record("s321/superset-counts", f"n={n} ({len(subsets)} sets)", 0, bad))
    for n in range(_bound(8, n_max) + 1):
        out.append(_same_set("s321/membership", f"n={n}", _brute_set(PermClass.S_321, n), set(_s321(n))))
    return out


def suite_cors321(n_max=None):
    out = []
    for n in range(_bound(10, n_max) + 1):
        enumerated = descent_set_poly(PermClass.S_321, n)
        rec = a_poly(n, n, "recurrence")
        direct = a_poly(n, n, "direct")
        out.append(_record("cors321/recurrence", f"n={n}", enumerated, rec))
        out.append(_record("cors321/direct", f"n={n}", enumerated, direct))
        bad = 0
        for r in range(n):
            for S in itertools.combinations(range(1, n), r):
                bad += exact_descent_count(n, S) != enumerated.coefficient(S)
        out.append(_record("cors321/mobius", f"n={n}", 0, bad))
        maj_enum = QPoly.from_exponents(maj(w) for w in _s321(n))
        out.append(_record("cors321/specialize", f"n={n}", maj_enum, specialize(rec)))
    return out


def suite_limits(n_max=None):
    out = []
    order = 10
    for k in range(4):
        series = limit_joint_series(k, order)
        for m in range(order + 1):
            values = {joint_des_maj(n, k)[m] for n in range(max(2 * m, 1), 2 * order + 21)}
            out.append(_record("limits/joint-stabilizes", f"k={k} m={m}", {series[m]}, values))
    cap = _bound(14, n_max)
    for k in range(4):
        hd = limit_hd_series(k, 8)
        for S in nonconsecutive_subsets(9):
            if len(S) != k:
                continue
            hooks = sorted(S)
            expected = hd_count(hooks)
            out.append(_record("limits/hd-coefficient", f"S={hooks}", expected, hd.coefficient(S)))
            n = 2 * (hooks[-1] - k + 1) if hooks else 2
            if n <= cap:
                count = sum(1 for w in _i321(n) if descent_set(w) == S)
                out.append(_record("limits/hd-enumerated", f"S={hooks} n={n}", expected, count))
    return out


def suite_s321_bijection(n_max=None):
    out = []
    for n in range(_bound(8, n_max) + 1):
        bad = 0
        images = set()
        for w in _s321(n):
            D = P.s321_to_dyck(w)
            images.add(D)
            first_half = {i for i in P.peak_set(D) if i <= n - 1}
            bad += len(D) != 2 * n or not P.classify(D).is_dyck
            bad += descent_set(w) != first_half
            bad += maj(w) != sum(first_half)
            bad += P.dyck_to_s321(D).entries != w
        dyck = set(P.enumerate_paths("dyck", n))
        bad += images != dyck
        bad += sum(P.s321_to_dyck(P.dyck_to_s321(d)) != d for d in dyck)
        out.append(_record("s321-bijection/peaks-and-round-trip", f"n={n}", 0, bad))
        out.append(_record("s321-bijection/catalan", f"n={n}", catalan(n), len(images)))
    return out


SUITES: dict[str, Callable[[int | None], list[CheckRecord]]] = {
    "round-trips": suite_round_trips,
    "peaks-xi": suite_peaks_xi,
    "des-peak": suite_des_peak,
    "des": suite_des,
    "maj": suite_maj,
    "main-theorem": suite_main_theorem,
    "joint": suite_joint,
    "strehl": suite_strehl,
    "p-of-m": suite_p_of_m,
    "large-n": suite_large_n,
    "double-312": suite_double_312,
    "double-213": suite_double_213,
    "s321": suite_s321,
    "cors321": suite_cors321,
    "limits": suite_limits,
    "s321-bijection": suite_s321_bijection,
}

# closed-form operation -> the single check comparing it with an enumeration oracle
CLOSED_FORM_CHECKS = {
    "q_binomial": "maj/q-binomial",
    "des_count_formula": "des/histogram",
    "joint_des_maj": "joint/des-maj",
    "fibonacci_maj": "double-312/maj-recurrence",
    "fibonacci_des_counts": "double-312/des-series",
    "double213_claim": "double-213/maj-claim",
    "superset_count": "s321/superset-counts",
    "exact_descent_count": "cors321/mobius",
    "a_poly": "cors321/recurrence",
    "catalan": "s321-bijection/catalan",
    "limit_series": "limits/hd-enumerated",
}


def _run_suite(args):
    name, n_max = args
    return SUITES[name](n_max)


def verify(suite: str = "all", n_max: int | None = None, jobs: int = 1) -> VerificationReport:
    """Run one suite (or ``"all"``) and collect a report; failures are data, not exceptions."""
    if suite == "all":
        names = list(SUITES)
    elif suite in SUITES:
        names = [suite]
    else:
        raise ParseError(f"unknown suite {suite!r}; choose from all, {', '.join(SUITES)}")
    if n_max is not None and n_max < 0:
        raise DomainError("n_max must be non-negative")
    start = time.perf_counter()
    tasks = [(name, n_max) for name in names]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_suite, tasks))
    else:
        results = [_run_suite(t) for t in tasks]
    report = VerificationReport(suite)
    for recs in results:
        report.records.extend(recs)
    report.elapsed = time.perf_counter() - start
    return report


# --- distributions ----------------------------------------------------------


@dataclass
class Table:
    columns: list[str]
    rows: list[list]
    closed_form_matches: bool | None = None

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(self.columns)
        writer.writerows(self.rows)
        return buf.getvalue()

    def to_json(self) -> dict:
        return {
            "columns": self.columns,
            "rows": self.rows,
            "closed_form_matches": self.closed_form_matches,
        }

    def format_text(self) -> str:
        widths = [max(len(str(c)), *(len(str(r[i])) for r in self.rows)) if self.rows else len(str(c))
                  for i, c in enumerate(self.columns)]
        lines = ["  ".join(str(c).ljust(w) for c, w in zip(self.columns, widths)).rstrip()]
        lines += ["  ".join(str(v).ljust(w) for v, w in zip(r, widths)).rstrip() for r in self.rows]
        if self.closed_form_matches is not None:
            lines.append(f"closed form matches: {self.closed_form_matches}")
        return "\n".join(lines)


STATISTICS = ("des", "maj", "comaj", "descent-set")


def _closed_hist(cls: PermClass, n: int, stat: str):
    """Closed-form histogram for the (class, statistic) pairs that have one."""
    if cls is PermClass.I_321 and stat == "des":
        return {k: des_count_formula(n, k) for k in range(max(n, 1))}
    if (cls, stat) in ((PermClass.I_321, "maj"), (PermClass.I_123, "comaj")):
        return dict(enumerate(q_binomial(n, n // 2).coeffs))
    if cls is PermClass.I_321_312 and stat == "maj":
        return dict(enumerate(fibonacci_maj(n).coeffs))
    if cls is PermClass.I_321_312 and stat == "des":
        return dict(enumerate(fibonacci_des_counts(n)))
    if cls is PermClass.I_321_213 and stat == "maj" and n >= 1:
        return dict(enumerate(double213_claim(n).coeffs))
    if cls is PermClass.S_321 and stat == "maj":
        return dict(enumerate(specialize(a_poly(n, n)).coeffs))
    if cls is PermClass.S_321 and stat == "descent-set":
        return {tuple(k): c for k, c in a_poly(n, n).items()}
    if cls is PermClass.I_321 and stat == "descent-set":
        counts = Counter(tuple(hook_decomposition(lam)) for lam in enumerate_in_box(BoxSpec(n)))
        return dict(counts)
    return None


def distribution(cls: PermClass | str, n: int, statistic: str, backend: str = "structural",
                 closed_form: bool = True) -> Table:
    cls = PermClass.parse(cls)
    if statistic not in STATISTICS:
        raise ParseError(f"unknown statistic {statistic!r}; choose from {', '.join(STATISTICS)}")
    counts: Counter = Counter()
    for p in enumerate_class(cls, n, backend):
        w = p.entries
        if statistic == "des":
            key = len(descent_set(w))
        elif statistic == "maj":
            key = maj(w)
        elif statistic == "comaj":
            key = comaj(w)
        else:
            key = tuple(sorted(descent_set(w)))
        counts[key] += 1
    label = "descent_set" if statistic == "descent-set" else statistic
    closed = _closed_hist(cls, n, statistic) if closed_form else None
    if statistic == "descent-set":
        keys = sorted(set(counts) | set(closed or {}), key=lambda k: (len(k), k))
    else:
        keys = sorted(set(counts) | {k for k, v in (closed or {}).items() if v})
    fmt = (lambda k: " ".join(map(str, k)) or "-") if statistic == "descent-set" else (lambda k: k)
    if closed is None:
        return Table([label, "count"], [[fmt(k), counts.get(k, 0)] for k in keys])
    rows = [[fmt(k), counts.get(k, 0), closed.get(k, 0), counts.get(k, 0) == closed.get(k, 0)] for k in keys]
    return Table([label, "count", "closed_form", "match"], rows, all(r[-1] for r in rows))


# --- bijection traces -------------------------------------------------------


@dataclass
class Stage:
    name: str
    value: object
    statistic: str
    stat_value: frozenset[int]

    def to_json(self) -> dict:
        return {
            "stage": self.name,
            "value": str(self.value),
            "statistic": self.statistic,
            "set": sorted(self.stat_value),
        }


CHAIN_STAGES = ("rho", "xi", "psi-inv", "s321", "transpose")


def map_chain(perm: Permutation | str | Sequence[int], chain: Iterable[str]) -> list[Stage]:
    """Push ``perm`` through a sequence of bijections, recording the tracked set at each stage."""
    value: object = parse_permutation(perm)
    trace = [Stage("input", value, "Des", descent_set(value.entries))]
    for name in chain:
        name = name.strip().lower().replace("_", "-")
        if name in ("psi-1", "psiinv", "psi-inverse"):
            name = "psi-inv"
        if name == "rho":
            value = P.rho(_need(value, Permutation, name))
            trace.append(Stage(name, value, "Peak", P.peak_set(value)))
        elif name == "xi":
            value = P.xi(_need(value, P.LatticePath, name))
            trace.append(Stage(name, value, "Peak", P.peak_set(value)))
        elif name == "psi-inv":
            value = psi_inverse(_need(value, P.LatticePath, name))
            trace.append(Stage(name, value, "hd", frozenset(hook_decomposition(value))))
        elif name == "s321":
            w = _need(value, Permutation, name)
            value = P.s321_to_dyck(w)
            trace.append(Stage(name, value, "Peak∩[n-1]", frozenset(i for i in P.peak_set(value) if i < len(w))))
        elif name == "transpose":
            value = involution_transpose(_need(value, Permutation, name))
            trace.append(Stage(name, value, "Des", descent_set(value.entries)))
        else:
            raise ParseError(f"unknown stage {name!r}; choose from {', '.join(CHAIN_STAGES)}")
    return trace


def _need(value, kind, stage):
    if not isinstance(value, kind):
        raise DomainError(f"stage {stage} expects a {kind.__name__}, got {type(value).__name__}")
    return value
