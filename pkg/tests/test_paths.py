import math
from collections import Counter

import pytest
from hypothesis import given, strategies as st

from hookline.errors import DomainError, ParseError
from hookline.paths import (
    LatticePath, classify, dyck_to_s321, enumerate_paths, match_steps, parse_path, peak_set,
    rho, rho_inverse, s321_to_dyck, xi, xi_inverse,
)
from hookline.perm_core import descent_set, enumerate_class, maj
from hookline.polynomials import catalan

import oracles

PREFIX_16 = "NNEENNENNEENNNEN"
GRAND_16 = "NNEEENENNEEENNEN"
INV_12 = (3, 4, 1, 2, 7, 9, 5, 10, 6, 8, 11, 12)

word_strategy = st.text(alphabet="NE", max_size=16)


def test_classify_examples():
    assert classify(PREFIX_16) == (True, False, False)
    assert LatticePath(PREFIX_16).endpoint == (6, 10)
    assert classify("") == (True, True, True)
    assert classify("EN") == (False, True, False)


@given(word_strategy)
def test_classify_matches_definitions(word):
    kind = classify(word)
    assert kind.is_prefix == oracles.never_below(word)
    assert kind.is_grand == (word.count("E") == (len(word) + 1) // 2)
    assert kind.is_dyck == (oracles.never_below(word) and word.count("N") == word.count("E"))
    if kind.is_dyck:
        assert kind.is_prefix


def test_aliases():
    assert parse_path("UURR") == LatticePath("NNEE")
    with pytest.raises(ParseError):
        parse_path("NXE")


def test_peak_set_examples():
    assert peak_set(PREFIX_16) == {2, 6, 9, 14}
    assert peak_set(GRAND_16) == {2, 6, 9, 14}
    assert peak_set("EEE") == set()
    assert peak_set("NE") == {1}


def test_match_steps_examples():
    m = match_steps("NE")
    assert m.pairs == {(1, 2)} and m.unmatched == ()
    assert match_steps(PREFIX_16).unmatched == (5, 12, 13, 16)
    assert match_steps("EN").unmatched == (1, 2)


@given(word_strategy)
def test_matching_is_noncrossing(word):
    m = match_steps(word)
    used = [i for pair in m.pairs for i in pair] + list(m.unmatched)
    assert sorted(used) == list(range(1, len(word) + 1))
    for a, b in m.pairs:
        assert a < b and word[a - 1] == "N" and word[b - 1] == "E"
        for c, d in m.pairs:
            assert not (a < c < b < d)
    # unmatched E's all come before unmatched N's
    kinds = [word[i - 1] for i in m.unmatched]
    assert kinds == sorted(kinds)


def test_xi_examples():
    assert xi(PREFIX_16) == LatticePath(GRAND_16)
    assert xi_inverse(GRAND_16) == LatticePath(PREFIX_16)
    assert xi("NNEE") == LatticePath("NNEE")
    assert xi("N") == LatticePath("E")
    assert xi_inverse("E") == LatticePath("N")
    with pytest.raises(DomainError):
        xi("EN")
    with pytest.raises(DomainError):
        xi_inverse("NN")


@pytest.mark.parametrize("n", range(15))
def test_xi_bijection_and_peaks(n):
    P = oracles.prefixes(n)
    G = set(oracles.grands(n))
    images = set()
    for p in P:
        g = xi(p)
        assert g.steps in G
        assert peak_set(g) == peak_set(p)
        assert xi_inverse(g) == LatticePath(p)
        images.add(g.steps)
        free = match_steps(p).unmatched
        assert all(p[i - 1] == "N" for i in free)
    assert images == G


@pytest.mark.parametrize("n", range(15))
def test_grand_paths_by_peaks(n):
    counts = Counter(len(oracles.peaks(g)) for g in oracles.grands(n))
    for k, c in counts.items():
        assert c == math.comb((n + 1) // 2, k) * math.comb(n // 2, k)


def test_rho_examples():
    assert rho(INV_12) == LatticePath("NNEENNENEENN")
    assert rho((1, 2, 3, 4)) == LatticePath("NNNN")
    assert rho((2, 1)) == LatticePath("NE")
    assert rho_inverse("NNEENNENEENN").entries == INV_12
    assert rho_inverse("NNN").entries == (1, 2, 3)
    assert rho_inverse("NE").entries == (2, 1)


def test_rho_domain_errors():
    with pytest.raises(DomainError):
        rho((3, 2, 1))
    with pytest.raises(DomainError):
        rho((2, 3, 1))
    with pytest.raises(DomainError):
        rho_inverse("EN")


@pytest.mark.parametrize("n", range(13))
def test_rho_round_trip_and_des_peak(n):
    for p in enumerate_paths("prefix", n):
        w = rho_inverse(p)
        assert rho(w) == p
        assert descent_set(w.entries) == peak_set(p)


@pytest.mark.parametrize("n", range(10))
def test_rho_image_matches_brute_force_class(n):
    brute = {tuple(w) for w in oracles.i321(n)} if n <= 8 else \
        {p.entries for p in enumerate_class("i321", n, "brute")}
    assert {rho_inverse(p).entries for p in oracles.prefixes(n)} == brute


def test_s321_examples():
    assert s321_to_dyck((1, 2, 3)) == LatticePath("NNNEEE")
    assert s321_to_dyck((2, 3, 1)) == LatticePath("NNEENE")
    assert dyck_to_s321("NNNEEE").entries == (1, 2, 3)
    assert dyck_to_s321("NNEENE").entries == (2, 3, 1)
    with pytest.raises(DomainError):
        s321_to_dyck((3, 2, 1))
    with pytest.raises(DomainError):
        dyck_to_s321("NEEN")


def test_s321_all_of_d4():
    images = {dyck_to_s321(d).entries for d in oracles.dycks(4)}
    assert len(images) == 14 == catalan(4)


@pytest.mark.parametrize("n", range(9))
def test_s321_bijection(n):
    members = oracles.s321(n)
    images = set()
    for w in members:
        D = s321_to_dyck(w)
        assert classify(D).is_dyck and len(D) == 2 * n
        first = {i for i in peak_set(D) if i <= n - 1}
        assert descent_set(w) == first
        assert maj(w) == sum(first)
        assert dyck_to_s321(D).entries == w
        images.add(D.steps)
    assert images == set(oracles.dycks(n))


@pytest.mark.parametrize("kind, n, size", [
    ("prefix", 4, 6),
    ("grand", 4, 6),
    ("dyck", 3, 5),
])
def test_enumerate_paths_examples(kind, n, size):
    assert len(list(enumerate_paths(kind, n))) == size


@pytest.mark.parametrize("n", range(13))
def test_enumerate_paths_match_oracles(n):
    assert sorted(p.steps for p in enumerate_paths("prefix", n)) == sorted(oracles.prefixes(n))
    assert sorted(p.steps for p in enumerate_paths("grand", n)) == sorted(oracles.grands(n))
    if n <= 6:
        assert sorted(p.steps for p in enumerate_paths("dyck", n)) == sorted(oracles.dycks(n))


def test_prefix_xi_endpoint():
    for n in range(12):
        for p in enumerate_paths("prefix", n):
            assert xi(p).endpoint == ((n + 1) // 2, n // 2)


def test_enumerate_paths_unknown_kind():
    with pytest.raises(ParseError):
        list(enumerate_paths("motzkin", 3))
