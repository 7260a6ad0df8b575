import pytest
from hypothesis import given, strategies as st

from hookline.errors import DomainError, ParseError, ShapeMismatch
from hookline.perm_core import PermClass, ascent_set, avoids, descent_set, enumerate_class
from hookline.tableaux import (
    StandardTableau, involution_transpose, parse_tableau, rs_correspondence, rs_inverse,
    tableau_descent_set, transpose,
)

import oracles

INV_12 = (3, 4, 1, 2, 7, 9, 5, 10, 6, 8, 11, 12)
TABLEAU_12 = StandardTableau(((1, 2, 5, 6, 8, 11, 12), (3, 4, 7, 9, 10)))

perm_strategy = st.integers(min_value=0, max_value=10).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
)


def test_rs_two_row_example():
    P, Q = rs_correspondence(INV_12)
    assert Q == TABLEAU_12
    assert P == Q


def test_rs_small_examples():
    assert rs_correspondence((1, 2, 3)) == (StandardTableau(((1, 2, 3),)),) * 2
    assert rs_correspondence((2, 1)) == (StandardTableau(((1,), (2,))),) * 2


def test_rs_inverse_examples():
    assert rs_inverse(TABLEAU_12, TABLEAU_12).entries == INV_12
    row = StandardTableau(((1, 2, 3),))
    assert rs_inverse(row, row).entries == (1, 2, 3)
    with pytest.raises(ShapeMismatch):
        rs_inverse(StandardTableau(((1, 2), (3,))), row)


@pytest.mark.parametrize("rows", [
    ((2, 1),),
    ((1, 3), (2, 4, 5)),
    ((1, 2), (2,)),
    ((1, 3), (2, 3)),
    ((1, 2), (4,)),
])
def test_non_standard_rejected(rows):
    with pytest.raises(ParseError):
        StandardTableau(rows)


@pytest.mark.parametrize("n", range(9))
def test_rs_round_trip_exhaustive(n):
    for w in oracles.perms(n):
        P, Q = rs_correspondence(w)
        assert P.shape == Q.shape
        assert rs_inverse(P, Q).entries == w


@given(perm_strategy)
def test_rs_schensted_properties(word):
    P, Q = rs_correspondence(word)
    assert descent_set(word) == tableau_descent_set(Q)
    assert (len(P.rows) <= 2) == avoids(word, (3, 2, 1))
    cols = P.shape[0] if P.rows else 0
    assert (cols <= 2) == avoids(word, (1, 2, 3))


@pytest.mark.parametrize("n", range(9))
def test_descent_set_equals_recording_descents(n):
    for w in oracles.perms(n):
        assert descent_set(w) == tableau_descent_set(rs_correspondence(w)[1])


def test_transpose_examples():
    assert transpose(StandardTableau(((1, 2, 3),))) == StandardTableau(((1,), (2,), (3,)))
    assert transpose(TABLEAU_12).shape == (2, 2, 2, 2, 2, 1, 1)


@pytest.mark.parametrize("n", range(9))
def test_transpose_is_involution(n):
    seen = set()
    for w in oracles.perms(n):
        Q = rs_correspondence(w)[1]
        if Q in seen:
            continue
        seen.add(Q)
        assert transpose(transpose(Q)) == Q


def test_tableau_descent_examples():
    assert tableau_descent_set(TABLEAU_12) == {2, 6, 8}
    assert tableau_descent_set(StandardTableau(((1, 2, 3),))) == set()
    assert tableau_descent_set(StandardTableau(((1,), (2,), (3,)))) == {1, 2}


def test_involution_transpose_examples():
    assert involution_transpose((8, 6, 12, 11, 5, 2, 10, 1, 9, 7, 4, 3)).entries == INV_12
    assert involution_transpose((2, 1)).entries == (1, 2)
    for n in range(6):
        assert involution_transpose(tuple(range(1, n + 1))).entries == tuple(range(n, 0, -1))
    with pytest.raises(DomainError):
        involution_transpose((2, 3, 1))


@pytest.mark.parametrize("n", range(10))
def test_involution_symmetry_and_strehl(n):
    for w in enumerate_class(PermClass.INVOLUTIONS, n):
        P, Q = rs_correspondence(w)
        assert P == Q
        t = involution_transpose(w)
        assert involution_transpose(t) == w
        assert ascent_set(w.entries) == descent_set(t.entries)


@pytest.mark.parametrize("n", range(9))
def test_transpose_maps_i123_onto_i321(n):
    i123 = {p.entries for p in enumerate_class(PermClass.I_123, n, "brute")}
    i321 = {p.entries for p in enumerate_class(PermClass.I_321, n, "brute")}
    assert {involution_transpose(w).entries for w in i123} == i321


def test_parse_tableau_format():
    T = parse_tableau("1 2 5 6 8 11 12; 3 4 7 9 10")
    assert T == TABLEAU_12
    assert str(T) == "1 2 5 6 8 11 12; 3 4 7 9 10"
    with pytest.raises(ParseError):
        parse_tableau("1 x")
