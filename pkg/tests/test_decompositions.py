import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from graphcheck import factor_problems
from starramsey.decompositions import (
    HAMILTONIAN,
    ONE_FACTOR,
    hamiltonian_decomposition,
    one_factorization,
    open_cycle,
    path_matchings,
    split_path_into_matchings,
    two_factorization,
    walk_path,
)
from starramsey.errors import EvenOrder, NotAPath, OddOrder


def test_one_factorization_k4():
    assert one_factorization(4).factors == (
        ((0, 3), (1, 2)),
        ((1, 3), (0, 2)),
        ((2, 3), (0, 1)),
    )


def test_one_factorization_k2():
    assert one_factorization(2).factors == (((0, 1),),)


def test_hamiltonian_k5():
    ham = hamiltonian_decomposition(5)
    assert len(ham) == 2
    assert factor_problems(5, HAMILTONIAN, ham.factors) == []


@pytest.mark.parametrize("n", [0, 1, 3, 7])
def test_one_factorization_rejects_odd(n):
    with pytest.raises(OddOrder):
        one_factorization(n)


@pytest.mark.parametrize("n", [1, 2, 4, 10])
def test_hamiltonian_rejects_even(n):
    with pytest.raises(EvenOrder):
        hamiltonian_decomposition(n)
    with pytest.raises(EvenOrder):
        two_factorization(n)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40))
def test_one_factorization_invariants(h):
    n = 2 * h
    fac = one_factorization(n)
    assert fac.kind == ONE_FACTOR and len(fac) == n - 1
    assert factor_problems(n, ONE_FACTOR, fac.factors) == []


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 40))
def test_hamiltonian_invariants(h):
    n = 2 * h + 1
    fac = hamiltonian_decomposition(n)
    assert len(fac) == h
    assert factor_problems(n, HAMILTONIAN, fac.factors) == []
    assert factor_problems(n, "two_factor", two_factorization(n).factors) == []


def test_deterministic():
    assert one_factorization(12) == one_factorization(12)
    assert hamiltonian_decomposition(13) == hamiltonian_decomposition(13)


def test_split_four_vertex_path():
    first, second = split_path_into_matchings([(2, 3), (0, 1), (1, 2)])
    assert sorted(first) == [(0, 1), (2, 3)]
    assert second == [(1, 2)]


def test_split_five_vertex_path():
    # path 0-4-2-1-3, walked from the smaller endpoint 0
    first, second = split_path_into_matchings([(0, 4), (4, 2), (2, 1), (1, 3)])
    assert first == [(0, 4), (1, 2)]
    assert second == [(2, 4), (1, 3)]


@pytest.mark.parametrize(
    "edges",
    [
        [],
        [(0, 1), (1, 2), (2, 0)],
        [(0, 1), (2, 3)],
        [(0, 1), (0, 2), (0, 3)],
        [(0, 1), (0, 1)],
        [(1, 1)],
    ],
)
def test_walk_path_rejects(edges):
    with pytest.raises(NotAPath):
        walk_path(edges)


def test_walk_path_start():
    assert walk_path([(0, 1), (1, 2)]) == [0, 1, 2]
    assert walk_path([(0, 1), (1, 2)], start=2) == [2, 1, 0]
    with pytest.raises(NotAPath):
        walk_path([(0, 1), (1, 2)], start=1)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 15), st.data())
def test_open_cycle_gives_alternating_matchings(h, data):
    n = 2 * h + 1
    cycles = hamiltonian_decomposition(n).factors
    cycle = cycles[data.draw(st.integers(0, h - 1))]
    at = data.draw(st.integers(0, n - 1))
    deleted, seq = open_cycle(cycle, at)
    assert at in deleted and seq[0] == at and len(seq) == n
    first, second = path_matchings(seq)
    assert len(first) + len(second) == n - 1
    assert set(first) | set(second) | {deleted} == set(cycle)
    for m in (first, second):
        vs = [v for e in m for v in e]
        assert len(vs) == len(set(vs))
    assert at in {v for e in first for v in e}
    assert at not in {v for e in second for v in e}
