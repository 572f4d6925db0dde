from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings

from matroid_gwp.errors import (
    ElementOutOfRange,
    EmptyBasisFamily,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    InvalidElongation,
    UnequalBasisCardinality,
)
from matroid_gwp.matroid import (
    Matroid,
    circuits,
    dual,
    elongate,
    euler_characteristic,
    free,
    from_bases,
    independent_sets,
    nullity,
    rank,
    restrict,
    restrict_mask,
    to_labels,
    uniform,
    uniform_euler_characteristic,
)

from .conftest import RUNEX_BASES, RUNEX_CIRCUITS, load_fixture, vector_matroids


def all_masks(n):
    return range(1 << n)


def brute_rank(M, mask):
    # largest independent subset, by definition, over all subsets
    best = 0
    sub = mask
    while True:
        if M.is_independent_mask(sub):
            best = max(best, sub.bit_count())
        if sub == 0:
            return best
        sub = (sub - 1) & mask


# --- construction -----------------------------------------------------------


def test_runex_from_bases():
    M = from_bases(7, RUNEX_BASES)
    assert M.rank == 3
    assert len(M.bases) == 24


def test_loop_matroid():
    M = from_bases(1, [[]])
    assert M.rank == 0 and M.n == 1
    assert circuits(M) == [(1,)]


def test_exchange_holds_for_two_bases():
    # {1,2},{1,3}: 2 -> 3 and 3 -> 2 both exchange
    M = from_bases(3, [{1, 2}, {1, 3}])
    assert M.rank == 2


def test_rejects_empty_family():
    with pytest.raises(EmptyBasisFamily):
        from_bases(3, [])


def test_rejects_unequal_cardinality():
    with pytest.raises(UnequalBasisCardinality):
        from_bases(3, [{1, 2}, {3}])


def test_rejects_exchange_violation():
    # {1,2} and {3,4}: removing 1 from {1,2} cannot be repaired by 3 or 4
    with pytest.raises(ExchangeAxiomViolation) as info:
        from_bases(4, [{1, 2}, {3, 4}])
    assert info.value.pair[0] in {(1, 2), (3, 4)}


def test_rejects_out_of_range():
    with pytest.raises(ElementOutOfRange):
        from_bases(3, [{1, 4}])


def test_cap(monkeypatch):
    monkeypatch.setenv("MATROID_MAX_N", "5")
    with pytest.raises(GroundSetTooLarge):
        uniform(2, 6).rank_table


@pytest.mark.parametrize("r,n,count", [(2, 4, 6), (0, 3, 1), (3, 7, 35)])
def test_uniform_basis_count(r, n, count):
    assert len(uniform(r, n).bases) == count


def test_uniform_rank_zero():
    assert uniform(0, 3).basis_labels() == [()]


def test_uniform_bad_args():
    with pytest.raises(ValueError):
        uniform(4, 3)


# --- rank ---------------------------------------------------------------------


def test_runex_rank_queries(runex):
    assert rank(runex, {1, 3, 6}) == 3 and nullity(runex, {1, 3, 6}) == 0
    assert rank(runex, {5, 6}) == 1 and nullity(runex, {5, 6}) == 1
    assert rank(runex, set()) == 0


def test_rank_out_of_range(runex):
    with pytest.raises(ElementOutOfRange):
        rank(runex, {8})


def test_rank_table_matches_definition(runex):
    for mask in all_masks(7):
        assert runex.rank_table[mask] == brute_rank(runex, mask) == runex.rank_of_mask(mask)


@settings(max_examples=40, deadline=None)
@given(vector_matroids())
def test_rank_monotone_and_submodular(M):
    r = M.rank_table
    n = M.n
    for a in all_masks(n):
        assert 0 <= r[a] <= min(a.bit_count(), M.rank)
        for b in all_masks(n):
            assert r[a | b] + r[a & b] <= r[a] + r[b]
            if a & b == a:
                assert r[a] <= r[b]


# --- dual -------------------------------------------------------------------------


def test_dual_involution(runex):
    assert dual(dual(runex)) == runex


def test_dual_rank(runex):
    assert dual(runex).rank == 4


@pytest.mark.parametrize("r,n", [(0, 3), (2, 4), (3, 7), (5, 5)])
def test_dual_uniform(r, n):
    assert dual(uniform(r, n)) == uniform(n - r, n)


@settings(max_examples=40, deadline=None)
@given(vector_matroids(max_n=8))
def test_dual_rank_formula(M):
    D = dual(M)
    full = M.ground
    for s in all_masks(M.n):
        assert D.rank_table[s] == s.bit_count() + M.rank_table[full & ~s] - M.rank


# --- restriction ----------------------------------------------------------------


def test_restrict_whole(runex):
    assert restrict(runex, range(1, 8)) == runex


def test_restrict_uniform():
    R = restrict(uniform(2, 4), {1, 2, 3})
    assert R == uniform(2, 3)
    assert R.labels == (1, 2, 3)


def test_restrict_circuit(runex):
    R = restrict(runex, {5, 6})
    assert R.n == 2 and R.rank == 1
    assert circuits(R) == [(1, 2)]
    assert R.labels == (5, 6)


def test_restrict_relabels_in_order():
    M = from_bases(4, [{1, 3}, {1, 4}, {3, 4}])
    R = restrict(M, {3, 4})
    assert R.labels == (3, 4)
    assert R == uniform(2, 2)


@settings(max_examples=30, deadline=None)
@given(vector_matroids())
def test_restriction_independent_sets(M):
    for sigma in all_masks(M.n):
        R = restrict_mask(M, sigma)
        positions = [e for e in range(M.n) if sigma >> e & 1]
        for sub in all_masks(R.n):
            original = sum(1 << positions[e] for e in range(R.n) if sub >> e & 1)
            assert R.independence_table[sub] == M.independence_table[original]


# --- elongation ---------------------------------------------------------------------


def test_elongate_top(runex):
    assert elongate(runex, 4).basis_labels() == [tuple(range(1, 8))]


def test_elongate_zero(runex):
    assert elongate(runex, 0) == runex


@pytest.mark.parametrize("r,n", [(0, 4), (2, 5), (3, 7)])
def test_elongate_uniform(r, n):
    for i in range(n - r + 1):
        assert elongate(uniform(r, n), i) == uniform(r + i, n)


def test_elongate_out_of_range(runex):
    with pytest.raises(InvalidElongation):
        elongate(runex, 5)
    with pytest.raises(InvalidElongation):
        elongate(runex, -1)


@settings(max_examples=40, deadline=None)
@given(vector_matroids(max_n=8))
def test_elongation_rank_and_nullity(M):
    r, nu = M.rank_table, M.nullity_table
    for i in range(M.n - M.rank + 1):
        Mi = elongate(M, i)
        assert Mi.rank == M.rank + i
        for s in all_masks(M.n):
            expected_rank = r[s] + i if nu[s] > i else s.bit_count()
            assert Mi.rank_table[s] == expected_rank
            assert Mi.nullity_table[s] == max(nu[s] - i, 0)


@settings(max_examples=25, deadline=None)
@given(vector_matroids(max_n=8))
def test_elongation_commutes_with_restriction(M):
    for i in range(M.n - M.rank + 1):
        Mi = elongate(M, i)
        for sigma in all_masks(M.n):
            left = restrict_mask(Mi, sigma)
            R = restrict_mask(M, sigma)
            nu = R.n - R.rank
            if nu >= i:
                right = elongate(R, i)
            else:
                right = free(R.n)
            assert left == right
            assert (left.independence_table == right.independence_table).all()


# --- circuits and Euler characteristic -------------------------------------------------


def test_runex_circuits(runex):
    assert set(circuits(runex)) == RUNEX_CIRCUITS


@pytest.mark.parametrize("r,n", [(0, 3), (2, 4), (3, 6)])
def test_uniform_circuits(r, n):
    assert circuits(uniform(r, n)) == sorted(combinations(range(1, n + 1), r + 1))


def test_free_has_no_circuits():
    assert circuits(free(5)) == []


@settings(max_examples=40, deadline=None)
@given(vector_matroids())
def test_circuits_round_trip(M):
    cs = M.circuit_masks
    for c in cs:
        assert M.nullity_table[c] == 1
    for s in all_masks(M.n):
        contains_circuit = any(c & s == c for c in cs)
        assert M.independence_table[s] == (not contains_circuit)


@pytest.mark.parametrize("r,n", [(r, n) for n in range(1, 8) for r in range(n + 1)])
def test_euler_characteristic_uniform(r, n):
    assert euler_characteristic(uniform(r, n)) == uniform_euler_characteristic(r, n)
    assert uniform_euler_characteristic(r, n) == sum(
        (-1) ** (i + 1) * comb(n, i) for i in range(r + 1)
    )


def test_euler_characteristic_values():
    assert euler_characteristic(uniform(2, 4)) == -3
    for n in range(1, 7):
        assert euler_characteristic(free(n)) == 0


def test_independent_sets_listing():
    assert independent_sets(uniform(1, 2)) == [(), (1,), (2,)]


def test_to_labels():
    assert to_labels(0b1010010) == (2, 5, 7)


def test_equality_ignores_labels():
    a = Matroid(2, frozenset({1, 2}), labels=(5, 6))
    assert a == uniform(1, 2)
    assert hash(a) == hash(uniform(1, 2))


def test_fixture_bases_file(runex):
    assert load_fixture("runex_bases.txt") == runex
