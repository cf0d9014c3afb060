from __future__ import annotations

import pytest

import oracles
from corpus import random_matrix, rng
from geomgrid.errors import BudgetExceeded, InsufficientData, InvalidOrientation
from geomgrid.graph import Orientation, consistent_orientation
from geomgrid.matching import rook_numbers
from geomgrid.matrix import GridMatrix, double_refinement
from geomgrid.oracle import (
    CountSequence,
    _prefixes,
    alphabet,
    count_length,
    empirical_growth_rate,
    enumerate_counts,
    trace_monoid_counts,
    word_to_gridded,
)

NEG_EXAMPLE = GridMatrix.from_rows([[1, 0, -1], [1, -1, 1]])
POS_EXAMPLE = GridMatrix.from_rows([[-1, 0, -1], [1, -1, 1]])
WORD_A = [(3, 2), (3, 2), (1, 1), (1, 2), (2, 1), (3, 1), (3, 2)]
WORD_B = [(1, 1), (3, 2), (2, 1), (3, 2), (3, 1), (1, 2), (3, 2)]


def test_two_words_one_gridding():
    o = consistent_orientation(POS_EXAMPLE)
    a = word_to_gridded(POS_EXAMPLE, o, WORD_A)
    b = word_to_gridded(POS_EXAMPLE, o, WORD_B)
    assert a == b
    assert a.perm == (1, 5, 2, 7, 6, 3, 4)
    assert a.col_counts == (2, 1, 4) and a.row_counts == (3, 4)


def test_word_errors():
    o = consistent_orientation(POS_EXAMPLE)
    with pytest.raises(InvalidOrientation):
        word_to_gridded(POS_EXAMPLE, o, [(2, 2)])
    with pytest.raises(InvalidOrientation):
        word_to_gridded(POS_EXAMPLE, Orientation((1, 1, 1), (1, 1)), [(1, 1)])
    with pytest.raises(ValueError):
        word_to_gridded(POS_EXAMPLE, o, [])


def test_vectorised_kernel_matches_scalar():
    import itertools

    o = consistent_orientation(POS_EXAMPLE)
    sym = alphabet(POS_EXAMPLE)
    for n in (1, 2, 3, 4):
        scalar = {word_to_gridded(POS_EXAMPLE, o, w) for w in itertools.product(sym, repeat=n)}
        gridded, perms = count_length(POS_EXAMPLE, o, n)
        assert len(gridded) == len(scalar)
        assert len(perms) == len({g.perm for g in scalar})


def test_prefix_partition_invariance():
    d = double_refinement(NEG_EXAMPLE)
    o = consistent_orientation(d)
    size = len(alphabet(d))
    whole = count_length(d, o, 4, prefixes=[()])
    split = count_length(d, o, 4, prefixes=[(a, b) for b in range(size) for a in range(size)])
    assert whole == split
    assert _prefixes(size, 6)


def test_known_counts():
    assert enumerate_counts(GridMatrix.from_rows([[1, 1]]), 6).gridded == [2, 4, 8, 16, 32, 64]
    assert enumerate_counts(GridMatrix.from_rows([[1, 1]]), 6).perms == [1, 2, 5, 12, 27, 58]
    assert enumerate_counts(GridMatrix.from_rows([[1]]), 4).perms == [1, 1, 1, 1]
    c = enumerate_counts(POS_EXAMPLE, 6)
    assert c.gridded == [5, 21, 85, 341, 1365, 5461]
    assert c.perms == [1, 2, 6, 24, 112, 527]
    assert not c.refined and enumerate_counts(NEG_EXAMPLE, 3).refined


def test_permutations_against_unrefined_placement():
    for m in (NEG_EXAMPLE, POS_EXAMPLE):
        c = enumerate_counts(m, 5)
        assert c.perms == [len(oracles.geom_permutations(m.rows(), n)) for n in range(1, 6)]
    r = rng(30)
    for _ in range(6):
        m = random_matrix(r, 3, 2)
        c = enumerate_counts(m, 4)
        assert c.perms == [len(oracles.geom_permutations(m.rows(), n)) for n in range(1, 5)]


def test_trace_monoid_recurrence():
    assert trace_monoid_counts([1, 5, 4], 6) == [5, 21, 85, 341, 1365, 5461]
    with pytest.raises(ValueError):
        trace_monoid_counts([2, 1], 3)


def test_budget():
    with pytest.raises(BudgetExceeded):
        enumerate_counts(NEG_EXAMPLE, 6, budget=1000)


def test_csv(tmp_path):
    p = tmp_path / "c.csv"
    enumerate_counts(POS_EXAMPLE, 3).write_csv(p)
    lines = p.read_text().splitlines()
    assert lines[0] == "n,gridded_count,perm_count,gridded_root_estimate,perm_root_estimate"
    assert lines[1] == "1,5,1,5,1"


def test_empirical_growth_rate():
    est = empirical_growth_rate([1, 2, 4, 8])
    assert est.ratio == 2 and est.root == pytest.approx(8 ** 0.25)
    with pytest.raises(InsufficientData):
        empirical_growth_rate([3])
    with pytest.raises(InsufficientData):
        empirical_growth_rate(CountSequence(1, [0], [0]))


def test_refinement_of_orientable_matrix_converges_slowly():
    # M^x2 of an orientable matrix has G(M^x2) = G + G, a repeated dominant
    # root; the ratio then behaves like gamma * (1 + 1/n)
    t = trace_monoid_counts(rook_numbers(double_refinement(POS_EXAMPLE)), 2001)
    ratio = t[2000] / t[1999]
    assert abs(ratio - 4 * (1 + 1 / 2000)) < 1e-5
    t = trace_monoid_counts(rook_numbers(POS_EXAMPLE), 2001)
    assert abs(t[2000] / t[1999] - 4) < 1e-12
