"""The dense group-algebra oracle and its agreement with the formula route."""

import numpy as np
import pytest

from lienil.catalog import (
    build_abelian,
    build_dihedral,
    build_free_class2,
    build_heisenberg,
    build_quaternion,
)
from lienil.dimension import upper_index
from lienil.oracle import (
    OracleCapExceeded,
    build_algebra,
    lower_lie_chain,
    t_lower_direct,
    t_upper_direct,
    upper_lie_chain,
)
from lienil.subgroups import derived_subgroup, whole_group


def test_algebra_table_is_a_group_table():
    G = build_dihedral(8).group
    A = build_algebra(G)
    assert A.dim == 8
    assert A.elements[0] == G.identity
    # identity row and column
    assert np.array_equal(A.table[0, :], np.arange(8))
    assert np.array_equal(A.table[:, 0], np.arange(8))
    # associativity on all triples
    for a in range(8):
        for b in range(8):
            ab = A.table[a, b]
            for c in range(8):
                assert A.table[ab, c] == A.table[a, A.table[b, c]]
    # the table rows/columns are permutations
    for i in range(8):
        assert sorted(A.table[i, :]) == list(range(8))
        assert sorted(A.table[:, i]) == list(range(8))


def test_oracle_refuses_groups_above_cap():
    big = build_free_class2(5, 2).group
    with pytest.raises(OracleCapExceeded):
        build_algebra(big)
    with pytest.raises(OracleCapExceeded):
        t_upper_direct(build_dihedral(16).group, cap=8)


@pytest.mark.parametrize("make,expected", [
    (lambda: build_dihedral(8).group, 3),
    (lambda: build_quaternion(8).group, 3),
    (lambda: build_dihedral(16).group, 5),
    (lambda: build_heisenberg(3).group, 4),
    (lambda: build_heisenberg(5).group, 6),
], ids=["D8", "Q8", "D16", "H3", "H5"])
def test_upper_index_known_values(make, expected):
    G = make()
    assert t_upper_direct(G) == expected


def test_lower_indices_match_upper_on_small_groups():
    for make in (lambda: build_dihedral(8).group,
                 lambda: build_quaternion(8).group,
                 lambda: build_heisenberg(3).group,
                 lambda: build_heisenberg(5).group):
        G = make()
        assert t_lower_direct(G) == t_upper_direct(G)


def test_abelian_algebra_has_index_two():
    G = build_abelian(3, [9, 3]).group
    assert t_upper_direct(G) == 2
    assert t_lower_direct(G) == 2


def test_chain_dimensions_decrease_strictly():
    A = build_algebra(build_dihedral(16).group)
    up = upper_lie_chain(A)
    low = lower_lie_chain(A)
    for chain in (up, low):
        dims = chain.dims()
        assert dims[0] == 16 and dims[-1] == 0
        assert all(a > b for a, b in zip(dims, dims[1:]))
    assert up.t == len(up.dims())
    assert low.t <= up.t


def test_generator_seeding_spans_the_same_ideals():
    for make in (lambda: build_dihedral(16).group,
                 lambda: build_heisenberg(3).group,
                 lambda: build_quaternion(16).group):
        A = build_algebra(make())
        full = upper_lie_chain(A)
        reduced = upper_lie_chain(A, seed_generators_only=True)
        assert full.t == reduced.t
        assert [s.basis.tobytes() for s in full.spaces] == \
               [s.basis.tobytes() for s in reduced.spaces]


def test_direct_and_formula_routes_agree_on_small_corpus():
    groups = [
        build_dihedral(8).group,
        build_dihedral(16).group,
        build_dihedral(32).group,
        build_quaternion(8).group,
        build_quaternion(16).group,
        build_heisenberg(3).group,
        build_abelian(2, [8, 2]).group,
        build_abelian(5, [25]).group,
        build_free_class2(2, 2).group,
        build_free_class2(3, 2).group,
    ]
    for G in groups:
        assert t_upper_direct(G) == upper_index(G)


def test_index_bounds_on_nonabelian_groups():
    # p + 1 <= t_L <= t^L <= |G'| + 1, with equality of the two indices
    # guaranteed for p > 3.
    for make in (lambda: build_dihedral(32).group,
                 lambda: build_quaternion(16).group,
                 lambda: build_heisenberg(3).group,
                 lambda: build_heisenberg(5).group):
        G = make()
        lower = t_lower_direct(G)
        upper = t_upper_direct(G)
        dorder = derived_subgroup(whole_group(G)).order
        assert G.p + 1 <= lower <= upper <= dorder + 1
        if G.p > 3:
            assert lower == upper
