"""Subgroup enumeration, series, and isomorphism-invariant computations."""

import pytest
from hypothesis import given, settings, strategies as st

from lienil.catalog import (
    build_abelian,
    build_dihedral,
    build_free_class2,
    build_heisenberg,
    build_quaternion,
)
from lienil.subgroups import (
    CapExceeded,
    IsoType,
    abelian_invariants,
    abelianization_invariants,
    center,
    closure,
    conjugacy_class_sizes,
    derived_subgroup,
    fingerprint,
    intersection,
    is_abelian,
    lower_central_series,
    normal_closure,
    order_histogram,
    power_subgroup,
    subgroup_product,
    trivial_subgroup,
    whole_group,
)


@pytest.fixture(scope="module")
def d16():
    return build_dihedral(16).group


@pytest.fixture(scope="module")
def heis3():
    return build_heisenberg(3).group


def test_closure_of_rotation_in_dihedral(d16):
    rotation = d16.generator(1)
    cyc = closure(d16, [rotation])
    assert cyc.order == 8
    full = closure(d16, d16.generators())
    assert full.order == 16
    assert cyc <= full


def test_closure_respects_cap(d16):
    with pytest.raises(CapExceeded):
        closure(d16, d16.generators(), cap=7)


def test_whole_group_marker_defers_enumeration(d16):
    W = whole_group(d16)
    assert W.is_whole_marker
    assert W.order == 16
    with pytest.raises(CapExceeded):
        iter(W)
    assert not W.enumerated().is_whole_marker


def test_lower_central_series_dihedral(d16):
    orders = [s.order for s in lower_central_series(d16)]
    assert orders == [16, 4, 2, 1]


def test_lower_central_series_heisenberg(heis3):
    orders = [s.order for s in lower_central_series(heis3)]
    assert orders == [27, 3, 1]


def test_derived_and_center_of_dihedral(d16):
    W = whole_group(d16).enumerated()
    der = derived_subgroup(W)
    assert der.order == 4
    assert abelian_invariants(der) == [4]
    assert center(W).order == 2
    assert abelianization_invariants(W) == [2, 2]


def test_center_of_quaternion_is_the_unique_involution():
    q8 = build_quaternion(8).group
    W = whole_group(q8).enumerated()
    z = center(W)
    assert z.order == 2
    assert order_histogram(W) == {1: 1, 2: 1, 4: 6}


def test_power_subgroup_squares_and_cubes(d16, heis3):
    W = whole_group(d16).enumerated()
    squares = power_subgroup(W, 2)
    assert squares.order == 4
    assert abelian_invariants(squares) == [4]
    H = whole_group(heis3).enumerated()
    assert power_subgroup(H, 3).is_trivial()
    # exponent coprime to p: cube map is onto a 2-group
    assert power_subgroup(W, 3).order == 16


def test_normal_closure_of_a_reflection(d16):
    reflection = d16.generator(0)
    nc = normal_closure(d16, [reflection])
    assert nc.order == 8
    plain = closure(d16, [reflection])
    assert plain.order == 2


def test_product_and_intersection_identities(d16):
    W = whole_group(d16).enumerated()
    der = derived_subgroup(W)
    zc = center(W)
    prod = subgroup_product(der, zc)
    assert prod.order == 4  # the centre sits inside the derived subgroup
    assert intersection(der, zc) == zc
    triv = trivial_subgroup(d16)
    assert subgroup_product(der, triv) == der
    assert intersection(der, triv) == triv


abelian_factor_lists = st.lists(
    st.sampled_from([0, 1, 2, 3]), min_size=1, max_size=4
).map(lambda exps: [e + 1 for e in exps])


@settings(max_examples=40, deadline=None)
@given(p=st.sampled_from((2, 3)), exps=abelian_factor_lists)
def test_abelian_invariants_round_trip(p, exps):
    factors = sorted((p**e for e in exps), reverse=True)
    if max(factors) ** len(factors) > 2**12:
        factors = factors[:2]
    entry = build_abelian(p, factors)
    W = whole_group(entry.group).enumerated()
    assert is_abelian(W)
    assert abelian_invariants(W) == sorted(factors, reverse=True)


def test_abelian_invariants_rejects_nonabelian(heis3):
    W = whole_group(heis3).enumerated()
    with pytest.raises(ValueError):
        abelian_invariants(W)


def test_fingerprint_on_order_8_groups():
    kinds = {
        "C8": build_abelian(2, [8]),
        "C4xC2": build_abelian(2, [4, 2]),
        "C2^3": build_abelian(2, [2, 2, 2]),
        "D8": build_dihedral(8),
        "Q8": build_quaternion(8),
    }
    prints = {name: fingerprint(whole_group(e.group).enumerated())
              for name, e in kinds.items()}
    assert str(prints["C8"]) == "C8"
    assert str(prints["C4xC2"]) == "C4xC2"
    assert str(prints["C2^3"]) == "C2xC2xC2"
    assert len({str(prints[n]) for n in ("C8", "C4xC2", "C2^3")}) == 3
    # The fingerprint is deliberately not a full isomorphism test: the two
    # non-abelian groups of order 8 collide on every invariant it records.
    # Sharper invariants (e.g. order_histogram) tell them apart.
    assert prints["D8"].kind == prints["Q8"].kind == "fingerprint"
    assert prints["D8"] == prints["Q8"]
    h_d8 = order_histogram(whole_group(kinds["D8"].group).enumerated())
    h_q8 = order_histogram(whole_group(kinds["Q8"].group).enumerated())
    assert h_d8 != h_q8


def test_fingerprint_is_presentation_independent():
    # The same abstract group through two different pc chains.
    a = build_abelian(2, [4, 2]).group
    from lienil.pcgroup import parse_presentation
    b = parse_presentation("p 2\ngens 3\npow 1 : 1\npow 2 : g3^1\npow 3 : 1\n")
    fa = fingerprint(whole_group(a).enumerated())
    fb = fingerprint(whole_group(b).enumerated())
    assert fa == fb == IsoType("abelian", (4, 2))


def test_free_class2_structure():
    G = build_free_class2(3, 3).group
    W = whole_group(G).enumerated()
    der = derived_subgroup(W)
    assert der.order == 27
    assert abelian_invariants(der) == [3, 3, 3]
    series = lower_central_series(G)
    assert [s.order for s in series] == [3**6, 27, 1]


def test_order_histogram_and_classes_of_d8():
    W = whole_group(build_dihedral(8).group).enumerated()
    assert order_histogram(W) == {1: 1, 2: 5, 4: 2}
    assert conjugacy_class_sizes(W) == [1, 1, 2, 2, 2]


def test_series_works_above_enumeration_cap():
    # order 2^15 with a tight cap: only the subgroups themselves enumerate
    G = build_free_class2(5, 2).group
    series = lower_central_series(G, cap=2**11)
    assert [s.order for s in series] == [2**15, 2**10, 1]
    assert abelian_invariants(series[1], cap=2**11) == [2] * 10


def test_exponent_values():
    assert whole_group(build_heisenberg(5).group).enumerated().exponent() == 5
    assert whole_group(build_dihedral(16).group).enumerated().exponent() == 8
