"""Builders, the built-in corpus, shipped table data, and its verification."""

from collections import Counter

import pytest

from lienil.catalog import (
    BUILDER_NAMES,
    DATA_DIR,
    build_abelian,
    build_condition_group,
    build_condition_quotient,
    build_dihedral,
    build_free_class2,
    build_heisenberg,
    build_named,
    build_quaternion,
    computed_columns,
    fingerprint_db,
    import_presentation,
    reference_fingerprint,
    standard_catalog,
    table_entries,
    verify_tables,
)
from lienil.subgroups import (
    center,
    normal_closure,
    order_histogram,
    whole_group,
)


def test_builder_orders_and_names():
    assert build_dihedral(16).order == 16
    assert build_dihedral(16).name == "dihedral-16"
    assert build_quaternion(8).order == 8
    assert build_heisenberg(5).order == 125
    assert build_abelian(3, [9, 3]).order == 27
    assert build_free_class2(5, 2).order == 2**15
    assert build_condition_group(65, 3).order == 3**7
    assert build_condition_quotient(66, 3).order == 3**5


def test_builder_argument_validation():
    with pytest.raises(ValueError):
        build_dihedral(12)
    with pytest.raises(ValueError):
        build_quaternion(4)
    with pytest.raises(ValueError):
        build_heisenberg(2)
    with pytest.raises(ValueError):
        build_abelian(3, [4])
    with pytest.raises(ValueError):
        build_free_class2(7, 2)
    with pytest.raises(ValueError):
        build_condition_group(46, 3)
    with pytest.raises(ValueError):
        build_condition_group(1, 5)


def test_build_named_dispatch():
    assert build_named("dihedral:32").order == 32
    assert build_named("abelian:4x2", p=2).order == 8
    assert build_named("free_class2:3", p=3).order == 3**6
    assert build_named("condition-quotient:65", p=3).order == 243
    with pytest.raises(ValueError):
        build_named("abelian:4x2")  # needs p
    with pytest.raises(ValueError):
        build_named("nosuch:1")
    assert BUILDER_NAMES


def test_condition_group_centres():
    # Row 65's group: two free factors plus one extraspecial block, so the
    # centre keeps five of the seven generators.
    G65 = build_condition_group(65, 3).group
    assert center(whole_group(G65).enumerated()).order == 3**5
    # Row 66's group as presented: both commutators land on the same
    # generator, which couples the two blocks and cuts the centre to
    # <e, f, g> of order 27.
    G66 = build_condition_group(66, 3).group
    assert center(whole_group(G66).enumerated()).order == 27


def test_standard_catalog_shape():
    entries = standard_catalog()
    assert len(entries) == 48
    names = [e.name for e in entries]
    assert names == sorted(names)
    assert sum(1 for e in entries if e.order <= 256) == 47
    assert {e.group.p for e in entries} == {2, 3, 5}
    small = standard_catalog(include_large=False)
    assert len(small) == 47
    assert all(e.order <= 256 for e in small)


def test_catalog_orders_are_prime_powers():
    for e in standard_catalog():
        assert e.order == e.group.p ** e.group.ngens


def test_import_presentation_round_trip(tmp_path):
    entry = table_entries()[0]
    text = (DATA_DIR / "s243_13.pres").read_text()
    copy = tmp_path / "s243_13.pres"
    copy.write_text(text)
    reimported = import_presentation(copy)
    assert reimported.name == "S(243,13)"
    assert reimported.declared_id == (243, 13)
    assert reimported.expected
    assert reimported.order == 243


def test_import_rejects_mismatched_id(tmp_path):
    bad = tmp_path / "bad.pres"
    bad.write_text("p 3\ngens 2\nid 27 2\npow 1 : 1\npow 2 : 1\n")
    with pytest.raises(Exception):
        import_presentation(bad)


def test_shipped_tables_inventory():
    entries = table_entries()
    assert len(entries) == 30
    by_order = Counter(e.order for e in entries)
    assert by_order == {243: 14, 2187: 8, 3125: 8}
    assert all(e.declared_id for e in entries)
    assert all(e.expected for e in entries)
    # six columns for the p = 3 tables, seven for the p = 5 one
    for e in entries:
        assert len(e.expected) == (7 if e.order == 3125 else 6)


def test_verify_tables_on_a_sample():
    by_name = {e.name: e for e in table_entries()}
    sample = [by_name["S(243,37)"], by_name["S(2187,9094)"],
              by_name["S(3125,72)"]]
    report = verify_tables(sample)
    assert report.passed
    assert [r.name for r in report.rows] == sorted(r.name for r in report.rows)
    assert all("PASS" in line for line in report.lines())


def test_verify_tables_flags_wrong_expectations():
    entry = import_presentation(DATA_DIR / "s243_37.pres")
    entry.expected["zeta"] = "C9"  # the true value is C3xC3
    report = verify_tables([entry])
    assert not report.passed
    row = report.rows[0]
    assert not row.passed
    assert any(key == "zeta" and want != got for key, want, got in row.details)
    assert any("MISMATCH" in line for line in report.lines())


def test_computed_columns_rejects_unknown_keys():
    entry = table_entries()[0]
    with pytest.raises(ValueError):
        computed_columns(entry, ["nonsense"], cap=4096)


def test_fingerprint_db_covers_all_declared_ids():
    db = fingerprint_db()
    assert len(db) == 30
    assert (243, 13) in db and (3125, 76) in db
    assert all(iso.kind in ("abelian", "fingerprint") for iso in db.values())


def test_reference_fingerprints():
    fp = reference_fingerprint("heis_x_cp", 3)
    assert fp.kind == "fingerprint"
    assert reference_fingerprint("heis_x_cp", 3) is fp  # cached
    with pytest.raises(ValueError):
        reference_fingerprint("nonsense", 3)


# ---------------------------------------------------------------------------
# rows sharing all published column values must still be non-isomorphic


def joint_order_class_histogram(G):
    """Multiset of (element order, conjugacy class size) pairs."""
    W = whole_group(G).enumerated()
    gens = G.generators()
    left = set(W.elements)
    pairs = Counter()
    while left:
        x = left.pop()
        orbit = {x}
        frontier = [x]
        while frontier:
            y = frontier.pop()
            for g in gens:
                z = G.conjugate(y, g)
                if z not in orbit:
                    orbit.add(z)
                    frontier.append(z)
        left -= orbit
        for y in orbit:
            pairs[(G.element_order(y), len(orbit))] += 1
    return tuple(sorted(pairs.items()))


def pth_power_in_commutator_closure_count(G):
    """#{x : x^p lies in the normal closure of [x, G]}; an isomorphism
    invariant that separates groups the class/order statistics cannot."""
    W = whole_group(G).enumerated()
    gens = G.generators()
    count = 0
    for x in W.elements:
        seeds = [c for g in gens if (c := G.commutator(x, g)) != G.identity]
        sub = normal_closure(G, seeds)
        if G.power(x, G.p) in sub:
            count += 1
    return count


TWIN_BLOCKS = (("13", "14", "15"), ("16", "19"), ("38", "39"),
               ("41", "42"), ("56", "57"))


def test_twin_blocks_share_their_column_values():
    by_name = {e.name: e for e in table_entries()}
    for block in TWIN_BLOCKS:
        expected = [by_name[f"S(243,{n})"].expected for n in block]
        assert all(e == expected[0] for e in expected[1:]), block


@pytest.mark.parametrize("block", TWIN_BLOCKS, ids=["-".join(b) for b in TWIN_BLOCKS])
def test_twin_blocks_are_pairwise_nonisomorphic(block):
    by_name = {e.name: e for e in table_entries()}
    groups = {n: by_name[f"S(243,{n})"].group for n in block}
    hists = {n: joint_order_class_histogram(G) for n, G in groups.items()}
    for i, a in enumerate(block):
        for b in block[i + 1:]:
            if hists[a] != hists[b]:
                continue
            assert (pth_power_in_commutator_closure_count(groups[a])
                    != pth_power_in_commutator_closure_count(groups[b])), \
                (a, b)


def test_all_shipped_rows_verify():
    # The full sweep; every expected column of every row must be exact.
    report = verify_tables()
    failures = [r.name for r in report.rows if not r.passed]
    assert report.passed, failures
    assert len(report.rows) == 30
