"""Construction, validation, canonicalization, quotients, and LATT I/O."""

from __future__ import annotations

import dataclasses

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import finlat as fl
import oracles
import support


def test_two_chain_from_matrix():
    lattice = fl.from_leq_matrix([[1, 1], [0, 1]])
    assert lattice.size == 2
    assert lattice.bottom == 0
    assert lattice.top == 1
    assert lattice.meet[0][1] == 0
    assert lattice.join[0][1] == 1


def test_three_chain_from_upper_triangular():
    lattice = fl.from_leq_matrix([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
    assert fl.is_isomorphic(lattice, fl.standard_lattice("chain", 3))


def test_diamond_matrix_gives_boolean_square():
    rows = [
        [1, 1, 1, 1],
        [0, 1, 0, 1],
        [0, 0, 1, 1],
        [0, 0, 0, 1],
    ]
    lattice = fl.from_leq_matrix(rows)
    assert lattice.meet[1][2] == 0
    assert lattice.join[1][2] == 3
    assert fl.is_isomorphic(lattice, fl.standard_lattice("boolean", 2))


def test_from_leq_matrix_rejects_nonsquare():
    with pytest.raises(ValueError):
        fl.from_leq_matrix([[1, 1], [0, 1], [0, 0]])
    with pytest.raises(ValueError):
        fl.from_leq_matrix([])


def test_from_leq_matrix_rejects_broken_orders():
    with pytest.raises(fl.NotAPartialOrder):
        fl.from_leq_matrix([[0]])
    with pytest.raises(fl.NotAPartialOrder):
        fl.from_leq_matrix([[1, 1], [1, 1]])
    with pytest.raises(fl.NotAPartialOrder):
        fl.from_leq_matrix(
            [[1, 1, 0], [0, 1, 1], [0, 0, 1]]
        )


def test_from_leq_matrix_rejects_unbounded():
    # two maximal elements above a shared bottom
    with pytest.raises(fl.NotBounded):
        fl.from_leq_matrix([[1, 1, 1], [0, 1, 0], [0, 0, 1]])


def test_from_leq_matrix_rejects_missing_join():
    # 0 below a, b; both below c, d; both of those below 1: the pair
    # (a, b) has two minimal upper bounds, so no join
    rows = [
        [1, 1, 1, 1, 1, 1],
        [0, 1, 0, 1, 1, 1],
        [0, 0, 1, 1, 1, 1],
        [0, 0, 0, 1, 0, 1],
        [0, 0, 0, 0, 1, 1],
        [0, 0, 0, 0, 0, 1],
    ]
    with pytest.raises(fl.NotALattice):
        fl.from_leq_matrix(rows)


def test_validate_clean_on_catalog():
    for lattice in support.catalog().values():
        assert fl.validate(lattice) == []


def test_validate_reports_injected_commutativity_fault():
    base = fl.standard_lattice("boolean", 2)
    meet = [list(row) for row in base.meet]
    meet[1][2], meet[2][1] = meet[1][2], base.top  # meet no longer symmetric
    broken = dataclasses.replace(base, meet=tuple(tuple(r) for r in meet))
    rules = {v.rule for v in fl.validate(broken)}
    assert "meet-commutativity" in rules


def test_validate_reports_unbounded_order():
    # bottom plus a 2-antichain; tables are filler, the bound check fires first
    lattice = fl.FiniteLattice(
        size=3,
        leq=((True, True, True), (False, True, False), (False, False, True)),
        meet=((0,) * 3,) * 3,
        join=((0,) * 3,) * 3,
        bottom=0,
        top=2,
    )
    violations = fl.validate(lattice)
    assert [v.rule for v in violations] == ["bounded"]


def test_standard_lattice_shapes():
    n5 = fl.standard_lattice("n5")
    assert n5.join[1][3] == n5.top
    assert n5.meet[2][3] == n5.bottom
    assert n5.leq[1][2]
    m3 = fl.standard_lattice("m3")
    atoms = [1, 2, 3]
    for x in atoms:
        for y in atoms:
            if x != y:
                assert m3.meet[x][y] == m3.bottom
                assert m3.join[x][y] == m3.top
    assert fl.standard_lattice("chain", 1).size == 1
    assert fl.standard_lattice("boolean", 2).size == 4


def test_standard_lattice_rejects_bad_names_and_parameters():
    with pytest.raises(fl.UnknownName):
        fl.standard_lattice("hexagon")
    with pytest.raises(ValueError):
        fl.standard_lattice("chain")
    with pytest.raises(ValueError):
        fl.standard_lattice("chain", 0)
    with pytest.raises(ValueError):
        fl.standard_lattice("n5", 5)


def test_standard_lattice_is_cached_by_arguments():
    assert fl.standard_lattice("n5") is fl.standard_lattice("n5")
    assert fl.standard_lattice("chain", 3) is fl.standard_lattice("chain", 3)


def test_product_identities():
    c2 = fl.standard_lattice("chain", 2)
    c3 = fl.standard_lattice("chain", 3)
    square = fl.product(c2, c2)
    assert fl.is_isomorphic(square, fl.standard_lattice("boolean", 2))
    assert fl.is_isomorphic(fl.product(fl.standard_lattice("chain", 1), c3), c3)
    box = fl.product(c2, c3)
    assert box.size == 6
    assert fl.validate(box) == []
    assert fl.is_distributive(box)
    assert box.bottom == 0 and box.top == box.size - 1


def test_dual_is_involutive_and_swaps_operations():
    n5 = fl.standard_lattice("n5")
    flipped = fl.dual(n5)
    assert flipped.bottom == n5.top and flipped.top == n5.bottom
    assert fl.dual(flipped).leq == n5.leq
    for x in n5.elements():
        for y in n5.elements():
            assert flipped.meet[x][y] == n5.join[x][y]
            assert flipped.join[x][y] == n5.meet[x][y]


def test_canonical_form_separates_and_identifies():
    n5 = fl.standard_lattice("n5")
    m3 = fl.standard_lattice("m3")
    assert fl.canonical_form(n5) != fl.canonical_form(m3)
    square = fl.product(fl.standard_lattice("chain", 2), fl.standard_lattice("chain", 2))
    assert fl.canonical_form(square) == fl.canonical_form(fl.standard_lattice("boolean", 2))
    assert not fl.is_isomorphic(fl.standard_lattice("chain", 4), fl.standard_lattice("boolean", 2))


def test_canonical_form_renumbers_bounds():
    for lattice in support.catalog().values():
        rebuilt = fl.lattice_from_canonical(fl.canonical_form(lattice))
        assert rebuilt.bottom == 0
        assert rebuilt.top == rebuilt.size - 1
        assert fl.is_isomorphic(rebuilt, lattice)


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_canonical_form_is_relabeling_invariant(data):
    name = data.draw(st.sampled_from(sorted(support.catalog())))
    lattice = support.catalog()[name]
    perm = data.draw(st.permutations(range(lattice.size)))
    relabeled = fl.relabel(lattice, perm)
    assert fl.canonical_form(relabeled) == fl.canonical_form(lattice)
    assert fl.is_isomorphic(relabeled, lattice)


def test_canonical_form_agrees_with_brute_isomorphism_at_size_5():
    reps = support.lattices_of(5)
    for i, first in enumerate(reps):
        for second in reps[i + 1 :]:
            assert fl.canonical_form(first) != fl.canonical_form(second)
            assert not oracles.brute_isomorphic(first, second)


def test_relabel_requires_permutation():
    with pytest.raises(ValueError):
        fl.relabel(fl.standard_lattice("chain", 3), [0, 0, 2])


def test_quotient_by_identity_and_all():
    n5 = fl.standard_lattice("n5")
    identity = fl.Congruence(n5, fl.Partition.identity(5))
    image, projection = fl.quotient(n5, identity)
    assert fl.is_isomorphic(image, n5)
    assert fl.is_homomorphism(projection) and fl.is_surjective(projection)
    everything = fl.Congruence(n5, fl.Partition.all_in_one(5))
    collapsed, _ = fl.quotient(n5, everything)
    assert collapsed.size == 1


def test_quotient_of_three_chain():
    c3 = fl.standard_lattice("chain", 3)
    cong = fl.principal_congruence(c3, 0, 1)
    image, projection = fl.quotient(c3, cong)
    assert fl.is_isomorphic(image, fl.standard_lattice("chain", 2))
    assert projection.map == (0, 0, 1)


def test_quotient_rejects_foreign_and_invalid_partitions():
    n5 = fl.standard_lattice("n5")
    other = fl.from_leq_matrix(n5.leq)
    cong = fl.Congruence(other, fl.Partition.identity(5))
    with pytest.raises(fl.OwnerMismatch):
        fl.quotient(n5, cong)
    merged_bottom_atom = fl.Congruence(n5, fl.Partition.from_blocks(5, [[0, 1], [2], [3], [4]]))
    with pytest.raises(fl.NotACongruence):
        fl.quotient(n5, merged_bottom_atom)


def test_homomorphism_checks():
    c2 = fl.standard_lattice("chain", 2)
    c3 = fl.standard_lattice("chain", 3)
    good = fl.LatticeHomomorphism(c3, c2, (0, 0, 1))
    assert fl.is_homomorphism(good)
    assert fl.is_surjective(good)
    swapped_bounds = fl.LatticeHomomorphism(c3, c2, (1, 0, 0))
    assert not fl.is_homomorphism(swapped_bounds)
    skips_middle = fl.LatticeHomomorphism(c3, c3, (0, 2, 2))
    assert fl.is_homomorphism(skips_middle) and not fl.is_surjective(skips_middle)


def test_latt_round_trip_is_byte_exact():
    for lattice in support.catalog().values():
        text = fl.format_latt(lattice)
        again = fl.parse_latt(text)
        assert again.leq == lattice.leq
        assert fl.format_latt(again) == text


def test_latt_golden_n5():
    assert fl.format_latt(fl.standard_lattice("n5")) == (
        "LATT 1\nn=5\n11111\n01101\n00101\n00011\n00001\n"
    )


@pytest.mark.parametrize(
    "payload, line",
    [
        ("", 1),
        ("LATT 2\nn=1\n1\n", 1),
        ("LATT 1\n", 2),
        ("LATT 1\nsize=2\n11\n01\n", 2),
        ("LATT 1\nn=0\n", 2),
        ("LATT 1\nn=2\n11\n", 4),
        ("LATT 1\nn=2\n111\n01\n", 3),
        ("LATT 1\nn=2\n11\n0x\n", 4),
        ("LATT 1\nn=2\n11\n01\n\n", 5),
        ("LATT 1\nn=2\n11\n01", 4),
        ("LATT 1\r\nn=2\n11\n01\n", 1),
        ("LATT 1\nn=2\n11\n10\n", 3),
    ],
)
def test_parse_latt_rejects_malformed_input(payload, line):
    with pytest.raises(fl.ParseError) as excinfo:
        fl.parse_latt(payload)
    assert excinfo.value.line == line


def test_parse_latt_rejects_non_ascii_bytes():
    with pytest.raises(fl.ParseError) as excinfo:
        fl.parse_latt("LATT 1\nn=2\n11\n0\xff\n".encode("latin-1"))
    assert excinfo.value.line == 4


def test_parse_latt_accepts_any_valid_labeling():
    # bottom does not need to be element 0 in the file
    lattice = fl.parse_latt("LATT 1\nn=2\n10\n11\n")
    assert lattice.bottom == 1
    assert lattice.top == 0
