from __future__ import annotations

from itertools import product

import pytest

from inv321.enumeration import gen_involutions_avoiding_321
from inv321.perm import ONE, Permutation, PermutationError, avoids_321, cycle_form, inflate, is_involution
from inv321.structure import (
    SIMPLE,
    SKEW,
    SUM,
    max_chain_increasing,
    classify,
    full_tree,
    is_inflation_of_simple,
    first_point_forward,
    first_point_inverse,
    simple_family,
    shift_map,
    sum_components,
)

P = Permutation.parse


def test_sum_split_is_shortest_prefix():
    node = classify(P("2143"))
    assert node.kind == SUM
    assert node.left == P("21") and node.right == P("21")


def test_skew_and_simple():
    assert classify(P("3412")).kind == SKEW
    node = classify(P("351624"))
    assert node.kind == SIMPLE and node.skeleton == P("351624")


def test_inflation_of_simple():
    p = P("47819(10)2356")
    node = classify(p)
    assert node.kind == SIMPLE
    assert str(node) == "351624[1, 12, 1, 12, 12, 12]"
    assert is_inflation_of_simple(p)


def test_full_tree_nested_sums():
    p = P("3516249(11)7(12)8(10)(15)(17)(13)(18)(14)(16)")
    assert str(full_tree(p)) == "12[351624, 12[351624, 351624]]"
    assert sum_components(p) == [P("351624")] * 3


def test_reinflation_up_to_10():
    for n in range(1, 11):
        for p in gen_involutions_avoiding_321(n):
            assert full_tree(p).permutation() == p


def test_chain_criterion_examples():
    assert max_chain_increasing(cycle_form(P("351624")))
    assert not max_chain_increasing(cycle_form(P("321")))


@pytest.mark.parametrize(
    "k,expected",
    [(3, "351624"), (4, "468192(10)357"), (5, "579(11)1(12)2(13)3(14)468(10)")],
)
def test_family(k, expected):
    assert str(simple_family(k)) == expected


def test_family_rejects_small_k():
    with pytest.raises(ValueError):
        simple_family(2)


def test_shift_map_examples():
    assert shift_map(P("3412")) == P("1324")
    assert shift_map(P("351624")) == P("132546")


def test_first_point_bijection_example():
    p = P("46718235(10)9")
    q = first_point_forward(p)
    assert q == P("14627358(10)9")
    assert first_point_inverse(q) == p


def test_first_point_bijection_rejects():
    with pytest.raises(PermutationError):
        first_point_forward(P("1324"))
    with pytest.raises(PermutationError):
        first_point_inverse(P("3412"))


def test_inflations_of_351624_up_to_12():
    sigma = P("351624")
    small = {1: [ONE], 2: [P("12"), P("21")], 3: [Permutation(v) for v in product(range(1, 4), repeat=3) if len(set(v)) == 3]}
    for sizes in product((1, 2, 3), repeat=6):
        if sum(sizes) > 12:
            continue
        for blocks in product(*(small[s] for s in sizes)):
            p = inflate(sigma, blocks)
            member = is_involution(p) and avoids_321(p)
            increasing = all(b == Permutation.identity(len(b)) for b in blocks)
            paired = all(len(blocks[i]) == len(blocks[sigma.values[i] - 1]) for i in range(6))
            assert member == (increasing and paired), p


def test_compatibility_names():
    from inv321 import paths, series, structure

    assert structure.check_prop23 is max_chain_increasing
    assert structure.prop25_family is simple_family
    assert structure.lemma34_forward is first_point_forward
    assert structure.lemma34_inverse is first_point_inverse
    assert paths.prop81_check is paths.labels_trivial_and_flats_grounded
    assert series.theorem51_delta is series.inflated_simple_count
