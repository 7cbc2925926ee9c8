from __future__ import annotations

from math import comb

import pytest

from inv321.enumeration import (
    FIXTURE_LENGTHS,
    class_of,
    count_classes,
    count_separable_intersection,
    filter_involutions_avoiding_321,
    gen_involutions_avoiding_321,
    golden_fixture_check,
    involutions,
    parse_fixture_line,
    read_fixture,
    simple_involutions,
)
from inv321.paths import crossing_sequence
from inv321.perm import Permutation


def test_small_listings():
    assert [str(p) for p in gen_involutions_avoiding_321(3)] == ["123", "132", "213"]
    assert [str(p) for p in simple_involutions(6)] == ["351624"]


def test_rejects_nonpositive():
    with pytest.raises(ValueError):
        list(gen_involutions_avoiding_321(0))


@pytest.mark.parametrize("n", range(1, 10))
def test_generator_matches_filter(n):
    assert list(gen_involutions_avoiding_321(n)) == filter_involutions_avoiding_321(n)


def test_involution_counts():
    assert [sum(1 for _ in involutions(n)) for n in range(1, 8)] == [1, 2, 4, 10, 26, 76, 232]


def test_central_binomial_counts():
    for n in range(1, 13):
        assert sum(1 for _ in gen_involutions_avoiding_321(n)) == comb(n, n // 2)


def test_class_tally_n10():
    t = count_classes(10)
    assert (t.total, t.type12, t.type21, t.simple, t.inflation_of_simple) == (252, 238, 1, 3, 10)
    assert t.parts_sum() == t.total


def test_class_of():
    assert class_of(Permutation.parse("1")) == "singleton"
    assert class_of(Permutation.parse("3412")) == "type21"
    assert class_of(Permutation.parse("47819(10)2356")) == "inflation"


def test_separable_counts():
    assert [count_separable_intersection(n) for n in range(1, 9)] == [1, 2, 3, 6, 10, 19, 33, 61]


@pytest.mark.parametrize("n", FIXTURE_LENGTHS)
def test_golden_fixtures(n):
    assert golden_fixture_check(n)


def test_fixture_lines_consistent():
    for n in FIXTURE_LENGTHS:
        for line in read_fixture(n):
            p, s = parse_fixture_line(line)
            assert len(p) == n and crossing_sequence(p) == s


def test_fixture_sizes():
    assert [len(read_fixture(n)) for n in FIXTURE_LENGTHS] == [1, 1, 3, 6, 15]


def test_no_fixture_for_odd():
    with pytest.raises(ValueError):
        read_fixture(7)
