from __future__ import annotations

import pytest

from inv321.perm import (
    PATTERN_321,
    CycleForm,
    Permutation,
    PermutationError,
    avoids_321,
    contains_pattern,
    cycle_form,
    inflate,
    intervals,
    inverse,
    is_involution,
    is_simple,
    standardize,
)


def test_parse_forms_agree():
    a = Permutation.parse("4681(10)2(11)3(12)579")
    b = Permutation.parse("4,6,8,1,10,2,11,3,12,5,7,9")
    assert a == b
    assert str(a) == "4681(10)2(11)3(12)579"


@pytest.mark.parametrize("text", ["", "1a2", "1(2", "112", "23"])
def test_parse_rejects(text):
    with pytest.raises(PermutationError):
        Permutation.parse(text)


def test_one_based_call_and_inverse():
    p = Permutation.parse("231")
    assert p(1) == 2
    assert inverse(p) == Permutation.parse("312")
    assert not is_involution(p)
    assert is_involution(Permutation.parse("351624"))


def test_standardize():
    assert standardize([7, 2, 9]) == Permutation((2, 1, 3))


def test_cycle_form_round_trip():
    p = Permutation.parse("47819(10)2356")
    c = cycle_form(p)
    assert c.fixed_points == ()
    assert c.to_permutation() == p
    assert c.transpositions[0] == (1, 4)


def test_cycles_include_fixed_points_sorted():
    c = cycle_form(Permutation.parse("1432"))
    assert c.cycles() == [(1, 1), (2, 4), (3, 3)]
    assert isinstance(c, CycleForm)


def test_contains_pattern():
    assert contains_pattern(Permutation.parse("4321"), PATTERN_321)
    assert not contains_pattern(Permutation.parse("351624"), PATTERN_321)
    assert contains_pattern(Permutation.parse("351624"), Permutation.parse("2413"))


def test_avoids_321_matches_generic_n7():
    from itertools import permutations

    for vals in permutations(range(1, 8)):
        p = Permutation(vals)
        assert avoids_321(p) == (not contains_pattern(p, PATTERN_321))


def test_simple_and_intervals():
    assert is_simple(Permutation.parse("351624"))
    assert is_simple(Permutation.parse("2413"))
    assert not is_simple(Permutation.parse("3412"))
    assert (1, 2) in intervals(Permutation.parse("3412"))


def test_inflate():
    p = inflate(Permutation.parse("21"), [Permutation.parse("12"), Permutation.parse("1")])
    assert p == Permutation.parse("231")
    with pytest.raises(PermutationError):
        inflate(Permutation.parse("21"), [Permutation.parse("1")])


def _perms(n):
    from itertools import permutations

    return (Permutation(v) for v in permutations(range(1, n + 1)))


def test_inverse_is_an_involution_n8():
    for n in range(1, 9):
        for p in _perms(n):
            assert inverse(inverse(p)) == p


def test_cycle_round_trip_n10():
    from inv321.enumeration import involutions

    for n in range(1, 11):
        for p in involutions(n):
            assert cycle_form(p).to_permutation() == p


def _simple_by_extension(p):
    # grow every window leftmost-first and stop at the first proper interval
    n = len(p)
    for a in range(n):
        lo = hi = p.values[a]
        for b in range(a + 1, n):
            lo, hi = min(lo, p.values[b]), max(hi, p.values[b])
            if hi - lo == b - a and not (a == 0 and b == n - 1):
                return False
    return True


def test_simple_agrees_with_second_scan_n8():
    for n in range(1, 9):
        for p in _perms(n):
            assert is_simple(p) == _simple_by_extension(p), p


def test_321_against_triple_scan_n10():
    from itertools import combinations

    from inv321.enumeration import involutions

    for n in range(1, 11):
        for p in involutions(n):
            v = p.values
            triple = any(v[i] > v[j] > v[k] for i, j, k in combinations(range(n), 3))
            assert contains_pattern(p, PATTERN_321) == triple
