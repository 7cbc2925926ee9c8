from __future__ import annotations

import pytest

from inv321.enumeration import gen_involutions_avoiding_321, involutions, simple_involutions
from inv321.paths import (
    LOWER,
    UPPER,
    Connection,
    CrossingSequence,
    LatticePath,
    PathError,
    admissible_sequences,
    crossing_sequence,
    dyck_word_from_sequence,
    has_symmetric_connection_pair,
    involution_from_dyck,
    involution_from_labelled_motzkin,
    involution_from_sequence,
    involution_from_sequence_search,
    is_admissible,
    is_simple_via_dyck,
    labelled_motzkin_from_involution,
    motzkin_from_sequence,
    path_from_counts,
    plot_connections,
    labels_trivial_and_flats_grounded,
    sequence_from_motzkin,
    short_motzkin_paths,
    simple_extensions,
    simple_patterns_contained,
    split_components,
)
from inv321.perm import Permutation, PermutationError, contains_pattern, is_simple

P = Permutation.parse
C = CrossingSequence.parse


def test_path_parse_and_print():
    path = LatticePath.parse("UUD:2D")
    assert path.down_labels() == (2, 1)
    assert str(path) == "UUD:2D"
    assert LatticePath.parse("UUDD").labels is None


@pytest.mark.parametrize("text", ["UDX", "UUD", "UD:2", "D"])
def test_path_rejects(text):
    with pytest.raises(PathError):
        LatticePath.parse(text)


def test_sequence_parse_forms():
    assert C("{1,3,1}") == C("{131}") == CrossingSequence((1, 3, 1))
    assert str(C("{1,3,5,3,1}")) == "{1,3,5,3,1}"
    with pytest.raises(PathError):
        CrossingSequence(())


@pytest.mark.parametrize(
    "perm,seq",
    [
        ("351624", "{1,3,1}"),
        ("468192(10)357", "{1,3,5,3,1}"),
        ("3517294(10)68", "{1,3,3,3,1}"),
    ],
)
def test_crossing_sequences(perm, seq):
    assert str(crossing_sequence(P(perm))) == seq
    assert involution_from_sequence(C(seq)) == P(perm)


def test_crossing_sequence_needs_fixed_point_free():
    with pytest.raises(PermutationError):
        crossing_sequence(P("1324"))


def test_admissibility():
    assert is_admissible((1, 3, 1)) and is_admissible((1,))
    assert not is_admissible((1, 1)) and not is_admissible((1, 5, 3, 1)) and not is_admissible((1, 3, 2, 1))
    assert list(admissible_sequences(4)) == [(1, 3, 3, 1)]


def test_dyck_pairing():
    assert involution_from_dyck(LatticePath("UUDUDD")) == P("351624")
    p = involution_from_dyck(LatticePath("UUUDUUDDDD"))
    assert p == P("47819(10)2356")
    assert not is_simple_via_dyck(LatticePath("UUUDUUDDDD"))


def test_repeated_block_path_not_simple():
    assert not is_simple_via_dyck(LatticePath("UUDUDD" * 3))


def test_dyck_word_from_sequence():
    assert dyck_word_from_sequence(C("{1,3,1}")) == "UUDUDD"


def test_connections_and_symmetric_pairs():
    p = P("3516249(11)7(12)8(10)(15)(17)(13)(18)(14)(16)")
    assert crossing_sequence(p).values == (1, 3, 1, 1, 3, 1, 1, 3, 1)
    cons = plot_connections(p)
    assert [c.index for c in cons if c.kind == UPPER] == [1, 4, 7]
    assert [c.index for c in cons if c.kind == LOWER] == [2, 5, 8]
    assert Connection(UPPER, 1) in cons
    assert not has_symmetric_connection_pair(p)
    assert has_symmetric_connection_pair(P("3412"))


def test_split_components_recovers_sum_blocks():
    p = P("3516249(11)7(12)8(10)(15)(17)(13)(18)(14)(16)")
    pieces = split_components(path_from_counts(crossing_sequence(p).values))
    assert [str(involution_from_sequence(sequence_from_motzkin(x))) for x in pieces] == ["351624"] * 3


def test_motzkin_sequence_round_trip():
    s = C("{1,3,5,3,3,1}")
    m = motzkin_from_sequence(s)
    assert str(m) == "UUDHD"
    assert sequence_from_motzkin(m) == s
    with pytest.raises(PathError):
        motzkin_from_sequence(C("{1,1}"))


def test_short_motzkin_counts():
    assert [sum(1 for _ in short_motzkin_paths(n)) for n in range(9)] == [1, 0, 1, 1, 3, 6, 15, 36, 91]


@pytest.mark.parametrize("n", [6, 8, 10, 12])
def test_sequence_inverse_agrees_with_search(n):
    for p in simple_involutions(n):
        s = crossing_sequence(p)
        assert involution_from_sequence(s) == involution_from_sequence_search(s) == p


def test_labelled_motzkin_examples():
    assert str(labelled_motzkin_from_involution(P("4321"))) == "UUD:2D"
    assert str(labelled_motzkin_from_involution(P("321"))) == "UHD"
    assert not labels_trivial_and_flats_grounded(P("321"))
    assert labels_trivial_and_flats_grounded(P("351624"))


def test_labelled_motzkin_inverse_all_involutions_n8():
    for n in range(1, 9):
        for p in involutions(n):
            assert involution_from_labelled_motzkin(labelled_motzkin_from_involution(p)) == p


def test_dyck_criterion_matches_intervals_n12():
    for n in range(2, 13, 2):
        for p in gen_involutions_avoiding_321(n):
            if any(p(i) == i for i in range(1, n + 1)):
                continue
            assert is_simple_via_dyck(labelled_motzkin_from_involution(p)) == is_simple(p)


def test_subsequence_operations():
    assert simple_patterns_contained(C("{1,3,3,3,3,1}")) == {C("{131}"), C("{1331}"), C("{13331}")}
    assert simple_extensions(C("{1,3,1}")) == {C("{1,3,3,1}")}


def test_extensions_contain_source_for_short_sequences():
    for s in (C("{1,3,1}"), C("{1,3,3,1}"), C("{1,3,5,3,1}")):
        src = involution_from_sequence(s)
        for t in simple_extensions(s):
            assert contains_pattern(involution_from_sequence(t), src)


# The subsequence test and pattern containment disagree in both directions.
# These are the smallest witnesses found by exhaustive search.


def test_pattern_without_subsequence():
    big, small = P("3618(10)2(11)4(12)579"), P("3617924(10)58")
    assert contains_pattern(big, small)
    assert crossing_sequence(small) not in simple_patterns_contained(crossing_sequence(big))


def test_subsequence_without_pattern():
    big = P("3617924(12)5(13)(15)8(10)(16)(11)(14)")
    small = P("3617(10)24(11)(13)58(14)9(12)")
    assert crossing_sequence(small) in simple_patterns_contained(crossing_sequence(big))
    assert not contains_pattern(big, small)


def test_extension_not_containing_source():
    s = C("{1,3,1,3,1,3,1}")
    t = C("{1,3,1,3,3,1,3,1}")
    assert t in simple_extensions(s)
    assert not contains_pattern(involution_from_sequence(t), involution_from_sequence(s))


def test_extensions_of_1331_match_pattern_oracle():
    s = C("{1,3,3,1}")
    assert simple_extensions(s) == {C("{1,3,1,3,1}"), C("{1,3,3,3,1}"), C("{1,3,5,3,1}")}
    src = involution_from_sequence(s)
    containing = {crossing_sequence(q) for q in simple_involutions(10) if contains_pattern(q, src)}
    assert containing == simple_extensions(s)
