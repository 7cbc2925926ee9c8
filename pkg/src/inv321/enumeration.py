"""Brute-force generation and tallies of 321-avoiding involutions."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .paths import CrossingSequence, crossing_sequence
from .perm import Permutation, contains_pattern
from .structure import LEAF, SIMPLE, SKEW, SUM, classify

FIXTURE_LENGTHS = (6, 8, 10, 12, 14)
PATTERN_2413 = Permutation((2, 4, 1, 3))
PATTERN_3142 = Permutation((3, 1, 4, 2))


def _pair_up(word: list[str]) -> tuple[int, ...]:
    """One-line notation from a U/D/H word: i-th U pairs with i-th D, H is fixed."""
    out = [0] * len(word)
    opened: list[int] = []
    closed = 0
    for i, s in enumerate(word, start=1):
        if s == "H":
            out[i - 1] = i
        elif s == "U":
            opened.append(i)
        else:
            m = opened[closed]
            closed += 1
            out[i - 1], out[m - 1] = m, i
    return tuple(out)


def gen_involutions_avoiding_321(n: int):
    """Yield I(321)_n in lexicographic order.

    Built from the cycle structure rather than by filtering: pick the fixed
    points (none may sit under a transposition, so they split 1..n into
    even-length gaps), then interleave an increasing chain of smaller
    elements with an increasing chain of larger ones inside every gap.
    """
    if n < 1:
        raise ValueError(f"length must be positive, got {n}")
    found = []
    word: list[str] = []

    def rec(height: int):
        left = n - len(word)
        if left == 0:
            if height == 0:
                found.append(_pair_up(word))
            return
        if height == 0:
            word.append("H")
            rec(0)
            word.pop()
        if height + 1 <= left - 1:
            word.append("U")
            rec(height + 1)
            word.pop()
        if height > 0:
            word.append("D")
            rec(height - 1)
            word.pop()

    rec(0)
    for vals in sorted(found):
        yield Permutation(vals)


def involutions(n: int):
    """Every involution of length n (any pattern), via perfect matchings on the non-fixed points."""
    def rec(free: list[int], out: list[int]):
        if not free:
            yield tuple(out)
            return
        first, rest = free[0], free[1:]
        out[first - 1] = first
        yield from rec(rest, out)
        for k, partner in enumerate(rest):
            out[first - 1], out[partner - 1] = partner, first
            yield from rec(rest[:k] + rest[k + 1 :], out)
        out[first - 1] = 0

    for vals in rec(list(range(1, n + 1)), [0] * n):
        yield Permutation(vals)


def filter_involutions_avoiding_321(n: int) -> list[Permutation]:
    """Independent oracle: all involutions, filtered by generic pattern search."""
    pat = Permutation((3, 2, 1))
    return sorted(p for p in involutions(n) if not contains_pattern(p, pat))


@dataclass(frozen=True)
class ClassTally:
    n: int
    total: int = 0
    type12: int = 0
    type21: int = 0
    simple: int = 0
    inflation_of_simple: int = 0
    singleton: int = 0

    def parts_sum(self) -> int:
        return self.singleton + self.type12 + self.type21 + self.simple + self.inflation_of_simple


def class_of(p: Permutation) -> str:
    """One of singleton, type12, type21, simple, inflation."""
    node = classify(p)
    kind = node.kind
    if kind == LEAF:
        return "singleton"
    if kind == SUM:
        return "type12"
    if kind == SKEW:
        return "type21"
    assert kind == SIMPLE
    return "simple" if all(len(b) == 1 for b in node.blocks) else "inflation"


def count_classes(n: int) -> ClassTally:
    counts = {"singleton": 0, "type12": 0, "type21": 0, "simple": 0, "inflation": 0}
    total = 0
    for p in gen_involutions_avoiding_321(n):
        counts[class_of(p)] += 1
        total += 1
    return ClassTally(
        n,
        total=total,
        type12=counts["type12"],
        type21=counts["type21"],
        simple=counts["simple"],
        inflation_of_simple=counts["inflation"],
        singleton=counts["singleton"],
    )


def count_separable_intersection(n: int) -> int:
    """How many members of I(321)_n avoid both 2413 and 3142."""
    return sum(
        1
        for p in gen_involutions_avoiding_321(n)
        if not contains_pattern(p, PATTERN_2413) and not contains_pattern(p, PATTERN_3142)
    )


def simple_involutions(n: int) -> list[Permutation]:
    """Simple members of I(321)_n of length > 2, lexicographically."""
    return [p for p in gen_involutions_avoiding_321(n) if class_of(p) == "simple"]


# ---------------------------------------------------------------- fixtures


def fixture_line(p: Permutation) -> str:
    return f"{p} {crossing_sequence(p)}"


def read_fixture(n: int) -> list[str]:
    """Data lines of the bundled listing of simple involutions of length n."""
    if n not in FIXTURE_LENGTHS:
        raise ValueError(f"no fixture for length {n}; have {FIXTURE_LENGTHS}")
    text = resources.files("inv321").joinpath(f"fixtures/simple_{n:02d}.txt").read_text("ascii")
    return [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def parse_fixture_line(line: str):
    perm_text, seq_text = line.split()
    return Permutation.parse(perm_text), CrossingSequence.parse(seq_text)


def golden_fixture_check(n: int) -> bool:
    """Enumerated simple involutions, rendered as fixture lines, equal the bundled listing as a set."""
    expected = read_fixture(n)
    got = [fixture_line(p) for p in simple_involutions(n)]
    return len(expected) == len(set(expected)) and set(expected) == set(got)

