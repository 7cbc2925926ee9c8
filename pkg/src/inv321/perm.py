"""Permutations in 1-based one-line notation, cycle forms of involutions,
pattern containment, interval scans and inflation.

>>> p = Permutation.parse("351624")
>>> is_involution(p), is_simple(p), contains_pattern(p, Permutation((3, 2, 1)))
(True, True, False)
>>> print(inflate(p, [Permutation((1, 2)), ONE, Permutation((1, 2)), ONE, ONE, ONE]))
45712836
"""
from __future__ import annotations

import re
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from . import kernels


class PermutationError(ValueError):
    """Malformed one-line notation or a violated precondition."""


@dataclass(frozen=True, order=True)
class Permutation:
    """An immutable permutation of 1..n, stored as its one-line notation."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        n = len(vals)
        if n == 0:
            raise PermutationError("a permutation needs at least one entry")
        seen = [False] * (n + 1)
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise PermutationError(f"entry {v!r} is not an integer")
            if v < 1 or v > n:
                raise PermutationError(f"entry {v} outside 1..{n}")
            if seen[v]:
                raise PermutationError(f"entry {v} repeated")
            seen[v] = True

    @classmethod
    def parse(cls, text: str) -> Permutation:
        """Read ``351624``, ``4681(10)2(11)3(12)579`` or ``3,5,1,6,2,4``."""
        text = text.strip()
        if not text:
            raise PermutationError("empty permutation text")
        if "," in text or " " in text:
            parts = [t for t in re.split(r"[,\s]+", text) if t]
            try:
                return cls(tuple(int(t) for t in parts))
            except ValueError as exc:
                raise PermutationError(f"cannot parse {text!r}") from exc
        if not re.fullmatch(r"(?:\d|\(\d+\))+", text):
            raise PermutationError(f"cannot parse {text!r}")
        return cls(tuple(int(tok.strip("()")) for tok in re.findall(r"\(\d+\)|\d", text)))

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __call__(self, i: int) -> int:
        """Image of the 1-based position ``i``."""
        return self.values[i - 1]

    def __str__(self) -> str:
        return "".join(str(v) if v < 10 else f"({v})" for v in self.values)

    def __repr__(self) -> str:
        return f"Permutation({self})"


ONE = Permutation((1,))
PATTERN_321 = Permutation((3, 2, 1))


def make_permutation(values: Iterable[int]) -> Permutation:
    return Permutation(tuple(values))


def standardize(values: Sequence[int]) -> Permutation:
    """The permutation order-isomorphic to a sequence of distinct numbers."""
    rank = {v: r for r, v in enumerate(sorted(values), start=1)}
    return Permutation(tuple(rank[v] for v in values))


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, v in enumerate(p.values, start=1):
        out[v - 1] = i
    return Permutation(tuple(out))


def is_involution(p: Permutation) -> bool:
    vals = p.values
    return all(vals[v - 1] == i for i, v in enumerate(vals, start=1))


def contains_pattern(p: Permutation, pattern: Permutation) -> bool:
    """True iff some subsequence of ``p`` is order-isomorphic to ``pattern``."""
    return kernels.contains_pattern(p.values, pattern.values)


def avoids_321(p: Permutation) -> bool:
    """Linear-time shortcut for ``not contains_pattern(p, 321)``."""
    return kernels.avoids_321(p.values)


@dataclass(frozen=True)
class CycleForm:
    """Cycle decomposition of an involution of length n.

    ``transpositions`` holds pairs (m, M) with m < M, sorted by m.
    """

    n: int
    fixed_points: tuple[int, ...]
    transpositions: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "fixed_points", tuple(sorted(self.fixed_points)))
        pairs = tuple(sorted((min(a, b), max(a, b)) for a, b in self.transpositions))
        object.__setattr__(self, "transpositions", pairs)
        used = list(self.fixed_points) + [x for pair in pairs for x in pair]
        if sorted(used) != list(range(1, self.n + 1)):
            raise PermutationError(f"cycles do not cover 1..{self.n} exactly once")
        if any(a == b for a, b in pairs):
            raise PermutationError("a transposition needs two distinct points")

    def cycles(self) -> list[tuple[int, int]]:
        """All cycles as (min, max) pairs, fixed points as (f, f), sorted by min."""
        return sorted([(f, f) for f in self.fixed_points] + list(self.transpositions))

    def to_permutation(self) -> Permutation:
        out = list(range(1, self.n + 1))
        for a, b in self.transpositions:
            out[a - 1], out[b - 1] = b, a
        return Permutation(tuple(out))

    def __str__(self) -> str:
        return "".join(f"({a},{b})" if a != b else f"({a})" for a, b in self.cycles())


def cycle_form(p: Permutation) -> CycleForm:
    if not is_involution(p):
        raise PermutationError(f"{p} is not an involution")
    fixed = tuple(i for i, v in enumerate(p.values, start=1) if v == i)
    pairs = tuple((i, v) for i, v in enumerate(p.values, start=1) if v > i)
    return CycleForm(len(p), fixed, pairs)


def is_interval(p: Permutation, start: int, end: int) -> bool:
    """Whether positions start..end (1-based, inclusive) carry contiguous values."""
    window = p.values[start - 1 : end]
    return max(window) - min(window) == end - start


def intervals(p: Permutation) -> list[tuple[int, int]]:
    """Every interval [a, b] of ``p`` with a < b, by window scan."""
    out = []
    n = len(p)
    for a in range(1, n + 1):
        lo = hi = p(a)
        for b in range(a + 1, n + 1):
            lo, hi = min(lo, p(b)), max(hi, p(b))
            if hi - lo == b - a:
                out.append((a, b))
    return out


def is_simple(p: Permutation) -> bool:
    """No interval strictly between a singleton and the whole permutation."""
    return kernels.is_simple(p.values)


def inflate(skeleton: Permutation, blocks: Sequence[Permutation]) -> Permutation:
    """``skeleton[blocks]``: entry i of the skeleton becomes a copy of blocks[i]."""
    if len(blocks) != len(skeleton):
        raise PermutationError(
            f"skeleton of length {len(skeleton)} needs {len(skeleton)} blocks, got {len(blocks)}"
        )
    # value offset of each block = total size of blocks with smaller skeleton value
    by_value = sorted(range(len(skeleton)), key=lambda i: skeleton.values[i])
    offset = [0] * len(skeleton)
    running = 0
    for i in by_value:
        offset[i] = running
        running += len(blocks[i])
    out: list[int] = []
    for i, block in enumerate(blocks):
        out.extend(v + offset[i] for v in block.values)
    return Permutation(tuple(out))
