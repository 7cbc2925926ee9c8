"""Substitution decomposition and the involution-specific maps built on it.

A permutation is a single point, a sum ``12[a, b]``, a skew sum ``21[a, b]``,
or an inflation of a simple permutation of length at least 4. Sum and skew
decompositions are canonical: the left block is the shortest prefix that
works, so it is never itself of the same type.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .perm import (
    ONE,
    CycleForm,
    Permutation,
    PermutationError,
    avoids_321,
    cycle_form,
    inflate,
    is_involution,
    is_simple,
    standardize,
)

LEAF, SUM, SKEW, SIMPLE = "leaf", "sum", "skew", "simple"

TWELVE = Permutation((1, 2))
TWENTYONE = Permutation((2, 1))


@dataclass(frozen=True)
class Decomposition:
    """One node of a substitution decomposition.

    ``blocks`` holds plain permutations for a top-level :func:`classify`
    and child nodes for a :func:`full_tree`.
    """

    kind: str
    skeleton: Permutation
    blocks: tuple[Union[Permutation, "Decomposition"], ...] = ()

    @property
    def left(self):
        return self.blocks[0]

    @property
    def right(self):
        return self.blocks[-1]

    def permutation(self) -> Permutation:
        """Re-inflate the node (recursively for trees)."""
        if self.kind == LEAF:
            return ONE
        parts = [b.permutation() if isinstance(b, Decomposition) else b for b in self.blocks]
        return inflate(self.skeleton, parts)

    def __str__(self) -> str:
        if self.kind == LEAF:
            return "1"
        if self.kind == SIMPLE and all(len(b.permutation() if isinstance(b, Decomposition) else b) == 1 for b in self.blocks):
            return str(self.skeleton)
        inner = ", ".join(str(b) for b in self.blocks)
        return f"{self.skeleton}[{inner}]"


def _prefix_split(p: Permutation, *, skew: bool) -> int | None:
    """Length of the shortest proper prefix that is a sum (or skew) block."""
    n = len(p)
    hi, lo = 0, n + 1
    for k in range(1, n):
        v = p.values[k - 1]
        hi, lo = max(hi, v), min(lo, v)
        if not skew and hi == k:
            return k
        if skew and lo == n - k + 1:
            return k
    return None


def _maximal_intervals(p: Permutation) -> list[tuple[int, int]]:
    """Partition of positions into maximal proper intervals (0-based, end exclusive).

    Only valid when ``p`` is neither a sum nor a skew sum; then the maximal
    proper intervals are disjoint and the longest one starting at each block
    boundary is the block.
    """
    n = len(p)
    vals = p.values
    out = []
    start = 0
    while start < n:
        best = start + 1
        lo = hi = vals[start]
        for end in range(start + 1, n):
            lo, hi = min(lo, vals[end]), max(hi, vals[end])
            if hi - lo == end - start and not (start == 0 and end == n - 1):
                best = end + 1
        out.append((start, best))
        start = best
    return out


def classify(p: Permutation) -> Decomposition:
    """Top-level canonical decomposition of ``p``."""
    n = len(p)
    if n == 1:
        return Decomposition(LEAF, ONE)
    for skew, kind, skel in ((False, SUM, TWELVE), (True, SKEW, TWENTYONE)):
        k = _prefix_split(p, skew=skew)
        if k is not None:
            return Decomposition(kind, skel, (standardize(p.values[:k]), standardize(p.values[k:])))
    spans = _maximal_intervals(p)
    skeleton = standardize([p.values[a] for a, _ in spans])
    blocks = tuple(standardize(p.values[a:b]) for a, b in spans)
    return Decomposition(SIMPLE, skeleton, blocks)


def full_tree(p: Permutation) -> Decomposition:
    node = classify(p)
    if node.kind == LEAF:
        return node
    return Decomposition(node.kind, node.skeleton, tuple(full_tree(b) for b in node.blocks))


def is_inflation_of_simple(p: Permutation) -> bool:
    """Inflation of a simple skeleton of length >= 4 with at least one non-trivial block."""
    node = classify(p)
    return node.kind == SIMPLE and any(len(b) > 1 for b in node.blocks)


def max_chain_increasing(c: CycleForm) -> bool:
    """Largest elements increase when all cycles (fixed points included) are ordered by their smallest.

    For an involution this holds exactly when it avoids 321.
    """
    maxima = [hi for _, hi in c.cycles()]
    return all(a < b for a, b in zip(maxima, maxima[1:]))


def simple_family(k: int) -> Permutation:
    """A simple 321-avoiding involution of length 4k - 6, one for each k >= 3.

    Layout: k, k+2, ..., 3k-4, then the pairs 1, 3k-3, 2, 3k-2, ..., k-2, 4k-6,
    then k-1, k+1, ..., 3k-5.
    """
    if k < 3:
        raise ValueError(f"family starts at k = 3, got {k}")
    lead = [k + 2 * j for j in range(k - 1)]
    middle = []
    for i in range(1, k - 1):
        middle += [i, 3 * k - 4 + i]
    tail = [k - 1 + 2 * j for j in range(k - 1)]
    sigma = Permutation(tuple(lead + middle + tail))
    assert len(sigma) == 4 * k - 6
    assert is_involution(sigma) and avoids_321(sigma) and is_simple(sigma), sigma
    return sigma


def _require_fpf_321(p: Permutation) -> CycleForm:
    if not is_involution(p) or not avoids_321(p):
        raise PermutationError(f"{p} is not a 321-avoiding involution")
    c = cycle_form(p)
    if c.fixed_points:
        raise PermutationError(f"{p} has fixed points {list(c.fixed_points)}")
    return c


def shift_map(p: Permutation) -> Permutation:
    """(m1,M1)...(mh,Mh) -> (1)(m2,M1)(m3,M2)...(mh,M(h-1))(Mh)."""
    c = _require_fpf_321(p)
    mins = [a for a, _ in c.transpositions]
    maxs = [b for _, b in c.transpositions]
    pairs = list(zip(mins[1:], maxs[:-1]))
    out = CycleForm(len(p), (mins[0], maxs[-1]), pairs).to_permutation()
    assert is_involution(out) and avoids_321(out)
    return out


def _require_even_321(p: Permutation) -> None:
    if len(p) % 2 or not is_involution(p) or not avoids_321(p):
        raise PermutationError(f"{p} is not a 321-avoiding involution of even length")


def first_point_forward(p: Permutation) -> Permutation:
    """Send an even-length 321-avoiding involution with p(1) != 1 to one with p(1) = 1.

    Sums get the shift applied to their canonical left block only; everything
    else is fixed-point free and is shifted whole.
    """
    _require_even_321(p)
    if p(1) == 1:
        raise PermutationError(f"{p} already fixes 1")
    node = classify(p)
    if node.kind == SUM:
        return inflate(TWELVE, [shift_map(node.left), node.right])
    return shift_map(p)


def first_point_inverse(p: Permutation) -> Permutation:
    """Undo :func:`first_point_forward`.

    With cycles ordered by their smallest element, (1) first and the next
    fixed point f at index i, cycles 0..i are re-paired as (min_j, max_{j+1}).
    """
    _require_even_321(p)
    if p(1) != 1:
        raise PermutationError(f"{p} does not fix 1")
    cycles = cycle_form(p).cycles()
    i = next(j for j in range(1, len(cycles)) if cycles[j][0] == cycles[j][1])
    pairs = [(cycles[j][0], cycles[j + 1][1]) for j in range(i)]
    pairs += [c for c in cycles[i + 1 :] if c[0] != c[1]]
    fixed = [c[0] for c in cycles[i + 1 :] if c[0] == c[1]]
    return CycleForm(len(p), fixed, pairs).to_permutation()


def sum_components(p: Permutation) -> list[Permutation]:
    """Blocks of the finest sum decomposition, left to right."""
    out = []
    while True:
        node = classify(p)
        if node.kind != SUM:
            out.append(p)
            return out
        out.append(node.left)
        p = node.right


# compatibility names
check_prop23 = max_chain_increasing
prop25_family = simple_family
lemma34_forward = first_point_forward
lemma34_inverse = first_point_inverse
