"""Pure-Python hot loops. ``_ckernels.pyx`` mirrors these one for one.

All functions take one-line notation as a sequence of ints over 1..n and
assume it is already validated.
"""
from __future__ import annotations

from collections.abc import Sequence


def is_simple(values: Sequence[int]) -> bool:
    n = len(values)
    if n <= 2:
        return True
    for start in range(n - 1):
        lo = hi = values[start]
        # windows of length n are trivial, so the full-length scan stops one short
        stop = n - 1 if start == 0 else n
        for end in range(start + 1, stop):
            v = values[end]
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
            if hi - lo == end - start:
                return False
    return True


def contains_pattern(values: Sequence[int], pattern: Sequence[int]) -> bool:
    n, k = len(values), len(pattern)
    if k > n:
        return False
    chosen = [0] * k

    def extend(depth: int, start: int) -> bool:
        if depth == k:
            return True
        want = pattern[depth]
        for pos in range(start, n - (k - depth) + 1):
            v = values[pos]
            for prev in range(depth):
                if (values[chosen[prev]] < v) != (pattern[prev] < want):
                    break
            else:
                chosen[depth] = pos
                if extend(depth + 1, pos + 1):
                    return True
        return False

    return extend(0, 0)


def avoids_321(values: Sequence[int]) -> bool:
    # p avoids 321 iff the entries that are not left-to-right maxima increase
    best = 0
    last_small = 0
    for v in values:
        if v > best:
            best = v
        elif v < last_small:
            return False
        else:
            last_small = v
    return True


def crossing_counts(values: Sequence[int]) -> list[int]:
    """Sign changes of p(j) - j over [m, M] for each transposition, ordered by m."""
    n = len(values)
    above = [values[j] > j + 1 for j in range(n)]
    # prefix[j] = number of sign changes between positions 1..j+1
    prefix = [0] * n
    for j in range(1, n):
        prefix[j] = prefix[j - 1] + (above[j] != above[j - 1])
    out = []
    for j in range(n):
        target = values[j]
        if target > j + 1:
            out.append(prefix[target - 1] - prefix[j])
    return out
