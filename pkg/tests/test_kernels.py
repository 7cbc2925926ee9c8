from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from inv321 import _pykernels, kernels

compiled = pytest.importorskip("inv321._ckernels")

perms = st.integers(1, 9).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)
patterns = st.integers(1, 4).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


@settings(max_examples=300, deadline=None)
@given(perms, patterns)
def test_backends_agree(values, pattern):
    assert compiled.is_simple(values) == _pykernels.is_simple(values)
    assert compiled.avoids_321(values) == _pykernels.avoids_321(values)
    assert compiled.contains_pattern(values, pattern) == _pykernels.contains_pattern(values, pattern)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8).flatmap(lambda m: st.permutations(range(1, m + 1))))
def test_crossing_counts_agree(order):
    # a fixed-point-free involution from an arbitrary pairing of positions
    n = 2 * len(order)
    vals = [0] * n
    for k, i in enumerate(order):
        a, b = 2 * k + 1, 2 * k + 2
        vals[a - 1], vals[b - 1] = b, a
    assert list(compiled.crossing_counts(tuple(vals))) == list(_pykernels.crossing_counts(tuple(vals)))


def test_use_backend_switches():
    before = kernels.backend()
    try:
        kernels.use_backend("python")
        assert kernels.backend() == "python"
        kernels.use_backend("compiled")
        assert kernels.backend() == "compiled"
    finally:
        kernels.use_backend(before)
    with pytest.raises(ValueError):
        kernels.use_backend("fortran")


def test_library_results_identical_on_both_backends():
    from inv321.enumeration import count_classes

    before = kernels.backend()
    try:
        tallies = []
        for name in ("python", "compiled"):
            kernels.use_backend(name)
            tallies.append(count_classes(10))
        assert tallies[0] == tallies[1]
    finally:
        kernels.use_backend(before)
