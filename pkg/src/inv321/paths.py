"""Plots, crossing sequences and lattice paths of 321-avoiding involutions.

Two encodings of a fixed-point-free involution ``p`` in I(321) live here:

* the Dyck word with an up step at every smaller element of a transposition
  and a down step at every larger one (pair the i-th up with the i-th down
  to get ``p`` back);
* the crossing sequence: for each transposition (m, M), ordered by m, the
  number of sign changes of ``p(j) - j`` as j runs from m to M. For simple
  involutions its consecutive differences spell a Motzkin path with no
  horizontal step at height 0.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .perm import Permutation, PermutationError, avoids_321, cycle_form, is_involution, is_simple

UP, DOWN, FLAT = "U", "D", "H"
UPPER, LOWER = "upper", "lower"


class PathError(ValueError):
    pass


@dataclass(frozen=True)
class LatticePath:
    """Steps over U/D/H; ``labels`` has one positive entry per D step, or is None for all ones."""

    steps: str
    labels: tuple[int, ...] | None = None

    def __post_init__(self):
        if set(self.steps) - {UP, DOWN, FLAT}:
            raise PathError(f"steps must be over U, D, H: {self.steps!r}")
        labels = self.labels
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != self.steps.count(DOWN):
                raise PathError("one label per down step")
            if all(lab == 1 for lab in labels):
                labels = None
        object.__setattr__(self, "labels", labels)
        h = 0
        labs = iter(self.down_labels())
        for s in self.steps:
            if s == UP:
                h += 1
            elif s == DOWN:
                lab = next(labs)
                if not 1 <= lab <= h:
                    raise PathError(f"label {lab} out of range 1..{h} in {self}")
                h -= 1
        if h != 0:
            raise PathError(f"path {self.steps!r} does not return to height 0")

    @classmethod
    def parse(cls, text: str) -> LatticePath:
        """Read ``UUDUDD`` or ``UHD:2`` (labels only on D steps)."""
        text = re.sub(r"\s+", "", text)
        if not re.fullmatch(r"(?:[UH]|D(?::\d+)?)*", text):
            raise PathError(f"cannot parse path {text!r}")
        steps, labels = [], []
        for tok in re.findall(r"D(?::\d+)?|[UH]", text):
            steps.append(tok[0])
            if tok[0] == DOWN:
                labels.append(int(tok[2:]) if ":" in tok else 1)
        return cls("".join(steps), tuple(labels))

    def down_labels(self) -> tuple[int, ...]:
        return self.labels if self.labels is not None else (1,) * self.steps.count(DOWN)

    def heights(self) -> list[int]:
        """Height before each step, plus the final height."""
        out = [0]
        for s in self.steps:
            out.append(out[-1] + (s == UP) - (s == DOWN))
        return out

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def is_dyck(self) -> bool:
        return FLAT not in self.steps and self.labels is None

    @property
    def is_short(self) -> bool:
        """No horizontal step at height 0."""
        return all(not (s == FLAT and h == 0) for s, h in zip(self.steps, self.heights()))

    def __str__(self) -> str:
        out = []
        labs = iter(self.down_labels())
        for s in self.steps:
            if s == DOWN:
                lab = next(labs)
                out.append("D" if lab == 1 else f"D:{lab}")
            else:
                out.append(s)
        return "".join(out)


@dataclass(frozen=True)
class CrossingSequence:
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values or any(v < 1 for v in self.values):
            raise PathError(f"crossing counts must be positive: {self.values}")

    @classmethod
    def parse(cls, text: str) -> CrossingSequence:
        """Read ``{1,3,1}`` or the compact single-digit form ``{131}``."""
        body = text.strip()
        if body.startswith("{") and body.endswith("}"):
            body = body[1:-1]
        if "," in body:
            vals = [int(t) for t in body.split(",") if t.strip()]
        elif body.isdigit():
            vals = [int(ch) for ch in body]
        else:
            raise PathError(f"cannot parse sequence {text!r}")
        return cls(tuple(vals))

    def is_admissible(self) -> bool:
        return is_admissible(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.values)) + "}"


def is_admissible(s) -> bool:
    """Odd entries, 1 at both ends, no two adjacent 1s, steps of at most 2."""
    s = tuple(s)
    if not s or s[0] != 1 or s[-1] != 1:
        return False
    if any(v % 2 == 0 for v in s):
        return False
    if any(a == 1 and b == 1 for a, b in zip(s, s[1:])):
        return False
    return all(abs(a - b) <= 2 for a, b in zip(s, s[1:]))


def admissible_sequences(length: int):
    """All admissible sequences of a given length, lexicographically."""
    if length < 1:
        return
    if length == 1:
        yield (1,)
        return

    def rec(prefix):
        if len(prefix) == length:
            if prefix[-1] == 1:
                yield tuple(prefix)
            return
        last = prefix[-1]
        remaining = length - len(prefix)
        for nxt in (last - 2, last, last + 2):
            # must still be able to come back down to 1
            if nxt < 1 or (nxt - 1) // 2 > remaining - 1:
                continue
            if last == 1 and nxt == 1:
                continue
            yield from rec(prefix + [nxt])

    yield from rec([1])


@dataclass(frozen=True)
class Connection:
    """Adjacent same-side points of the plot for transpositions ``index`` and ``index + 1``."""

    kind: str
    index: int


def _require_fpf_321(p: Permutation):
    if not is_involution(p) or not avoids_321(p):
        raise PermutationError(f"{p} is not a 321-avoiding involution")
    c = cycle_form(p)
    if c.fixed_points:
        raise PermutationError(f"{p} has fixed points {list(c.fixed_points)}")
    return c


def plot_connections(p: Permutation) -> list[Connection]:
    """Scan the plot left to right for consecutive points on the same side of y = x."""
    c = _require_fpf_321(p)
    rank_small = {m: i for i, (m, _) in enumerate(c.transpositions, start=1)}
    rank_large = {M: i for i, (_, M) in enumerate(c.transpositions, start=1)}
    out = []
    for j in range(1, len(p)):
        above, next_above = p(j) > j, p(j + 1) > j + 1
        if above and next_above:
            out.append(Connection(UPPER, rank_small[j]))
        elif not above and not next_above:
            out.append(Connection(LOWER, rank_large[j]))
    return sorted(out, key=lambda con: (con.index, con.kind))


def has_symmetric_connection_pair(p: Permutation) -> bool:
    uppers = {con.index for con in plot_connections(p) if con.kind == UPPER}
    return any(con.kind == LOWER and con.index in uppers for con in plot_connections(p))


def crossing_sequence(p: Permutation) -> CrossingSequence:
    _require_fpf_321(p)
    return CrossingSequence(tuple(kernels.crossing_counts(p.values)))


def path_from_counts(values) -> LatticePath:
    """Step k goes up, down or flat as values[k+1] - values[k] is +2, -2 or 0."""
    steps = []
    for a, b in zip(values, values[1:]):
        if b - a == 2:
            steps.append(UP)
        elif b - a == -2:
            steps.append(DOWN)
        elif a == b:
            steps.append(FLAT)
        else:
            raise PathError(f"consecutive counts {a}, {b} differ by more than 2")
    return LatticePath("".join(steps))


def motzkin_from_sequence(s: CrossingSequence) -> LatticePath:
    if not s.is_admissible():
        raise PathError(f"{s} is not admissible")
    return path_from_counts(s.values)


def sequence_from_motzkin(m: LatticePath) -> CrossingSequence:
    if m.labels is not None or not m.is_short:
        raise PathError(f"{m} is not an unlabelled Motzkin path without level-0 flat steps")
    vals = [1]
    for step in m.steps:
        vals.append(vals[-1] + {UP: 2, DOWN: -2, FLAT: 0}[step])
    return CrossingSequence(tuple(vals))


def split_components(path: LatticePath) -> list[LatticePath]:
    """Cut a path at its level-0 flat steps."""
    pieces, current = [], []
    for step, h in zip(path.steps, path.heights()):
        if step == FLAT and h == 0:
            pieces.append(LatticePath("".join(current)))
            current = []
        else:
            current.append(step)
    pieces.append(LatticePath("".join(current)))
    return pieces


def dyck_word_from_sequence(s: CrossingSequence) -> str:
    """Rebuild the up/down word whose run structure realizes the crossing counts.

    Write the word as runs U^a1 D^b1 ... U^aK D^bK and let u(i), d(i) be the
    runs holding the i-th up and i-th down step. Then s_i = 2(d(i) - u(i)) + 1,
    and simplicity forces how u and d advance: a rise in s advances d only,
    a fall advances u only, a repeat advances both.
    """
    if not s.is_admissible():
        raise PathError(f"{s} is not admissible")
    vals = s.values
    u, d = [1], [1]
    for a, b in zip(vals, vals[1:]):
        du = {2: 0, -2: 1, 0: 1}[b - a]
        dd = du + (b - a) // 2
        u.append(u[-1] + du)
        d.append(d[-1] + dd)
    runs = u[-1]
    word = []
    for t in range(1, runs + 1):
        word.append(UP * u.count(t))
        word.append(DOWN * d.count(t))
    return "".join(word)


def involution_from_dyck(d: LatticePath) -> Permutation:
    """Pair the i-th up step with the i-th down step."""
    if not d.is_dyck:
        raise PathError(f"{d} is not an unlabelled Dyck path")
    ups = [i for i, s in enumerate(d.steps, start=1) if s == UP]
    downs = [i for i, s in enumerate(d.steps, start=1) if s == DOWN]
    out = [0] * len(d)
    for a, b in zip(ups, downs):
        out[a - 1], out[b - 1] = b, a
    return Permutation(tuple(out))


def involution_from_sequence(s: CrossingSequence) -> Permutation:
    """The simple involution in I(321) of length 2|s| with crossing sequence ``s``."""
    p = involution_from_dyck(LatticePath(dyck_word_from_sequence(s)))
    assert crossing_sequence(p) == s and is_simple(p), (s, p)
    return p


def dyck_words(semilength: int):
    """All Dyck words of a semilength, lexicographically (U < D)."""
    def rec(prefix, ups, downs):
        if ups == downs == semilength:
            yield "".join(prefix)
            return
        if ups < semilength:
            prefix.append(UP)
            yield from rec(prefix, ups + 1, downs)
            prefix.pop()
        if downs < ups:
            prefix.append(DOWN)
            yield from rec(prefix, ups, downs + 1)
            prefix.pop()

    yield from rec([], 0, 0)


def involution_from_sequence_search(s: CrossingSequence) -> Permutation:
    """Exhaustive fallback: scan simple involutions of length 2|s| for the matching sequence."""
    for w in dyck_words(len(s)):
        p = involution_from_dyck(LatticePath(w))
        if is_simple(p) and crossing_sequence(p) == s:
            return p
    raise PathError(f"no simple involution has crossing sequence {s}")


def labelled_motzkin_from_involution(p: Permutation) -> LatticePath:
    """Flat at fixed points, up at smaller and down at larger transposition elements.

    The down step at i is labelled with the position of i among the integers
    >= i, reading the cycle decomposition with cycles ordered by their
    smallest element.
    """
    c = cycle_form(p)
    flat_order = [v for cyc in c.cycles() for v in (cyc if cyc[0] != cyc[1] else cyc[:1])]
    steps, labels = [], []
    for i in range(1, len(p) + 1):
        j = p(i)
        if j == i:
            steps.append(FLAT)
        elif j > i:
            steps.append(UP)
        else:
            steps.append(DOWN)
            larger = [v for v in flat_order if v >= i]
            labels.append(larger.index(i) + 1)
    return LatticePath("".join(steps), tuple(labels))


def involution_from_labelled_motzkin(path: LatticePath) -> Permutation:
    """Inverse of :func:`labelled_motzkin_from_involution`: a down step labelled h closes the h-th oldest open arc."""
    out = [0] * len(path)
    open_arcs: list[int] = []
    labs = iter(path.down_labels())
    for i, step in enumerate(path.steps, start=1):
        if step == FLAT:
            out[i - 1] = i
        elif step == UP:
            open_arcs.append(i)
        else:
            m = open_arcs.pop(next(labs) - 1)
            out[i - 1], out[m - 1] = m, i
    return Permutation(tuple(out))


def labels_trivial_and_flats_grounded(p: Permutation) -> bool:
    """Unit labels and every flat step at height 0."""
    path = labelled_motzkin_from_involution(p)
    return path.labels is None and all(
        h == 0 for step, h in zip(path.steps, path.heights()) if step == FLAT
    )


def is_simple_via_dyck(d: LatticePath) -> bool:
    """Irreducible, and no i with both U_i, U_(i+1) and D_i, D_(i+1) adjacent."""
    if not d.is_dyck:
        raise PathError(f"{d} is not an unlabelled Dyck path")
    heights = d.heights()
    if any(h == 0 for h in heights[1:-1]):
        return False
    ups = [i for i, s in enumerate(d.steps) if s == UP]
    downs = [i for i, s in enumerate(d.steps) if s == DOWN]
    return not any(
        ups[i + 1] == ups[i] + 1 and downs[i + 1] == downs[i] + 1 for i in range(len(ups) - 1)
    )


def _is_subsequence(small, big) -> bool:
    it = iter(big)
    return all(any(v == w for w in it) for v in small)


def simple_patterns_contained(s: CrossingSequence) -> set[CrossingSequence]:
    """Admissible subsequences of ``s`` of length 3..|s|-1."""
    if not s.is_admissible():
        raise PathError(f"{s} is not admissible")
    found = set()
    for k in range(3, len(s)):
        for idx in combinations(range(len(s)), k):
            sub = tuple(s.values[i] for i in idx)
            if is_admissible(sub):
                found.add(CrossingSequence(sub))
    return found


def simple_extensions(s: CrossingSequence) -> set[CrossingSequence]:
    """Admissible sequences one longer than ``s`` containing it as a subsequence."""
    if not s.is_admissible():
        raise PathError(f"{s} is not admissible")
    return {
        CrossingSequence(t)
        for t in admissible_sequences(len(s) + 1)
        if _is_subsequence(s.values, t)
    }


def short_motzkin_paths(length: int):
    """Motzkin paths of a length with no flat step at height 0."""
    def rec(prefix, h):
        left = length - len(prefix)
        if left == 0:
            if h == 0:
                yield LatticePath("".join(prefix))
            return
        for step, dh in ((UP, 1), (DOWN, -1), (FLAT, 0)):
            nh = h + dh
            if nh < 0 or nh > left - 1 or (step == FLAT and h == 0):
                continue
            prefix.append(step)
            yield from rec(prefix, nh)
            prefix.pop()

    yield from rec([], 0)


# compatibility names
prop81_check = labels_trivial_and_flats_grounded
