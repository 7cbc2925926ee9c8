"""Executable checks behind ``inv321 verify``.

Every check compares a brute-force or independent computation with a
formula or bijection and returns a :class:`Check`. Known mismatches between
published claims and measurement are reported with status
``discrepancy-documented`` so they are neither hidden nor counted as failures.
"""
from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import product
from math import comb

from . import series as S
from .enumeration import (
    count_classes,
    count_separable_intersection,
    filter_involutions_avoiding_321,
    gen_involutions_avoiding_321,
    golden_fixture_check,
    involutions,
    simple_involutions,
    FIXTURE_LENGTHS,
)
from .paths import (
    CrossingSequence,
    LatticePath,
    crossing_sequence,
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
    UPPER,
    LOWER,
)
from .perm import (
    ONE,
    PATTERN_321,
    Permutation,
    avoids_321,
    contains_pattern,
    cycle_form,
    inflate,
    is_involution,
    is_simple,
)
from .structure import (
    SIMPLE,
    SKEW,
    SUM,
    max_chain_increasing,
    classify,
    full_tree,
    first_point_forward,
    first_point_inverse,
    simple_family,
    sum_components,
)

PASS, FAIL, DOCUMENTED = "pass", "fail", "discrepancy-documented"
SUITES = ("structure", "series", "paths")

# coefficient lists as printed alongside the closed forms
PRINTED = {
    "f": [1, 2, 3, 6, 10, 20, 35, 70, 126, 252, 462, 924, 1716, 3432, 6435, 12870, 24310],
    "phi": [1, 2, 3, 6, 10, 19, 33, 61, 108, 197, 352, 638, 1145, 2069, 3721, 6714, 12087],
    "alpha": [1, 3, 5, 10, 18, 35, 65, 126, 238, 462, 882, 1716, 3300, 6435, 12441, 24310, 47190, 92378, 179894],
    "zeta": [1, 0, 4, 0, 13, 0, 41, 0, 131, 0, 428, 0, 1429, 0, 4861],
    "gamma": [1, 0, 1, 0, 3, 0, 6, 0, 15, 0, 36, 0, 91, 0, 232, 0, 603, 0, 1585],
    "delta": [3, 0, 10, 0, 35, 0, 116, 0, 392, 0, 1338, 0, 4629, 0, 16192, 0, 57200, 0, 203798, 0,
              731601, 0, 2643902, 0, 9611747, 0, 35130194, 0, 129018797, 0, 475907912, 0, 1762457594],
    "f_minus_gamma": [1, 2, 3, 6, 10, 19, 35, 69, 126, 249, 462, 918, 1716, 3417, 6435, 12834, 24310,
                      48529, 92378, 184524],
}
RIORDAN = [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585]


@dataclass
class Check:
    name: str
    status: str
    expected: str = ""
    actual: str = ""
    detail: str = ""


@dataclass
class RunReport:
    command: str
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def exit_code(self) -> int:
        return int(any(c.status == FAIL for c in self.checks))

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "checks": [asdict(c) for c in self.checks],
            "elapsed_seconds": round(self.elapsed, 3),
            "exit_code": self.exit_code,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self) -> str:
        lines = [f"# {self.command}"]
        for c in self.checks:
            line = f"[{c.status}] {c.name}"
            if c.status != PASS:
                line += f": expected {c.expected}; actual {c.actual}"
            if c.detail:
                line += f" ({c.detail})"
            lines.append(line)
        counts = {s: sum(c.status == s for c in self.checks) for s in (PASS, FAIL, DOCUMENTED)}
        lines.append(
            f"# {counts[PASS]} pass, {counts[FAIL]} fail, {counts[DOCUMENTED]} discrepancy-documented"
            f" in {self.elapsed:.2f}s"
        )
        return "\n".join(lines)


def _eq(name: str, expected, actual, detail: str = "") -> Check:
    return Check(name, PASS if expected == actual else FAIL, str(expected), str(actual), detail)


def _all(name: str, failures: list, checked: int, what: str) -> Check:
    """Pass when no counterexample was found among ``checked`` cases."""
    if failures:
        return Check(name, FAIL, f"no counterexample among {checked} {what}", f"{len(failures)} failures, first {failures[0]}")
    return Check(name, PASS, f"{checked} {what}", f"{checked} {what}")


def _fpf(n: int):
    return [p for p in gen_involutions_avoiding_321(n) if p(1) != 1 and not cycle_form(p).fixed_points]


# ---------------------------------------------------------------- structure


def structure_checks(max_n: int, order: int) -> list:
    K = max_n
    checks = []

    def counting_law():
        got = [sum(1 for _ in gen_involutions_avoiding_321(n)) for n in range(1, K + 1)]
        want = [comb(n, n // 2) for n in range(1, K + 1)]
        return _eq(f"counting law |I(321)_n| = C(n, n//2), n <= {K}", want, got)

    def doubling():
        sizes = {n: sum(1 for _ in gen_involutions_avoiding_321(n)) for n in range(1, K + 1)}
        bad = [m for m in range(1, K // 2 + 1) if sizes[2 * m] != 2 * sizes[2 * m - 1]]
        return _all("doubling |I_2m| = 2|I_(2m-1)|", bad, K // 2, "values of m")

    def fixes_one_half():
        bad = []
        for m in range(1, min(K, 14) // 2 + 1):
            members = list(gen_involutions_avoiding_321(2 * m))
            fixed = sum(p(1) == 1 for p in members)
            if 2 * fixed != len(members):
                bad.append(m)
        return _all("half of I(321)_2m fixes 1", bad, min(K, 14) // 2, "values of m")

    def generator_vs_filter():
        lim = min(K, 10)
        bad = [n for n in range(1, lim + 1) if list(gen_involutions_avoiding_321(n)) != filter_involutions_avoiding_321(n)]
        return _all(f"cycle-chain generator equals filtered involutions, n <= {lim}", bad, lim, "lengths")

    def first_point():
        lim = min(K, 12)
        bad, count = [], 0
        for n in range(2, lim + 1, 2):
            for p in gen_involutions_avoiding_321(n):
                if p(1) == 1:
                    continue
                count += 1
                q = first_point_forward(p)
                if q(1) != 1 or not is_involution(q) or not avoids_321(q) or first_point_inverse(q) != p:
                    bad.append(str(p))
        return _all(f"first-point bijection round trip, n <= {lim}", bad, count, "involutions")

    def reinflation():
        bad, count = [], 0
        for n in range(1, K + 1):
            for p in gen_involutions_avoiding_321(n):
                count += 1
                if full_tree(p).permutation() != p or classify(p).permutation() != p:
                    bad.append(str(p))
        return _all("decomposition re-inflates to the input", bad, count, "involutions")

    def sum_blocks_involutions():
        # every sum either is an involution or has a non-involutive block, so
        # checking both implications over their own witnesses covers all sums
        lim = min(K, 10)
        bad, count = [], 0
        invs = {n: list(involutions(n)) for n in range(1, lim)}
        for n in range(2, lim + 1):
            for p in involutions(n):
                node = classify(p)
                if node.kind == SUM:
                    count += 1
                    if not (is_involution(node.left) and is_involution(node.right)):
                        bad.append(str(p))
            for k in range(1, n):
                for a in invs[k]:
                    if classify(a).kind == SUM:
                        continue
                    for b in invs[n - k]:
                        count += 1
                        p = inflate(Permutation((1, 2)), [a, b])
                        node = classify(p)
                        if node.left != a or not is_involution(p):
                            bad.append(str(p))
        return _all(f"sum is an involution iff both blocks are, n <= {lim}", bad, count, "sums")

    def sum_blocks_in_class():
        lim = min(K, 12)
        bad, count = [], 0
        for n in range(2, lim + 1):
            for p in gen_involutions_avoiding_321(n):
                node = classify(p)
                if node.kind == SUM:
                    count += 1
                    if not all(is_involution(b) and avoids_321(b) for b in node.blocks):
                        bad.append(str(p))
        return _all(f"blocks of sum members stay in I(321), n <= {lim}", bad, count, "sums")

    def skew_unique():
        bad = []
        for n in range(1, K + 1):
            skews = [p for p in gen_involutions_avoiding_321(n) if classify(p).kind == SKEW]
            m = n // 2
            want = [Permutation(tuple(range(m + 1, n + 1)) + tuple(range(1, m + 1)))] if n % 2 == 0 else []
            if skews != want:
                bad.append(n)
        return _all(f"unique skew member (m+1..2m 1..m) for even n <= {K}", bad, K, "lengths")

    def even_lengths():
        bad = []
        for n in range(3, K + 1, 2):
            for p in gen_involutions_avoiding_321(n):
                if classify(p).kind == SIMPLE:
                    bad.append(str(p))
        return _all(f"no odd-length simple or inflated simple member, n <= {K}", bad, (K - 1) // 2, "odd lengths")

    def inflations_of_simple():
        lim = min(K, 12)
        sigma = Permutation((3, 5, 1, 6, 2, 4))
        blocks_by_len = {1: [ONE], 2: [Permutation((1, 2)), Permutation((2, 1))]}
        blocks_by_len[3] = [Permutation(v) for v in _all_perms(3)]
        bad, count = [], 0
        for sizes in product((1, 2, 3), repeat=6):
            if sum(sizes) > lim:
                continue
            for blocks in product(*(blocks_by_len[s] for s in sizes)):
                count += 1
                p = inflate(sigma, blocks)
                member = is_involution(p) and avoids_321(p)
                rule = all(b.values == tuple(range(1, len(b) + 1)) for b in blocks) and all(
                    len(blocks[i]) == len(blocks[sigma.values[i] - 1]) for i in range(6)
                )
                if member != rule:
                    bad.append(str(p))
        return _all(f"inflations of 351624 in I(321) iff increasing paired blocks, length <= {lim}", bad, count, "inflations")

    def chain_criterion():
        lim = min(K, 12)
        bad, count = [], 0
        for n in range(1, lim + 1):
            for p in involutions(n):
                count += 1
                if max_chain_increasing(cycle_form(p)) != (not contains_pattern(p, PATTERN_321)):
                    bad.append(str(p))
        return _all(f"increasing max chain iff 321-avoiding, involutions n <= {lim}", bad, count, "involutions")

    def shortcut_321():
        lim = min(K, 9)
        bad, count = [], 0
        for n in range(1, lim + 1):
            for vals in _all_perms(n) if n <= 8 else (p.values for p in involutions(n)):
                count += 1
                if avoids_321(Permutation(vals)) == contains_pattern(Permutation(vals), PATTERN_321):
                    bad.append(vals)
        return _all("linear 321 test agrees with generic containment", bad, count, "permutations")

    def family():
        bad = []
        for k in range(3, 3 + max(1, (K + 6) // 4)):
            s = simple_family(k)
            if not (is_simple(s) and is_involution(s) and avoids_321(s) and len(s) == 4 * k - 6):
                bad.append(k)
        return _all("explicit infinite family is simple, involutive, 321-avoiding", bad, max(1, (K + 6) // 4), "members")

    for fn in (counting_law, doubling, fixes_one_half, generator_vs_filter, first_point, reinflation,
               sum_blocks_involutions, sum_blocks_in_class, skew_unique, even_lengths,
               inflations_of_simple, chain_criterion, shortcut_321, family):
        checks.append(fn)
    return checks


def _all_perms(n: int):
    from itertools import permutations

    return permutations(range(1, n + 1))


# ---------------------------------------------------------------- series


def series_checks(max_n: int, order: int) -> list:
    N = order
    K = min(max_n, 14)

    def residuals():
        out = []
        for system in S.SYSTEMS:
            bad = [name for name, r in S.relation_residual(system, N).items() if not r.is_zero()]
            out.append(_all(f"relation system {system} vanishes through order {N}", bad, len(S.relation_residual(system, N)), "equations"))
        return out

    def central():
        f = S.expand_named("f", N).integers()
        return _eq(f"f_n = C(n, n//2), 1 <= n <= {N}", [comb(n, n // 2) for n in range(1, N + 1)], f[1:])

    def even_odd():
        f, e, w = (S.expand_named(k, N) for k in ("f", "epsilon", "omega"))
        ok = (e - w.shift(1).truncate(N) * 2).is_zero() and (f - e - w).is_zero()
        return _eq(f"epsilon = 2x omega and f = epsilon + omega through order {N}", True, ok)

    def theorem51():
        gamma = S.expand_named("gamma", N).integers()
        delta = S.expand_named("delta", N).integers()
        top = N // 2
        got = [S.inflated_simple_count(n, gamma) for n in range(4, top + 1)]
        want = [delta[2 * n] for n in range(4, top + 1)]
        return _eq(f"double-sum formula equals zeta - gamma, lengths 8..{2 * top}", want, got)

    def recurrence():
        phi = S.expand_named("phi", N).integers()[1:]
        return [
            _eq(f"phi recurrence through order {N}", S.phi_recurrence(N), phi),
            _eq("phi first 17 coefficients", PRINTED["phi"], phi[:17]),
        ]

    def printed_lists():
        out = []
        offsets = {"f": 1, "alpha": 2, "zeta": 6, "gamma": 6, "delta": 8, "f_minus_gamma": 1}
        for name, start in offsets.items():
            want = PRINTED[name]
            got = S.expand_named(name, max(N, start + len(want))).integers()[start : start + len(want)]
            out.append(_eq(f"{name} expansion matches the printed list ({len(want)} terms)", want, got))
        return out

    def integrality():
        bad = []
        for name in S.NAMES:
            try:
                S.expand_named(name, N).integers()
            except S.SeriesError:
                bad.append(name)
        return _all("every named series has integer coefficients", bad, len(S.NAMES), "series")

    def leading():
        got = {name: S.expand_named(name, N).valuation() for name in S.NAMES}
        return _eq("first nonzero index of each named series", S.LEADING_INDEX, got)

    def gamma_routes():
        return _eq("gamma from its radical equals zeta after undoing run inflation", True,
                   (S.gamma_from_radical(N) - S.expand_named("gamma", N)).is_zero())

    def tallies():
        names = ("alpha", "beta", "gamma", "delta", "epsilon", "omega", "f")
        ser = {k: S.expand_named(k, max(K, 1)).integers() for k in names}
        bad = []
        for n in range(1, K + 1):
            t = count_classes(n)
            got = {
                "alpha": t.type12, "beta": t.type21, "gamma": t.simple, "delta": t.inflation_of_simple,
                "epsilon": t.total if n % 2 == 0 else 0, "omega": t.total if n % 2 else 0, "f": t.total,
            }
            for k in names:
                if got[k] != ser[k][n]:
                    bad.append((n, k, got[k], ser[k][n]))
            if t.parts_sum() != t.total:
                bad.append((n, "parts", t.parts_sum(), t.total))
        return _all(f"brute-force class tallies equal series coefficients, n <= {K}", bad, K, "lengths")

    def separable():
        lim = min(max_n, 10)
        counts = [count_separable_intersection(n) for n in range(1, lim + 1)]
        phi = S.expand_named("phi", lim).integers()[1:]
        fmg = S.expand_named("f_minus_gamma", lim).integers()[1:]
        matches = [name for name, seq in (("phi", phi), ("f - gamma", fmg)) if seq == counts]
        if matches == ["phi"]:
            return Check(
                f"|I(321)_n & Av(2413,3142)| for n <= {lim}",
                DOCUMENTED,
                f"f - gamma = {fmg}",
                f"measured {counts}",
                "the intersection is counted by phi, not by f - gamma; the claim that f - gamma "
                "generates it fails from n = 7 (35 vs 33), since inflations of simples are not separable",
            )
        return Check(f"|I(321)_n & Av(2413,3142)| for n <= {lim}", FAIL, f"phi = {phi}", f"measured {counts}",
                     f"matches: {matches or 'neither'}")

    def epsilon_printed():
        printed = S.printed_epsilon(N)
        derived = S.expand_named("epsilon", N)
        const = printed[0]
        if const != 0 and (printed - derived).valuation() == 0:
            return Check(
                "closed form printed for epsilon",
                DOCUMENTED,
                "constant term 0 (no involution of length 0)",
                f"constant term {const}; first terms {printed.integers()[:7]}",
                f"2x f/(1+2x) gives {derived.integers()[:9]}, matching the even-length counts",
            )
        return Check("closed form printed for epsilon", FAIL, "constant term 2 as printed", f"constant term {const}")

    return [residuals, central, even_odd, theorem51, recurrence, printed_lists, integrality, leading,
            gamma_routes, tallies, separable, epsilon_printed]


# ---------------------------------------------------------------- paths


def paths_checks(max_n: int, order: int) -> list:
    K = max_n

    def round_trip_a():
        bad, count = [], 0
        for n in range(2, K + 1, 2):
            for p in _fpf(n):
                count += 1
                path = labelled_motzkin_from_involution(p)
                if not path.is_dyck or involution_from_dyck(path) != p:
                    bad.append(str(p))
        return _all(f"Dyck round trip on fixed-point-free members, n <= {K}", bad, count, "involutions")

    def round_trip_b():
        bad, count = [], 0
        for n in range(2, K + 1, 2):
            for p in _simples_with_21(n):
                count += 1
                s = crossing_sequence(p)
                if involution_from_sequence(s) != p or sequence_from_motzkin(motzkin_from_sequence(s)) != s:
                    bad.append(str(p))
                if n <= 12 and involution_from_sequence_search(s) != p:
                    bad.append(f"search {p}")
        return _all(f"crossing-sequence round trip on simple members, n <= {K}", bad, count, "involutions")

    def bijection_count():
        got, want = [], []
        for n in range(2, K + 1, 2):
            want.append(sum(1 for _ in short_motzkin_paths(n // 2 - 1)))
            got.append(len(_simples_with_21(n)))
        return _eq(f"short Motzkin paths of length n equal simple members of length 2n+2, lengths <= {K}",
                   want, got, f"Riordan prefix {RIORDAN[: len(want)]}")

    def riordan():
        want = RIORDAN[: K // 2]
        got = [sum(1 for _ in short_motzkin_paths(n)) for n in range(len(want))]
        return _eq("short Motzkin path counts are the Riordan numbers", want, got)

    def dyck_criterion():
        lim = min(K, 14)
        bad, count = [], 0
        for n in range(2, lim + 1, 2):
            for p in _fpf(n):
                count += 1
                if is_simple_via_dyck(labelled_motzkin_from_involution(p)) != is_simple(p):
                    bad.append(str(p))
        return _all(f"Dyck-path simplicity test equals interval test, n <= {lim}", bad, count, "involutions")

    def label_criterion():
        lim = min(K, 12)
        bad, count = [], 0
        for n in range(1, lim + 1):
            for p in involutions(n):
                count += 1
                if labels_trivial_and_flats_grounded(p) != (not contains_pattern(p, PATTERN_321)):
                    bad.append(str(p))
                if involution_from_labelled_motzkin(labelled_motzkin_from_involution(p)) != p:
                    bad.append(f"inverse {p}")
        return _all(f"unit labels and level-0 flats iff 321-avoiding, n <= {lim}", bad, count, "involutions")

    def connections():
        lim = min(K, 12)
        bad, count = [], 0
        for n in range(4, lim + 1, 2):
            for p in _fpf(n):
                count += 1
                c = cycle_form(p).transpositions
                cons = plot_connections(p)
                lower = {con.index for con in cons if con.kind == LOWER}
                upper = {con.index for con in cons if con.kind == UPPER}
                for i in range(1, len(c)):
                    if (i in lower) != (c[i][1] == c[i - 1][1] + 1) or (i in upper) != (c[i][0] == c[i - 1][0] + 1):
                        bad.append(str(p))
        return _all(f"connections iff consecutive maxima/minima, n <= {lim}", bad, count, "involutions")

    def symmetric_pairs():
        lim = min(K, 12)
        bad, count = [], 0
        for n in range(2, lim + 1, 2):
            for p in _fpf(n):
                count += 1
                sym = has_symmetric_connection_pair(p)
                if is_simple(p) and sym:
                    bad.append(f"simple {p}")
                if not sym:
                    node = classify(p)
                    if not (is_simple(p) or (node.kind == SUM and is_simple(node.left))):
                        bad.append(f"converse {p}")
        return _all(f"symmetric connection pairs vs simplicity, n <= {lim}", bad, count, "involutions")

    def admissibility():
        bad, count = [], 0
        for n in range(6, K + 1, 2):
            for p in simple_involutions(n):
                count += 1
                if not is_admissible(crossing_sequence(p).values):
                    bad.append(str(p))
        return _all(f"crossing sequences of simple members are admissible, n <= {K}", bad, count, "involutions")

    def components():
        lim = min(K, 12)
        three_parts = Permutation.parse("3516249(11)7(12)8(10)(15)(17)(13)(18)(14)(16)")
        out = [_eq("three-component sum has crossing sequence {131}{131}{131}", "{1,3,1,1,3,1,1,3,1}", str(crossing_sequence(three_parts)))]
        bad, count = [], 0
        for n in range(4, lim + 1, 2):
            for p in _fpf(n):
                if classify(p).kind != SUM or has_symmetric_connection_pair(p):
                    continue
                count += 1
                pieces = split_components(path_from_counts(crossing_sequence(p).values))
                rebuilt = [involution_from_sequence(sequence_from_motzkin(piece)) for piece in pieces]
                if rebuilt != sum_components(p):
                    bad.append(str(p))
        out.append(_all(f"level-0 flat steps separate the simple components, n <= {lim}", bad, count, "sums"))
        return out

    def fixtures():
        lengths = [n for n in FIXTURE_LENGTHS if n <= K]
        bad = [n for n in lengths if not golden_fixture_check(n)]
        return _all("simple involutions equal the bundled listings", bad, len(lengths), "lengths")

    def subsequence_vs_pattern():
        lim = min(K, 14)
        by_len = {n: simple_involutions(n) for n in range(6, lim + 1, 2)}
        r1 = r2 = 0
        first = []
        for n in range(8, lim + 1, 2):
            for s in by_len[n]:
                claimed = {involution_from_sequence(t) for t in simple_patterns_contained(crossing_sequence(s))}
                actual = {q for m in range(6, n, 2) for q in by_len[m] if contains_pattern(s, q)}
                if claimed != actual:
                    r1 += 1
                    first = first or [f"{s} contains {sorted(map(str, actual - claimed))}"]
        for n in range(6, lim - 1, 2):
            for s in by_len[n]:
                claimed = {involution_from_sequence(t) for t in simple_extensions(crossing_sequence(s))}
                actual = {q for q in by_len[n + 2] if contains_pattern(q, s)}
                if claimed != actual:
                    r2 += 1
        status = DOCUMENTED if (r1 or r2) else PASS
        return Check(
            f"admissible subsequences vs contained simple patterns, n <= {lim}",
            status,
            "subsequence test decides pattern containment",
            f"{r1} involutions disagree on contained patterns, {r2} on one-longer extensions",
            first[0] if first else "",
        )

    return [round_trip_a, round_trip_b, bijection_count, riordan, dyck_criterion, label_criterion,
            connections, symmetric_pairs, admissibility, components, fixtures, subsequence_vs_pattern]


def _simples_with_21(n: int) -> list[Permutation]:
    if n == 2:
        return [Permutation((2, 1))]
    return simple_involutions(n)


SUITE_BUILDERS = {"structure": structure_checks, "series": series_checks, "paths": paths_checks}


def run(suite: str = "all", max_n: int = 14, order: int = 40, jobs: int = 1, command: str = "") -> RunReport:
    suites = SUITES if suite == "all" else (suite,)
    tasks = [fn for name in suites for fn in SUITE_BUILDERS[name](max_n, order)]
    start = time.perf_counter()

    def call(fn):
        try:
            res = fn()
        except Exception as exc:  # a crashing check is a failed check
            return [Check(fn.__name__, FAIL, "no exception", repr(exc))]
        return res if isinstance(res, list) else [res]

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(call, tasks))
    else:
        results = [call(fn) for fn in tasks]
    report = RunReport(command or f"verify --suite {suite} --max-n {max_n} --order {order}")
    report.checks = [c for group in results for c in group]
    report.elapsed = time.perf_counter() - start
    return report
