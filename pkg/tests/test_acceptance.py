"""
Exit criteria, each run at its stated tolerance (all exact). A summary
line per criterion is printed at the end of the pytest run.
"""

import math
import subprocess
import sys
import time

import pytest

from ocycles import core, harness
from ocycles.core import MultisetSpec
from ocycles.engine import (
    InfeasibleError,
    assemble_ocycle,
    build_digraph,
    euler_tour,
    existence_predicate,
    verify_ocycle,
    weak_components,
)

C1 = "C1 permutation theorem sweep, 2<=n<=7"
C2 = "C2 no ucycle for permutations, s=n-1"
C3 = "C3 juggling theorem sweep, 2<=n<=5, 1<=b<=3"
C4 = "C4 surjective strings sweep, 3<=n<=6"
C5 = "C5 k-permutation sweep, 3<=n<=6"
C6 = "C6 lemma suite"
C7 = "C7 siteswap 015 / 105"
C8 = "C8 deterministic gen/check output"


def feasibility(objects, s):
    g = build_digraph(objects, s)
    try:
        tour = euler_tour(g)
    except InfeasibleError as exc:
        return False, exc, g
    return True, assemble_ocycle(tour, s), g


@pytest.mark.parametrize("n", range(2, 8))
def test_c1_permutation_sweep(n, criterion):
    start = time.perf_counter()
    objects = list(core.enumerate_multiset_permutations(MultisetSpec.distinct(n)))
    assert len(objects) == math.factorial(n)
    problems = []
    for s in range(1, n):
        ok, result, _ = feasibility(objects, s)
        if ok != existence_predicate(n, s):
            problems.append(f"s={s}: feasible={ok}, predicted={existence_predicate(n, s)}")
        if ok:
            report = verify_ocycle(result, objects, s)
            if not report.passed or len(result.objects) != math.factorial(n):
                problems.append(f"s={s}: cycle failed verification")
    elapsed = time.perf_counter() - start
    criterion(C1, f"n={n}", not problems and elapsed < 60, "; ".join(problems))
    assert not problems
    assert elapsed < 60


@pytest.mark.parametrize("n", range(2, 8))
def test_c2_no_ucycle(n, criterion):
    objects = list(core.enumerate_multiset_permutations(MultisetSpec.distinct(n)))
    ok, result, g = feasibility(objects, n - 1)
    comps = len(weak_components(g))
    good = not ok and result.reason == "disconnected" and comps >= 2
    criterion(C2, f"n={n}", good, f"feasible={ok}, weak components={comps}")
    assert not ok, f"s={n - 1} has an Euler tour"
    assert result.reason == "disconnected" and comps >= 2


@pytest.mark.parametrize("n", range(2, 6))
def test_c3_juggling_sweep(n, criterion):
    start = time.perf_counter()
    problems = []
    for b in range(1, 4):
        objects = list(core.enumerate_juggling_sequences(n, b))
        for s in range(1, n):
            predicted = existence_predicate(n, s)
            ok, result, g = feasibility(objects, s)
            if ok != predicted:
                problems.append(f"b={b} s={s}: feasible={ok}, predicted={predicted}")
            if ok and not verify_ocycle(result, objects, s).passed:
                problems.append(f"b={b} s={s}: cycle failed verification")
            if not predicted:
                d = math.gcd(n, s)
                t = [0] * n
                t[0], t[d] = d, n - d
                t = tuple(t)
                where = {v: i for i, c in enumerate(weak_components(g)) for v in c}
                if not core.validate_juggling(t) or core.ball_count(t) != 1:
                    problems.append(f"b={b} s={s}: witness {t} invalid or not one ball")
                elif where[t[:s]] == where[(0,) * s]:
                    problems.append(f"b={b} s={s}: witness prefix connected to 0^s")
    elapsed = time.perf_counter() - start
    criterion(C3, f"n={n}", not problems and elapsed < 120, "; ".join(problems))
    assert not problems
    assert elapsed < 120


@pytest.mark.parametrize("n", range(3, 7))
def test_c4_strings_sweep(n, criterion):
    problems = []
    for h in range(1, n):
        objects = list(core.enumerate_surjective_strings(n, h))
        expected = sum((-1) ** j * math.comb(h, j) * (h - j) ** n for j in range(h + 1))
        if len(objects) != expected:
            problems.append(f"h={h}: {len(objects)} strings, inclusion-exclusion gives {expected}")
        for s in range(1, n - 1):
            ok, result, _ = feasibility(objects, s)
            if not ok or not verify_ocycle(result, objects, s).passed:
                problems.append(f"h={h} s={s}: no verified cycle")
    criterion(C4, f"n={n}", not problems, "; ".join(problems))
    assert not problems


@pytest.mark.parametrize("n", range(3, 7))
def test_c5_kperm_sweep(n, criterion):
    problems = []
    for k in range(2, n):
        objects = list(core.enumerate_k_permutations(n, k))
        if len(objects) != math.factorial(n) // math.factorial(n - k):
            problems.append(f"k={k}: count {len(objects)}")
        for s in range(1, k):
            ok, result, _ = feasibility(objects, s)
            if not ok or not verify_ocycle(result, objects, s).passed:
                problems.append(f"k={k} s={s}: no verified cycle")
    criterion(C5, f"n={n}", not problems, "; ".join(problems))
    assert not problems


def test_c6_lemma_suite(criterion):
    report = harness.lemma_property_suite(trials=1000, n_max=8, seed=2014, exhaustive_n=4, reach_n=12)
    kinds = {f.kind for f in report.findings}
    criterion(C6, "exhaustive n<=4 + 1000 random n<=8", report.passed, ", ".join(sorted(kinds)))
    assert report.passed, report.findings[:5]


def test_c7_paper_instances(criterion):
    good = (core.validate_juggling((0, 1, 5)) and core.ball_count((0, 1, 5)) == 2
            and not core.validate_juggling((1, 0, 5)))
    out = subprocess.run([sys.executable, "-m", "ocycles", "siteswap", "0", "1", "5"],
                         capture_output=True, text=True).stdout
    bad = subprocess.run([sys.executable, "-m", "ocycles", "siteswap", "1", "0", "5"],
                         capture_output=True, text=True).stdout
    good = good and "valid: yes" in out and "balls: 2" in out and "valid: no" in bad
    criterion(C7, "015 valid b=2, 105 invalid", good)
    assert good


DETERMINISM_COMMANDS = [
    ["gen", "--family", "perms", "--n", "5", "--s", "2", "--expand"],
    ["gen", "--family", "juggling", "--n", "4", "--b", "2", "--s", "1", "--format", "json"],
    ["gen", "--family", "surjections", "--n", "5", "--h", "3", "--s", "2"],
    ["gen", "--family", "perms", "--n", "4", "--s", "2"],
    ["check", "all"],
    ["check", "lemmas", "--caps", "trials=500", "--seed", "11"],
    ["diagram", "0", "1", "5", "--format", "svg"],
]


@pytest.mark.parametrize("argv", DETERMINISM_COMMANDS, ids=lambda a: " ".join(a[:3]))
def test_c8_determinism(argv, criterion):
    runs = [subprocess.run([sys.executable, "-m", "ocycles", *argv], capture_output=True)
            for _ in range(2)]
    same = runs[0].stdout == runs[1].stdout and runs[0].stderr == runs[1].stderr
    same = same and runs[0].returncode == runs[1].returncode and bool(runs[0].stdout or runs[0].stderr)
    criterion(C8, " ".join(argv), same)
    assert same
