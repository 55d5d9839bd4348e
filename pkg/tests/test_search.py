import itertools
import random

import pytest

from hjinterval.cube import Coloring, Word, apply_symmetry, all_symmetries
from hjinterval.search import (
    EXHAUSTIVE_CAP,
    OUTCOME_FOUND,
    OUTCOME_INCONCLUSIVE,
    SearchReport,
    exhaustive_search,
    local_search,
    render_search_report,
    violation_count,
)

LEAST_AVOIDERS = {
    1: "001",
    2: "001010100",
    3: "001010100001100011110001011",
}


def naive_violations(coloring):
    """Count monochromatic interval lines straight from the definition."""
    n = coloring.n
    total = 0
    for lo in range(1, n + 1):
        for hi in range(lo, n + 1):
            outside = [i for i in range(1, n + 1) if i < lo or i > hi]
            for fixed in itertools.product((1, 2, 3), repeat=len(outside)):
                colors = set()
                for letter in (1, 2, 3):
                    letters = [0] * n
                    for i in range(lo, hi + 1):
                        letters[i - 1] = letter
                    for pos, val in zip(outside, fixed):
                        letters[pos - 1] = val
                    colors.add(coloring.get(Word(tuple(letters))))
                if len(colors) == 1:
                    total += 1
    return total


def test_violation_count_constant():
    # every interval line is monochromatic under a constant colouring
    assert violation_count(Coloring.constant(1, 0)) == 1
    assert violation_count(Coloring.constant(2, 1)) == 7
    assert violation_count(Coloring.constant(3, 0)) == 34


def test_violation_count_avoiders():
    for n, bits in LEAST_AVOIDERS.items():
        c = Coloring.from_bits(n, [int(b) for b in bits])
        assert violation_count(c) == 0


def test_violation_count_matches_naive_scan():
    rng = random.Random(99)
    for n in (1, 2, 3):
        for _ in range(25):
            c = Coloring.random(n, seed=rng.getrandbits(32))
            assert violation_count(c) == naive_violations(c)


def test_exhaustive_n1():
    report = exhaustive_search(1)
    assert report.outcome == OUTCOME_FOUND
    assert report.coloring.bitstring == LEAST_AVOIDERS[1]
    assert report.violations == 0
    assert report.stats["nodes"] == 4


def test_exhaustive_n2():
    report = exhaustive_search(2)
    assert report.outcome == OUTCOME_FOUND
    assert report.coloring.bitstring == LEAST_AVOIDERS[2]
    assert report.stats["nodes"] == 20


def test_exhaustive_n3():
    report = exhaustive_search(3)
    assert report.outcome == OUTCOME_FOUND
    assert report.coloring.bitstring == LEAST_AVOIDERS[3]
    assert violation_count(report.coloring) == 0


def test_exhaustive_returns_least_avoider():
    # brute-force oracle: scan all colourings of [3]^2 in rank order
    for mask in range(2**9):
        bits = [(mask >> (8 - i)) & 1 for i in range(9)]
        c = Coloring.from_bits(2, bits)
        if violation_count(c) == 0:
            first = c
            break
    assert exhaustive_search(2).coloring == first


def test_exhaustive_symmetry_flag_changes_nothing():
    for n in (1, 2, 3):
        a = exhaustive_search(n, use_symmetry=True)
        b = exhaustive_search(n, use_symmetry=False)
        assert a.coloring == b.coloring
        assert b.stats["symmetry_prunes"] == 0
        assert a.stats["nodes"] <= b.stats["nodes"]


def test_exhaustive_cap():
    assert EXHAUSTIVE_CAP == 3
    with pytest.raises(ValueError):
        exhaustive_search(EXHAUSTIVE_CAP + 1)
    with pytest.raises(ValueError):
        exhaustive_search(2, cap=1)


def test_exhaustive_rejects_bad_n():
    with pytest.raises(ValueError):
        exhaustive_search(0)


def test_avoider_orbit_still_avoids():
    c = exhaustive_search(3).coloring
    for g in all_symmetries():
        assert violation_count(apply_symmetry(c, g)) == 0


def test_report_rendering_is_stable():
    report = exhaustive_search(2)
    text = render_search_report(report)
    assert text == render_search_report(report)
    assert text.startswith("mode=exhaustive\nn=2\noutcome=avoider-found\n")
    assert "coloring=001010100" in text
    assert "nodes=20" in text


def test_report_semantic_fields_ignore_timing():
    a = exhaustive_search(2)
    b = exhaustive_search(2)
    assert a.semantic_fields() == b.semantic_fields()
    assert "wall_time_s" not in str(a.semantic_fields())


def test_local_search_finds_small_avoiders():
    for n in (1, 2, 3):
        report = local_search(n, seed=0, budget=20000)
        assert report.outcome == OUTCOME_FOUND
        assert violation_count(report.coloring) == 0
        assert report.violations == 0


def test_local_search_n4():
    report = local_search(4, seed=7, budget=40000)
    assert report.outcome == OUTCOME_FOUND
    assert violation_count(report.coloring) == 0


def test_local_search_deterministic():
    a = local_search(3, seed=42, budget=5000)
    b = local_search(3, seed=42, budget=5000)
    assert a.semantic_fields() == b.semantic_fields()
    assert a.coloring == b.coloring


def test_local_search_jobs_invariant():
    a = local_search(3, seed=9, budget=8000, jobs=1)
    b = local_search(3, seed=9, budget=8000, jobs=2)
    assert a.semantic_fields() == b.semantic_fields()


def test_local_search_gives_up_honestly():
    report = local_search(4, seed=0, budget=40)
    assert report.outcome == OUTCOME_INCONCLUSIVE
    # the best colouring seen is reported along with its violation count
    assert report.violations > 0
    assert violation_count(report.coloring) == report.violations


def test_local_search_rejects_bad_budget():
    with pytest.raises(ValueError):
        local_search(2, seed=0, budget=0)


def test_outcome_constants():
    assert OUTCOME_FOUND == "avoider-found"
    assert OUTCOME_INCONCLUSIVE == "inconclusive"


def test_search_report_is_plain_data():
    report = SearchReport(
        mode="local",
        n=2,
        outcome=OUTCOME_INCONCLUSIVE,
        violations=3,
        seed=1,
        budget=10,
        stats={"flips": 10},
    )
    text = render_search_report(report)
    assert "violations=3" in text
    assert "coloring=-" in text
