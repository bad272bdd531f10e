"""Acceptance gate: one test per numbered criterion.

Each test runs the corresponding verification sweep at its stated bound
and prints a single PASS/FAIL line (run pytest with -s to stream them).
All equalities are exact integer identities; the only tolerances are
the two wall-clock budgets, asserted as stated.
"""

import time

from grassgw.verify import SUITES


def _run(criterion, description, suites, time_limit=None):
    t0 = time.time()
    reports = [fn() for fn in suites]
    elapsed = time.time() - t0
    checked = sum(r.checked for r in reports)
    failures = [f for r in reports for f in r.failures]
    ok = not failures and (time_limit is None or elapsed <= time_limit)
    status = "PASS" if ok else "FAIL"
    budget = f", budget {time_limit:.0f}s" if time_limit else ""
    print(f"[{status}] criterion {criterion:2d}: {description} "
          f"({checked} checks, {elapsed:.1f}s{budget})")
    assert not failures, failures[:20]
    if time_limit is not None:
        assert elapsed <= time_limit, f"took {elapsed:.1f}s, budget {time_limit}s"


def test_criterion_01_counting():
    _run(1, "frame and symmetric counts vs closed forms, k,l <= 10 "
            "(odd-by-odd frames have no symmetric members)",
         [SUITES["counts"]], time_limit=5.0)


def test_criterion_02_recurrences():
    _run(2, "R and S recurrences, k,l <= 12", [SUITES["recurrences"]])


def test_criterion_03_lr_engine():
    _run(3, "LR symmetry on 4x4, Pieri agreement, dimension sums",
         [SUITES["lr"]], time_limit=30.0)


def test_criterion_04_unit_coefficient_lemma():
    _run(4, "unit LR coefficient for rotated complements, n <= 8",
         [SUITES["lr-lemma"]])


def test_criterion_05_bott_engine():
    _run(5, "line-bundle cohomology vs binomials; end vanishing, n <= 7",
         [SUITES["bott"], SUITES["end-vanishing"]])


def test_criterion_06_exceptional_collection():
    _run(6, "semiorthogonality and mutation-step cohomology, n <= 6",
         [SUITES["exceptional"], SUITES["mutation-vanishing"]])


def test_criterion_07_pairing():
    _run(7, "pairing parity constant per frame and matching the rule, "
            "sides <= 8", [SUITES["pairing"]])


def test_criterion_08_split_fibration():
    _run(8, "split fibration multiset identity, GW/L/W/K, n <= 10, "
            "r in -3..3", [SUITES["split-fibration"]])


def test_criterion_09_witt_crosscheck():
    _run(9, "even-diagram Witt groups match, d,e <= 6; class counts <= 8",
         [SUITES["witt-crosscheck"]])


def test_criterion_10_buffalo_check():
    _run(10, "beta closed forms, K-multiplicities and center totals",
         [SUITES["beta"]])


def test_criterion_11_projective_specialization():
    _run(11, "k = 1 column reproduces the projective-space formula, n <= 12",
         [SUITES["projective"]])
