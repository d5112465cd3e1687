"""The twelve acceptance criteria, each with its time limit.

Every criterion prints one PASS/FAIL line; the lines are also repeated in the
pytest terminal summary. Run this file directly to see only those lines.
"""

import subprocess
import sys
import time

import pytest

from qpows import checks

from goldens import JSON, TEXT

RECORDS: list = []


def _record(number: int, title: str, passed: bool, seconds: float, limit: float, detail: str = ""):
    ok = passed and seconds < limit
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d} {title}: {seconds:.2f}s (limit {limit:g}s)"
    if detail:
        line += f" [{detail}]"
    RECORDS.append(line)
    print(line)
    return ok


def _suites(number: int, title: str, limit: float, *suites):
    start = time.perf_counter()
    results = [s() for s in suites]
    seconds = time.perf_counter() - start
    failed = [r for r in results if not r.passed]
    checked = sum(r.checked for r in results)
    detail = f"{checked} identities" if not failed else "; ".join(f"{r.name}: {r.detail}" for r in failed)
    ok = _record(number, title, not failed, seconds, limit, detail)
    assert not failed, detail
    assert ok, f"took {seconds:.2f}s, limit {limit}s"


def _qpows(*argv):
    return subprocess.run([sys.executable, "-m", "qpows.cli", *argv], capture_output=True, text=True)


def test_criterion_01_golden_identities():
    _suites(1, "golden identities", 1, checks.golden_identities)


def test_criterion_02_p_to_f_golden():
    _suites(2, "P to F golden", 1, checks.golden_p_to_f)


def test_criterion_03_ncqsym_goldens():
    _suites(3, "NCQSym goldens", 1, checks.golden_ncqsym)


def test_criterion_04_dd_fillings_oracle():
    _suites(4, "DD fillings vs interval, n <= 6", 10, lambda: checks.dd_fillings_oracle(6))


def test_criterion_05_p_to_f_theorem():
    _suites(5, "P to F theorem, n <= 7, all integer orders", 60, lambda: checks.p_to_f_theorem(7))


def test_criterion_06_hopf():
    _suites(6, "Hopf suite", 120, lambda: checks.hopf_suite(6, 5, 6))


def test_criterion_07_duality():
    _suites(7, "duality A = B^T", 30, lambda: checks.duality_suite(7, 6))


def test_criterion_08_refinement():
    _suites(8, "power sum refinement", 60, lambda: checks.refinement_suite(6, 5))


def test_criterion_09_projection():
    _suites(9, "projection theorems, n <= 5", 60, lambda: checks.projection_suite(5))


def test_criterion_10_involutions():
    _suites(10, "involutions and complements", 30, lambda: checks.involution_suite(6, 5))


def test_criterion_11_fqsym():
    _suites(11, "FQSym products and coproducts, n <= 4", 10, lambda: checks.fqsym_suite(4))


def test_criterion_12_cli():
    start = time.perf_counter()
    problems = []
    for argv, want in TEXT + JSON:
        proc = _qpows(*argv)
        if proc.returncode != 0 or proc.stdout != want + "\n":
            problems.append(f"{' '.join(argv)!r} gave {proc.stdout!r}")
    proc = _qpows("selftest", "--max-degree", "5")
    if proc.returncode != 0:
        problems.append("selftest failed: " + proc.stdout.strip().splitlines()[-1])
    seconds = time.perf_counter() - start
    detail = f"{len(TEXT) + len(JSON)} goldens byte-exact, selftest ok" if not problems else problems[0]
    ok = _record(12, "CLI goldens and selftest", not problems, seconds, 120, detail)
    assert not problems, "\n".join(problems)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
