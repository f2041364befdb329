import itertools
import math
import re
import time

import numpy as np
import pytest

from wmgsynth.words import Word

SUITE_BUDGET_SECONDS = 300
_criteria: dict[int, tuple[str, str]] = {}
_session_start = [0.0]


def all_words(max_len: int, letters: str = "abcd"):
    for n in range(1, max_len + 1):
        for tup in itertools.product(letters, repeat=n):
            yield Word(tup)


def multiset_permutations(counts: dict[str, int]):
    """Distinct arrangements of a multiset, in lexicographic order."""
    labels = sorted(counts)
    total = sum(counts.values())
    left = dict(counts)
    out: list[str] = []

    def rec():
        if len(out) == total:
            yield tuple(out)
            return
        for c in labels:
            if left[c]:
                left[c] -= 1
                out.append(c)
                yield from rec()
                out.pop()
                left[c] += 1

    yield from rec()


def random_word(rng: np.random.Generator, max_len: int, letters: str = "abcd") -> Word:
    k = int(rng.integers(1, len(letters) + 1))
    n = int(rng.integers(1, max_len + 1))
    return Word(tuple(rng.choice(list(letters[:k]), size=n)))


def random_prime_word(rng: np.random.Generator, max_len: int, letters: str = "abcd") -> Word:
    while True:
        w = random_word(rng, max_len, letters)
        if math.gcd(*(w.labels.count(c) for c in w.alphabet)) == 1:
            return w


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_sessionstart(session):
    _session_start[0] = time.perf_counter()


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d+)_(\w+)", report.nodeid)
    if not m:
        return
    n = int(m.group(1))
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria[n] = (m.group(2), "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    elapsed = time.perf_counter() - _session_start[0]
    if _criteria:
        terminalreporter.section("acceptance criteria")
        for n in sorted(_criteria):
            name, status = _criteria[n]
            terminalreporter.write_line(f"criterion {n:2d} {status}  {name}")
    terminalreporter.write_line(f"suite wall time {elapsed:.1f}s (budget {SUITE_BUDGET_SECONDS}s)")


def pytest_sessionfinish(session, exitstatus):
    elapsed = time.perf_counter() - _session_start[0]
    if _criteria and elapsed > SUITE_BUDGET_SECONDS and exitstatus == 0:
        session.exitstatus = 1
