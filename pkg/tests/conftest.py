from functools import lru_cache

import pytest

from hookrec.recurrence import fit_recurrence
from hookrec.sequences import SequenceRecord, power_sums

PAPER_KEYS = [(2, 1, 1), (2, 1, 2), (2, 2, 1), (2, 2, 2)]


def ascending_partitions(n):
    """Kelleher's ascending-composition generator; independent of the package's enumerator."""
    if n == 0:
        yield ()
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        l = k + 1
        while x <= y:
            a[k] = x
            a[l] = y
            yield tuple(sorted(a[: k + 2], reverse=True))
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield tuple(sorted(a[: k + 1], reverse=True))


def brute_in_hook(parts, k, l):
    padded = list(parts) + [0] * (k + 1)
    return padded[k] <= l


@lru_cache(maxsize=None)
def hook_terms(k, l, n_max=79):
    return power_sums(k, l, [1, 2], n_max)


def paper_series(key, n_max=79) -> SequenceRecord:
    k, l, z = key
    return SequenceRecord(k, l, z, 0, hook_terms(k, l)[z][: n_max + 1])


@lru_cache(maxsize=None)
def paper_operator(key):
    return fit_recurrence(paper_series(key).head(60))


@pytest.fixture(params=PAPER_KEYS, ids=lambda k: "k{}l{}z{}".format(*k))
def paper_key(request):
    return request.param


# --- acceptance reporting ---

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def pytest_runtest_logreport(report):
    marker = report.__dict__.get("criterion")
    if marker is None or report.when == "teardown":
        return
    number, title = marker
    ok = ACCEPTANCE.get(number, (title, True))[1] and report.passed
    if report.when == "call" or not report.passed:
        ACCEPTANCE[number] = (title, ok)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is not None:
        outcome.get_result().criterion = tuple(marker.args)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
