from __future__ import annotations

from functools import lru_cache
from pathlib import Path

import pytest

from bulkcor import io
from bulkcor.rep import pims, wedderburn

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Frobenius fixtures shipped for each Hopf algebra, the unit first
FROBENIUS = {
    "d_z2": ["trivial_frob", "d_z2_end_s1x2"],
    "d_sweedler": ["trivial_frob", "d_sweedler_end_s1x2", "d_sweedler_end_s0"],
    "uq_sl2_3": ["trivial_frob", "uq_sl2_3_end_s1"],
    "d_s3": ["trivial_frob", "d_s3_end_s2"],
}
UNNORMALIZED = ("d_z2", "d_z2_end_s1x2_unnormalized")


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.json"


@lru_cache(maxsize=None)
def hopf(name: str):
    return io.load_hopf(fixture_path(name))


@lru_cache(maxsize=None)
def frob(hopf_name: str, name: str):
    return io.load_frobenius(fixture_path(name), hopf(hopf_name), fixture_path(hopf_name))


@lru_cache(maxsize=None)
def wd(name: str):
    return wedderburn(hopf(name))


@lru_cache(maxsize=None)
def projectives(name: str):
    return tuple(pims(hopf(name), wd(name)))


@pytest.fixture(scope="session")
def dz2():
    return hopf("d_z2")


@pytest.fixture(scope="session")
def dh4():
    return hopf("d_sweedler")


# acceptance summary ---------------------------------------------------------------------

_CRITERIA: dict[int, dict] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    report = outcome.get_result()
    number, title = marker.args
    entry = _CRITERIA.setdefault(number, {"title": title, "passed": 0, "failed": []})
    if report.failed:
        entry["failed"].append(item.name)
    elif report.when == "call" and report.passed:
        entry["passed"] += 1
    for key, value in item.user_properties:
        if key == "note":
            entry.setdefault("notes", []).append(value)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        entry = _CRITERIA[number]
        ok = not entry["failed"] and entry["passed"] > 0
        line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {entry['title']}"
        if entry["failed"]:
            line += f"  (failed: {', '.join(entry['failed'])})"
        terminalreporter.write_line(line)
        for note in dict.fromkeys(entry.get("notes", [])):
            terminalreporter.write_line(f"    note: {note}")
