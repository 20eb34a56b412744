from __future__ import annotations

from math import gcd

import pytest
from hypothesis import strategies as st

from iitaka.baskets import Basket, BasketEntry

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, text): acceptance criterion n")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when not in ("setup", "call"):
        return
    n, text = marker.args
    if rep.when == "call" or rep.outcome != "passed":
        prev = _ACCEPTANCE.get(n)
        failed = rep.outcome != "passed" or (prev is not None and prev[0] == "FAIL")
        _ACCEPTANCE[n] = ("FAIL" if failed else "PASS", text)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        status, text = _ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {status}  {text}")


def coprime_pairs(max_r: int) -> list[tuple[int, int]]:
    return [(r, b) for r in range(2, max_r + 1) for b in range(1, r) if gcd(r, b) == 1]


@st.composite
def baskets(draw, max_r: int = 9, max_entries: int = 6, chi=st.integers(0, 2)):
    pairs = draw(st.lists(st.sampled_from(coprime_pairs(max_r)), max_size=max_entries))
    mults = draw(st.lists(st.integers(1, 4), min_size=len(pairs), max_size=len(pairs)))
    entries = tuple(BasketEntry(r, b, k) for (r, b), k in zip(pairs, mults))
    return Basket(entries, chi_X=draw(chi))


B_STAR = "2,1x8;3,1x6;7,1;7,2;7,3"
