from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from dpverify.exactalg import field_cyclotomic

settings.register_profile("default", deadline=None, derandomize=True)
settings.load_profile("default")

small_fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))


def elements(field, size=5):
    """Strategy for elements of a number field with small rational coordinates."""
    return st.lists(small_fractions, min_size=field.degree, max_size=field.degree).map(
        field.from_coeffs)


@pytest.fixture(scope="session")
def q3():
    return field_cyclotomic(3)


@pytest.fixture(scope="session")
def q12():
    return field_cyclotomic(12)


CRITERIA = {
    1: "catalog integrity",
    2: "superrigidity split and table columns",
    3: "invariant-line orbit tables",
    4: "explicit involutions",
    5: "translation laws",
    6: "non-torsion certificates",
    7: "normalizers",
    8: "property suites",
}
_outcomes: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion the test belongs to")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    rep = (yield).get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _outcomes.setdefault(mark.args[0], []).append((item.name, rep.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_outcomes):
        runs = _outcomes[n]
        bad = [name for name, outcome in runs if outcome != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {n} ({CRITERIA.get(n, '?')}): {verdict}, {len(runs) - len(bad)}/{len(runs)} checks"
        if bad:
            line += " [failed: " + ", ".join(bad) + "]"
        terminalreporter.write_line(line)
