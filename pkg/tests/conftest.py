import os

import pytest
from hypothesis import settings

from pfk.generators import petersen, remark1_family

settings.register_profile("ci", max_examples=200, deadline=None)
settings.register_profile("dev", max_examples=50, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture(scope="session")
def pet():
    return petersen()


@pytest.fixture(scope="session")
def rem2():
    return remark1_family(2)


@pytest.fixture(scope="session")
def rem4():
    return remark1_family(4)


ACCEPTANCE_LINES: list[str] = []


class Criterion:
    """Record one PASS/FAIL line per acceptance check.

    ``check`` asserts immediately; ``soft`` records and defers to ``finish``
    so sibling checks still report.
    """

    def __init__(self):
        self.failed: list[str] = []

    def soft(self, label: str, ok: bool, detail: str = "") -> None:
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
        if not ok:
            self.failed.append(f"{label}: {detail}")

    def __call__(self, label: str, ok: bool, detail: str = "") -> None:
        self.soft(label, ok, detail)
        assert ok, f"{label}: {detail}"

    def finish(self) -> None:
        assert not self.failed, "; ".join(self.failed)


@pytest.fixture
def criterion():
    return Criterion()


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
