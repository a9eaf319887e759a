import pytest

from vecprod.doubling import construct_standard
from vecprod.fields import GF, QQ

F7 = GF(7)


@pytest.fixture
def cross():
    """The classical cross product over Q (norms 1, 1)."""
    return construct_standard(QQ, [1, 1])[0]


@pytest.fixture(scope="session")
def octo_q():
    return construct_standard(QQ, [1, 1, 1])


@pytest.fixture(scope="session")
def octo_f7():
    return construct_standard(F7, [1, 1, 1])


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def verdict():
    """Record and print one PASS/FAIL line for an acceptance criterion."""

    def record(n: int, ok: bool, detail: str):
        ACCEPTANCE[n] = (ok, detail)
        print(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}")
