from pathlib import Path

import pytest

from mtutte import Perspective, identity_perspective, matroid_from_bases, matroid_from_circuits

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"
GOLDEN = Path(__file__).resolve().parent / "golden"

P2_M_CIRCUITS = ["123"]
P2_MPRIME_CIRCUITS = ["24", "35", "123", "125", "134", "145"]


def make_m1():
    return matroid_from_bases("1234", ["13", "14", "23", "24", "34"])


def make_p2():
    return Perspective(
        matroid_from_circuits("12345", P2_M_CIRCUITS),
        matroid_from_circuits("12345", P2_MPRIME_CIRCUITS),
    )


@pytest.fixture(scope="session")
def m1():
    return make_m1()


@pytest.fixture(scope="session")
def id_m1(m1):
    return identity_perspective(m1)


@pytest.fixture(scope="session")
def p2():
    return make_p2()


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
