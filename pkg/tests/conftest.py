from pathlib import Path

import pytest

from strongcuts import build_ldg, extract_cone, parse_edgelist

DATA = Path(__file__).parent / "data"

# Line names of data/seven_lines.txt, indexed by cone line id.
LINE_NAMES = "pqtuvwx"


def load(name):
    return parse_edgelist((DATA / name).read_bytes())


@pytest.fixture
def diamond():
    return load("diamond.txt")


@pytest.fixture
def chain():
    return load("chain.txt")


@pytest.fixture
def diamond_cone(diamond):
    return extract_cone(diamond, 3)


@pytest.fixture
def chain_cone(chain):
    return extract_cone(chain, 2)


@pytest.fixture
def seven_lines():
    dag = load("seven_lines.txt")
    cone = extract_cone(dag, 6)
    return dag, cone, build_ldg(cone)


# Acceptance criteria record a one-line verdict here; printed after the run.
ACCEPTANCE_RESULTS: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(line)
