import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from expdomain.dsl import parse_spec  # noqa: E402
from expdomain.model import load_model  # noqa: E402

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


@pytest.fixture(scope="session")
def corpus_dir() -> Path:
    return CORPUS


def _model(name):
    return load_model(parse_spec((CORPUS / name).read_text(encoding="utf-8")))


@pytest.fixture
def animals():
    return _model("animals.exd")


@pytest.fixture
def sierpinski():
    return _model("sierpinski.exd")


@pytest.fixture
def decidable():
    return _model("decidable.exd")


@pytest.fixture
def interval():
    return _model("interval.exd")


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, detail = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
