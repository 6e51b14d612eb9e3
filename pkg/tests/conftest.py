"""Shared pytest fixtures for all tests."""

from pathlib import Path

import pytest

from aspcore import BruteForceBackend, SearchBackend
from config.settings import Settings, reset_settings
from grounder import ground_program
from sortcheck import check_source

CORPUS = Path(__file__).parent / "corpus"
GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch):
    """Run every test against the test environment with default caps."""
    for name in ("ATOM_CAP", "CANDIDATE_CAP", "SOLVER_PATH", "LOG_FILE", "LOG_LEVEL"):
        monkeypatch.delenv(f"SPARC_{name}", raising=False)
    monkeypatch.setenv("SPARC_ENVIRONMENT", "test")
    reset_settings()
    yield
    reset_settings()


@pytest.fixture(scope="session")
def test_settings():
    """Test settings with safe defaults."""
    return Settings(
        ATOM_CAP=10_000,
        CANDIDATE_CAP=100_000,
        LOG_LEVEL="DEBUG",
        ENVIRONMENT="test",
    )


@pytest.fixture
def corpus_path():
    """Path of a program in tests/corpus."""
    return lambda name: CORPUS / f"{name}.sp"


@pytest.fixture
def golden():
    """Text of a golden file."""
    return lambda name: (GOLDEN / name).read_text(encoding="utf-8")


@pytest.fixture
def checked():
    """Check a corpus program by name."""

    def load(name: str):
        path = CORPUS / f"{name}.sp"
        return check_source(path.read_text(encoding="utf-8"), str(path))

    return load


@pytest.fixture
def grounded(checked):
    """Checked corpus program and its sort-respecting grounding."""

    def load(name: str):
        program = checked(name)
        return program, ground_program(program.program, program.interpretation, program.declarations)

    return load


@pytest.fixture
def search_backend():
    return SearchBackend()


@pytest.fixture
def oracle_backend():
    return BruteForceBackend()


def literal_strings(answer) -> set[str]:
    """Answer set as a set of printed literals."""
    return {str(lit) for lit in answer.literals}
