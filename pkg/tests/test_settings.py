"""Tests for settings validation."""

import pytest
from pydantic import ValidationError

from config.settings import Settings, get_settings, reset_settings, settings
from utils.exceptions import InvalidSettingsError


class TestSettingsValidation:
    """Test settings validation logic."""

    def test_defaults(self):
        s = Settings()

        assert s.ATOM_CAP == 100_000
        assert s.CANDIDATE_CAP == 2**22
        assert s.ORACLE_LITERAL_LIMIT == 20
        assert s.SOLVER_PATH is None
        assert s.BENCH_MAX_RETRIES == 10
        assert s.LOG_FILE is None

    def test_valid_settings(self):
        s = Settings(ATOM_CAP=50, CANDIDATE_CAP=1000, LOG_LEVEL="DEBUG", ENVIRONMENT="production")

        assert s.ATOM_CAP == 50
        assert s.CANDIDATE_CAP == 1000
        assert s.LOG_LEVEL == "DEBUG"
        assert s.ENVIRONMENT == "production"

    def test_caps_must_be_positive(self):
        with pytest.raises(ValidationError):
            Settings(ATOM_CAP=0)

        with pytest.raises(ValidationError):
            Settings(CANDIDATE_CAP=-1)

    def test_oracle_limit_range(self):
        with pytest.raises(ValidationError):
            Settings(ORACLE_LITERAL_LIMIT=25)

        assert Settings(ORACLE_LITERAL_LIMIT=24).ORACLE_LITERAL_LIMIT == 24

    def test_bench_retries_range(self):
        with pytest.raises(ValidationError):
            Settings(BENCH_MAX_RETRIES=0)

        with pytest.raises(ValidationError):
            Settings(BENCH_MAX_RETRIES=1001)

    def test_log_level_validation_enum(self):
        with pytest.raises(ValidationError):
            Settings(LOG_LEVEL="INVALID")

        for level in ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]:
            assert Settings(LOG_LEVEL=level).LOG_LEVEL == level

    def test_environment_validation_enum(self):
        with pytest.raises(ValidationError):
            Settings(ENVIRONMENT="staging")

    def test_solver_path_cannot_be_directory(self, tmp_path):
        with pytest.raises((ValidationError, InvalidSettingsError), match="directory"):
            Settings(SOLVER_PATH=str(tmp_path))

    def test_solver_path_accepts_missing_file(self, tmp_path):
        path = str(tmp_path / "dlv")
        assert Settings(SOLVER_PATH=path).SOLVER_PATH == path

    def test_log_file_parent_must_exist(self, tmp_path):
        with pytest.raises((ValidationError, InvalidSettingsError), match="does not exist"):
            Settings(LOG_FILE=str(tmp_path / "missing" / "sparc.log"))

        assert Settings(LOG_FILE=str(tmp_path / "sparc.log")).LOG_FILE.endswith("sparc.log")


class TestSettingsEnvironment:
    """Test environment loading and the lazy singleton."""

    def test_env_prefix(self, monkeypatch):
        monkeypatch.setenv("SPARC_ATOM_CAP", "123")
        monkeypatch.setenv("SPARC_SOLVER_PATH", "/usr/local/bin/dlv")

        s = Settings()
        assert s.ATOM_CAP == 123
        assert s.SOLVER_PATH == "/usr/local/bin/dlv"

    def test_env_case_insensitive(self, monkeypatch):
        monkeypatch.setenv("sparc_candidate_cap", "77")
        assert Settings().CANDIDATE_CAP == 77

    def test_singleton(self):
        assert get_settings() is get_settings()

    def test_reset_rereads_environment(self, monkeypatch):
        first = get_settings()
        monkeypatch.setenv("SPARC_ATOM_CAP", "9")
        reset_settings()
        second = get_settings()

        assert second is not first
        assert second.ATOM_CAP == 9

    def test_proxy_reads_current_settings(self, monkeypatch):
        monkeypatch.setenv("SPARC_BENCH_MAX_RETRIES", "4")
        reset_settings()
        assert settings.BENCH_MAX_RETRIES == 4

    def test_invalid_environment_exits(self, monkeypatch):
        monkeypatch.setenv("SPARC_ATOM_CAP", "zero")
        reset_settings()
        with pytest.raises(SystemExit) as exc:
            get_settings()
        assert exc.value.code == 2
