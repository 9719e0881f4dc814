"""Unit tests for environment validation and the logging helpers.

These tests verify that validate_environment resolves defaults, accepts
valid overrides and rejects malformed values with RuntimeError.
"""

import logging
import os
import sys
from unittest.mock import patch

import pytest

sys.path.insert(0, "src")
from constants import DEFAULT_SEARCH_BOUND
from models import ReportEntry
from utils import log_check_result, log_search_result, ordered_map, search_bound, validate_environment, worker_count


@pytest.mark.unit
class TestEnvironmentValidation:
    """Tests for HOMKIT_* resolution."""

    def test_defaults(self, clean_env):
        """Test that unset variables fall back to their defaults."""
        settings = validate_environment()
        assert settings.search_bound == DEFAULT_SEARCH_BOUND
        assert settings.log_level == "WARNING"
        assert settings.threads == (os.cpu_count() or 1)

    def test_overrides(self, clean_env):
        env = {"HOMKIT_THREADS": "2", "HOMKIT_SEARCH_BOUND": "500", "HOMKIT_LOG_LEVEL": "debug"}
        with patch.dict(os.environ, env):
            settings = validate_environment()
        assert (settings.threads, settings.search_bound, settings.log_level) == (2, 500, "DEBUG")

    def test_empty_values_count_as_unset(self, clean_env):
        """Test with empty string values - documents actual behavior."""
        with patch.dict(os.environ, {"HOMKIT_SEARCH_BOUND": "", "HOMKIT_LOG_LEVEL": ""}):
            settings = validate_environment()
        assert settings.search_bound == DEFAULT_SEARCH_BOUND
        assert settings.log_level == "WARNING"

    @pytest.mark.parametrize("value", ["0", "-3", "many", "1.5"])
    def test_invalid_thread_count(self, clean_env, value: str):
        with patch.dict(os.environ, {"HOMKIT_THREADS": value}):
            with pytest.raises(RuntimeError) as exc_info:
                validate_environment()
        assert "HOMKIT_THREADS" in str(exc_info.value)

    def test_invalid_log_level(self, clean_env):
        with patch.dict(os.environ, {"HOMKIT_LOG_LEVEL": "LOUD"}):
            with pytest.raises(RuntimeError) as exc_info:
                validate_environment()
        assert "HOMKIT_LOG_LEVEL" in str(exc_info.value)

    def test_accessors(self, clean_env):
        with patch.dict(os.environ, {"HOMKIT_THREADS": "3", "HOMKIT_SEARCH_BOUND": "7"}):
            assert worker_count() == 3
            assert search_bound() == 7


@pytest.mark.unit
class TestOrderedMap:
    """Tests for the thread-pool map."""

    @pytest.mark.parametrize("threads", ["1", "4"])
    def test_order_is_preserved(self, clean_env, threads: str):
        with patch.dict(os.environ, {"HOMKIT_THREADS": threads}):
            assert ordered_map(lambda n: n * n, range(10)) == [n * n for n in range(10)]

    def test_empty_input(self, clean_env):
        assert ordered_map(str, []) == []


@pytest.mark.unit
class TestStructuredLogging:
    """Tests for CHECK_RESULT and SEARCH_RESULT lines."""

    def test_failure_logged_at_info(self, caplog):
        with caplog.at_level(logging.INFO, logger="homkit"):
            log_check_result("H4", ReportEntry("hom_associativity", False, (), 3))
        assert "CHECK_RESULT: subject=H4 | axiom=hom_associativity | passed=False | witnesses=3" in caplog.text

    def test_pass_logged_at_debug_only(self, caplog):
        with caplog.at_level(logging.INFO, logger="homkit"):
            log_check_result("H4", ReportEntry("hom_associativity", True))
        assert "CHECK_RESULT" not in caplog.text
        with caplog.at_level(logging.DEBUG, logger="homkit"):
            log_check_result("H4", ReportEntry("hom_associativity", True))
        assert "passed=True | witnesses=0" in caplog.text

    def test_search_result(self, caplog):
        with caplog.at_level(logging.INFO, logger="homkit"):
            log_search_result("lazy", "gf:3", 81, 3)
        assert "SEARCH_RESULT: kind=lazy | field=gf:3 | candidates=81 | found=3" in caplog.text
