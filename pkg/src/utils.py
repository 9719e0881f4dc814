"""Utility functions for homkit.

This module contains helper functions for:
- Environment variable validation and settings resolution
- Structured check/search result logging
- Ordered parallel evaluation of independent checks
"""

from __future__ import annotations

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import TypeVar

from constants import (
    DEFAULT_LOG_LEVEL,
    DEFAULT_SEARCH_BOUND,
    ENV_LOG_LEVEL,
    ENV_SEARCH_BOUND,
    ENV_THREADS,
)
from models import ReportEntry

logger = logging.getLogger("homkit")

T = TypeVar("T")
R = TypeVar("R")

# =============================================================================
# ENVIRONMENT VALIDATION
# =============================================================================

_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class Settings:
    """Runtime configuration resolved from the environment."""

    threads: int
    search_bound: int
    log_level: str


def _positive_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise RuntimeError(f"{name} must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise RuntimeError(f"{name} must be a positive integer, got {raw!r}")
    return value


def validate_environment() -> Settings:
    """Resolve and validate homkit environment variables.

    Unset variables fall back to their defaults; empty strings count as unset.

    Raises:
        RuntimeError: If a variable is set to an invalid value.

    Example:
        >>> validate_environment().search_bound
        10000000
    """
    threads = _positive_int(ENV_THREADS, os.cpu_count() or 1)
    bound = _positive_int(ENV_SEARCH_BOUND, DEFAULT_SEARCH_BOUND)
    level = (os.getenv(ENV_LOG_LEVEL) or DEFAULT_LOG_LEVEL).upper()
    if level not in _LOG_LEVELS:
        raise RuntimeError(f"{ENV_LOG_LEVEL} must be one of {list(_LOG_LEVELS)}")
    return Settings(threads=threads, search_bound=bound, log_level=level)


def worker_count() -> int:
    """Worker threads for parallel checks (``HOMKIT_THREADS``)."""
    return _positive_int(ENV_THREADS, os.cpu_count() or 1)


def search_bound() -> int:
    """Candidate bound for exhaustive searches (``HOMKIT_SEARCH_BOUND``)."""
    return _positive_int(ENV_SEARCH_BOUND, DEFAULT_SEARCH_BOUND)


# =============================================================================
# PARALLEL EVALUATION
# =============================================================================


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> list[R]:
    """Apply ``fn`` to ``items`` on a thread pool, preserving input order.

    With a single worker everything runs inline.
    """
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


# =============================================================================
# STRUCTURED LOGGING
# =============================================================================


def log_check_result(subject: str, entry: ReportEntry) -> None:
    """Log one axiom outcome in structured form.

    Passing axioms go to DEBUG, failing ones to INFO.

    Example:
        >>> log_check_result("H4", entry)
        # Logs: "CHECK_RESULT: subject=H4 | axiom=hom_associativity | passed=False | witnesses=3"
    """
    level = logging.DEBUG if entry.passed else logging.INFO
    logger.log(
        level,
        "CHECK_RESULT: subject=%s | axiom=%s | passed=%s | witnesses=%d",
        subject,
        entry.axiom,
        entry.passed,
        entry.witness_count,
    )


def log_search_result(kind: str, field: str, candidates: int, found: int) -> None:
    """Log the certificate of an exhaustive search."""
    logger.info(
        "SEARCH_RESULT: kind=%s | field=%s | candidates=%d | found=%d",
        kind,
        field,
        candidates,
        found,
    )
