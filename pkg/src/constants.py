"""Constants and configuration defaults for homkit.

This module contains:
- Schema and tool versioning for serialized files
- CLI exit codes
- Environment variable names and their defaults
- Search/enumeration bounds
"""

from typing import Final

# =============================================================================
# SCHEMA / VERSIONING
# =============================================================================

SCHEMA_VERSION: Final = "homkit-schema v1"
TOOL_NAME: Final = "homkit"
TOOL_VERSION: Final = "1.0.0"


# =============================================================================
# EXIT CODES
# =============================================================================

EXIT_OK: Final = 0
EXIT_CHECKS_FAILED: Final = 1
EXIT_USAGE: Final = 2


# =============================================================================
# ENVIRONMENT CONFIGURATION
# =============================================================================

ENV_THREADS: Final = "HOMKIT_THREADS"
ENV_SEARCH_BOUND: Final = "HOMKIT_SEARCH_BOUND"
ENV_LOG_LEVEL: Final = "HOMKIT_LOG_LEVEL"

DEFAULT_SEARCH_BOUND: Final = 10**7
DEFAULT_LOG_LEVEL: Final = "WARNING"


# =============================================================================
# LIMITS
# =============================================================================

# Largest modulus accepted for GF(p).
MAX_PRIME: Final = 2**31

# Witnesses kept per report entry; the full count is always recorded.
MAX_WITNESSES: Final = 32

# Dimension limits for the exhaustive enumerators.
COBOUNDARY_DIM_LIMIT: Final = 6
COHOMOLOGY_DIM_LIMIT: Final = 4

# A group table is attached to a cohomology result only up to this many classes.
GROUP_TABLE_LIMIT: Final = 16
