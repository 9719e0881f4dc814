"""Integration test fixtures for the homkit command line.

These tests drive ``main.run`` end to end: documents are written to a
temporary directory with the ``corpus`` verb and fed back to the other
verbs, and the exit code, stdout record and stderr summary are checked.
"""

import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any

import pytest

# Import from the src directory
sys.path.insert(0, "src")

from main import run  # noqa: E402

# =============================================================================
# CLI RUNNER
# =============================================================================


@dataclass
class CliResult:
    """Outcome of one CLI invocation."""

    code: int
    stdout: str
    stderr: str

    @property
    def record(self) -> Any:
        """The JSON document printed on stdout."""
        return json.loads(self.stdout)


@pytest.fixture
def cli(capsys, clean_env):
    """Run homkit with the given arguments and capture its streams."""

    def invoke(*argv: str | Path) -> CliResult:
        code = run([str(a) for a in argv])
        out, err = capsys.readouterr()
        return CliResult(code, out, err)

    return invoke


@pytest.fixture
def data_dir(tmp_path, cli) -> Path:
    """Corpus documents over Q at t = 1: h4, action_h4, sigma_t, scalar_sigma_t, yd_h4."""
    for name in ("h4", "action_h4", "sigma_t", "scalar_sigma_t", "yd_h4"):
        result = cli("corpus", name, "--out", tmp_path)
        assert result.code == 0, result.stderr
    return tmp_path
