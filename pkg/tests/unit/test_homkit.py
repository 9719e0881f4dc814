"""Tests for the one-namespace library module."""

import pytest

import homkit
from constants import TOOL_VERSION


@pytest.mark.unit
class TestPublicApi:
    """Tests for ``import homkit``."""

    @pytest.mark.smoke
    def test_corpus_through_the_namespace(self) -> None:
        H = homkit.corpus("h4")
        assert H.dim == 4
        assert homkit.verify(homkit.StructureKind.HOPF, H).passed

    def test_exports_resolve(self) -> None:
        missing = [name for name in homkit.__all__ if not hasattr(homkit, name)]
        assert missing == []

    def test_round_trip_through_the_namespace(self) -> None:
        sigma = homkit.corpus("scalar_sigma_t", field=homkit.FieldSpec.prime(5))
        assert homkit.loads(homkit.dumps(sigma)).form == sigma.form
        assert homkit.check_lazy(sigma).passed

    def test_version(self) -> None:
        assert homkit.__version__ == TOOL_VERSION
