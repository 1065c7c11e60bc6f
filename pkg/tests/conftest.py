"""Shared fixtures: the expensive expansions are computed once per session."""

from __future__ import annotations

import pytest

from borwein import dp_signed_counts, expand_borwein


@pytest.fixture(scope="session")
def series_upto_100():
    """BorweinSeries for n = 0..100, indexed by n."""
    return [expand_borwein(n) for n in range(101)]


@pytest.fixture(scope="session")
def dp_tables_upto_30():
    """Signed subset-sum DP tables for n = 0..30, indexed by n."""
    return [dp_signed_counts(n) for n in range(31)]
