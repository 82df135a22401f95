"""Shared fixtures: the exhaustive small-dimension sweep reused across suites."""

from __future__ import annotations

import pytest

from orbitcayley.core import OrbitIndexSet
from orbitcayley.srg import srg_check_explicit, srg_check_paircount, srg_check_spectral


@pytest.fixture(scope="session")
def small_sweep():
    """All nonempty index sets with n <= 8, with the three SRG verdicts each."""
    out = {}
    for n in range(1, 9):
        for mask in range(1, 1 << n):
            s = OrbitIndexSet.from_bitmask(n, mask)
            out[(n, mask)] = (
                s,
                srg_check_paircount(s),
                srg_check_spectral(s),
                srg_check_explicit(s),
            )
    return out
