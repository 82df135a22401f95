"""Exhaustive sweep over all orbit-index subsets of a dimension.

Records connectivity, distinct-eigenvalue counts, and SRG verdicts for
every nonempty index set, in ascending bitmask order (bit i-1 set iff
orbit index i is a member), so output is byte-identical across runs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ConsistencyError, OrbitIndexSet, is_connected
from .explicit import EXPLICIT_HARD_MAX_N
from .spectrum import distinct, full_spectrum
from .srg import SrgParams, SrgVerdict, srg_check_explicit, srg_check_paircount, srg_check_spectral

CENSUS_DEFAULT_MAX_N = 12
CENSUS_DEFAULT_EXPLICIT_CAP = 8


@dataclass(frozen=True)
class CensusRecord:
    index_set: OrbitIndexSet
    connected: bool
    distinct_eigenvalues: int
    verdict: SrgVerdict
    complement_indices: tuple[int, ...]
    explicit_verified: bool

    def to_json_dict(self) -> dict:
        out = {
            "n": self.index_set.n,
            "I": list(self.index_set.sorted_indices),
            "connected": self.connected,
            "distinct": self.distinct_eigenvalues,
            "complement_I": list(self.complement_indices),
            "explicit_verified": self.explicit_verified,
        }
        out.update(self.verdict.to_json_dict())
        return out

    def to_csv_row(self) -> list[str]:
        """Fixed column order n,I,connected,distinct,verdict,r,lambda,mu."""
        params = self.verdict.params
        return [
            str(self.index_set.n),
            ",".join(str(i) for i in self.index_set.sorted_indices),
            str(self.connected).lower(),
            str(self.distinct_eigenvalues),
            self.verdict.status.value,
            str(params.degree) if params else "",
            str(params.lam) if params else "",
            str(params.mu) if params else "",
        ]


CENSUS_CSV_COLUMNS = ["n", "I", "connected", "distinct", "verdict", "r", "lambda", "mu"]


def census(
    n: int,
    explicit_cap: int = CENSUS_DEFAULT_EXPLICIT_CAP,
    max_n: int = CENSUS_DEFAULT_MAX_N,
) -> list[CensusRecord]:
    """One record per nonempty index set, ascending by bitmask.

    The two closed-form checkers always run and must agree; the dense
    brute-force checker additionally runs (and must agree) when n is within
    ``explicit_cap``.
    """
    if not 1 <= n <= max_n:
        raise ValueError(f"n={n} outside the configured range 1..{max_n}")
    if explicit_cap > EXPLICIT_HARD_MAX_N:
        raise ValueError(f"explicit cap {explicit_cap} exceeds {EXPLICIT_HARD_MAX_N}")
    run_explicit = n <= explicit_cap
    records = []
    for mask in range(1, 1 << n):
        s = OrbitIndexSet.from_bitmask(n, mask)
        verdict = srg_check_paircount(s)
        spectral = srg_check_spectral(s)
        if spectral != verdict:
            raise ConsistencyError(f"pair-count and spectral checkers disagree on {s.format()}")
        if run_explicit:
            brute = srg_check_explicit(s, max_n=explicit_cap)
            if brute != verdict:
                raise ConsistencyError(f"brute-force checker disagrees on {s.format()}")
        records.append(
            CensusRecord(
                index_set=s,
                connected=is_connected(s),
                distinct_eigenvalues=len(distinct(full_spectrum(s))),
                verdict=verdict,
                complement_indices=s.complement().sorted_indices,
                explicit_verified=run_explicit,
            )
        )
    return records


def distinct_count_histogram(n: int) -> dict[int, int]:
    """How many nonempty index sets achieve each distinct-eigenvalue count."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    hist: dict[int, int] = {}
    for mask in range(1, 1 << n):
        s = OrbitIndexSet.from_bitmask(n, mask)
        count = len(distinct(full_spectrum(s)))
        hist[count] = hist.get(count, 0) + 1
    return dict(sorted(hist.items()))


def find_srgs(
    n: int,
    explicit_cap: int = CENSUS_DEFAULT_EXPLICIT_CAP,
    max_n: int = CENSUS_DEFAULT_MAX_N,
) -> list[tuple[OrbitIndexSet, SrgParams, bool]]:
    """All strongly regular index sets with parameters and a trivial flag, by degree."""
    hits = [
        (rec.index_set, rec.verdict.params, rec.verdict.status.value == "trivial_srg")
        for rec in census(n, explicit_cap=explicit_cap, max_n=max_n)
        if rec.verdict.status.is_srg()
    ]
    return sorted(hits, key=lambda h: (h[1].degree, h[0].bitmask))
