"""Orbit Cayley graphs over Z2^n: exact spectra, strong-regularity certification, census."""

from .census import CensusRecord, census, distinct_count_histogram, find_srgs
from .core import (
    ConsistencyError,
    Gf2Vector,
    OrbitIndexSet,
    ResidueFamily,
    binom,
    complement_index_set,
    expand_family,
    is_connected,
    orbit_size,
    weight,
)
from .explicit import ExplicitGraph
from .graph6 import decode_graph6, export_graph6
from .identities import (
    IDENTITY_IDS,
    IdentityCheck,
    identity_sides,
    mod4_binomial_sum,
    parity_binomial_sum,
    verify_all,
)
from .spectrum import (
    DistinctSpectrum,
    Spectrum,
    character_sum_row,
    distinct,
    eigenvalue,
    full_spectrum,
    orbit_character_sum,
    wht_spectrum,
)
from .srg import (
    FAMILIES,
    SrgParams,
    SrgVerdict,
    VerdictStatus,
    classify_trivial,
    family_construct,
    match_families,
    pair_count,
    pair_count_oracle,
    srg_check_explicit,
    srg_check_paircount,
    srg_check_spectral,
    verify_equitable_partition,
)

__all__ = [
    "CensusRecord",
    "ConsistencyError",
    "DistinctSpectrum",
    "ExplicitGraph",
    "FAMILIES",
    "Gf2Vector",
    "IDENTITY_IDS",
    "IdentityCheck",
    "OrbitIndexSet",
    "ResidueFamily",
    "Spectrum",
    "SrgParams",
    "SrgVerdict",
    "VerdictStatus",
    "binom",
    "census",
    "character_sum_row",
    "classify_trivial",
    "complement_index_set",
    "decode_graph6",
    "distinct",
    "distinct_count_histogram",
    "eigenvalue",
    "expand_family",
    "export_graph6",
    "family_construct",
    "find_srgs",
    "full_spectrum",
    "identity_sides",
    "is_connected",
    "match_families",
    "mod4_binomial_sum",
    "orbit_character_sum",
    "orbit_size",
    "pair_count",
    "pair_count_oracle",
    "parity_binomial_sum",
    "srg_check_explicit",
    "srg_check_paircount",
    "srg_check_spectral",
    "verify_all",
    "verify_equitable_partition",
    "weight",
    "wht_spectrum",
]

__version__ = "0.1.0"
