"""Enumeration budgets.

Every exhaustive search in the engine is bounded by one of these knobs; the
defaults match the documented contracts (searches over GF(p) are exhaustive
within budget, searches over the rationals are deterministic sampling).
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Budgets:
    # max number of Hom-space elements enumerated when searching for a mono/epi/iso over GF(p)
    mono_enum: int = 1 << 20
    # deterministic sample count for mono/epi searches over the rationals
    rational_trials: int = 64
    # max number of extension classes enumerated per Ext^1 space over GF(p)
    ext_enum: int = 1 << 16
    # max number of endomorphisms enumerated when certifying right-minimality of a cover
    minimality_enum: int = 1 << 16
    # headroom (total dimension above the target) for the copresentation fallback search
    copres_extra_dim: int = 12
    # registry size cap for 2^N subset enumerations
    subset_bound: int = 16
    # matrix-tuple cap per dimension vector in brute-force indecomposable enumeration
    brute_force_enum: int = 1 << 20


DEFAULT_BUDGETS = Budgets()
