"""Exact cluster-algebra computations: seeds, scattering diagrams, folding and Weyl words."""
from __future__ import annotations

from .laurent import LaurentPoly, RationalFn, TruncSeries
from .seed import MutationState, Seed, SeedIso, apply_word

__all__ = ["LaurentPoly", "MutationState", "RationalFn", "Seed", "SeedIso", "TruncSeries", "apply_word"]
