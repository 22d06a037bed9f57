"""Rank, unrank and count binary unlabelled necklaces."""

from ._core import (
    ConventionError,
    canonical,
    count,
    count_lyndon,
    enumerate,
    rank,
    rank_necklaces,
    unrank,
)

__all__ = [
    "ConventionError",
    "canonical",
    "count",
    "count_lyndon",
    "enumerate",
    "rank",
    "rank_necklaces",
    "unrank",
]
