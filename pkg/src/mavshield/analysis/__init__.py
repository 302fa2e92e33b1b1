"""Differential-analysis corpus tools: unit-distance plaintext pairs, their
ciphertext pairs, and avalanche statistics."""

from mavshield.analysis.drbg import DeterministicRandom
from mavshield.analysis.pairs import (
    AvalancheStats,
    avalanche_stats,
    corpus_to_bitstreams,
    encrypt_pairs,
    gen_unit_distance_pairs,
)

__all__ = [
    "AvalancheStats",
    "DeterministicRandom",
    "avalanche_stats",
    "corpus_to_bitstreams",
    "encrypt_pairs",
    "gen_unit_distance_pairs",
]
