"""Speck block cipher: the published 128-bit-block family plus the 32-bit-word
round primitive reused by the MAVShield lanes.

Round function over n-bit words x (upper) and y (lower):

    x' = ((x >>> alpha) + y  mod 2^n) ^ k
    y' = ( y <<< beta) ^ x'

Keys and blocks cross the byte boundary as big-endian integers, so the
128/128 known-answer plaintext reads ``laviuqe ti edam `` on the wire.
"""

from __future__ import annotations

from dataclasses import dataclass

from mavshield.ciphers.common import InvalidKeyError, check_key


@dataclass(frozen=True)
class SpeckVariant:
    """One row of the published parameter table."""
    block_bits: int
    key_bits: int
    alpha: int
    beta: int
    rounds: int

    @property
    def word_bits(self) -> int:
        return self.block_bits // 2

    @property
    def word_mask(self) -> int:
        return (1 << self.word_bits) - 1

    @property
    def key_words(self) -> int:
        return self.key_bits // self.word_bits


SPECK_128_128 = SpeckVariant(128, 128, 8, 3, 32)
SPECK_128_192 = SpeckVariant(128, 192, 8, 3, 33)
SPECK_128_256 = SpeckVariant(128, 256, 8, 3, 34)

# MAVShield round-function configuration: 64-bit lane over 32-bit words.
# Rounds are driven externally by the schedule, so the count here is nominal.
SHIELD_LANE = SpeckVariant(64, 128, 8, 3, 10)


def speck_round_forward(a: int, b: int, k: int, variant: SpeckVariant = SHIELD_LANE):
    """One forward round on the word pair (a, b) with round key k."""
    w, mask = variant.word_bits, variant.word_mask
    al, be = variant.alpha, variant.beta
    a = ((((a >> al) | (a << (w - al))) & mask) + b) & mask
    a ^= k
    b = (((b << be) | (b >> (w - be))) & mask) ^ a
    return a, b


def speck_round_inverse(a2: int, b2: int, k: int, variant: SpeckVariant = SHIELD_LANE):
    """Exact inverse of speck_round_forward."""
    w, mask = variant.word_bits, variant.word_mask
    al, be = variant.alpha, variant.beta
    b = (b2 ^ a2) & mask
    b = ((b >> be) | (b << (w - be))) & mask
    a = ((a2 ^ k) - b) & mask
    a = ((a << al) | (a >> (w - al))) & mask
    return a, b


class Speck128:
    """Speck with a 128-bit block and a 128/192/256-bit key."""

    def __init__(self, key: bytes, variant: SpeckVariant = SPECK_128_128):
        if variant.block_bits != 128:
            raise InvalidKeyError(f"unsupported block size {variant.block_bits}")
        check_key(key, variant.key_bits // 8, f"speck128_{variant.key_bits}")
        self.variant = variant
        self.round_keys = self._expand(key, variant)

    @staticmethod
    def _expand(key: bytes, variant: SpeckVariant) -> list[int]:
        kint = int.from_bytes(key, "big")
        words = [(kint >> (64 * i)) & variant.word_mask
                 for i in range(variant.key_words)]  # words[0] = least significant
        ks = [words[0]]
        l = words[1:]
        for i in range(variant.rounds - 1):
            li, ki = speck_round_forward(l[i], ks[i], i, variant)
            l.append(li)
            ks.append(ki)
        return ks

    def encrypt_block(self, block: bytes) -> bytes:
        if len(block) != 16:
            raise ValueError("speck128 block must be 16 bytes")
        v = int.from_bytes(block, "big")
        x, y = v >> 64, v & self.variant.word_mask
        for k in self.round_keys:
            x, y = speck_round_forward(x, y, k, self.variant)
        return ((x << 64) | y).to_bytes(16, "big")

    def decrypt_block(self, block: bytes) -> bytes:
        if len(block) != 16:
            raise ValueError("speck128 block must be 16 bytes")
        v = int.from_bytes(block, "big")
        x, y = v >> 64, v & self.variant.word_mask
        for k in reversed(self.round_keys):
            x, y = speck_round_inverse(x, y, k, self.variant)
        return ((x << 64) | y).to_bytes(16, "big")
