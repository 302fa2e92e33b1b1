"""The MAVShield block cipher.

A 128-bit block is processed as two independent 64-bit lanes, each built
from the 32-bit-word Speck round function. Per round, a 64-bit schedule
entry is split, byte-substituted, and XOR-mixed into one 32-bit key per
lane. The schedule itself evolves a copy of the 128-bit master key under
round values derived from a rotated-and-complemented 64-bit nonce state.

Byte convention (encoded in the golden vectors): 32-bit words are
assembled little-endian from consecutive 4-byte groups; the first group is
the most-significant word (ct3 / key3).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from mavshield.ciphers.common import MASK64, check_key, rotr64
from mavshield.ciphers.sbox import DEFAULT_TABLE, SubstitutionTable
from mavshield.ciphers.speck import (
    SHIELD_LANE,
    SpeckVariant,
    speck_round_forward,
    speck_round_inverse,
)

ROUNDS = 10


@dataclass(frozen=True)
class MavShieldSchedule:
    """The 10-entry, 64-bit-per-entry round-key schedule."""
    round_keys: tuple[int, ...]
    nonce: int

    def __post_init__(self):
        if len(self.round_keys) != ROUNDS:
            raise ValueError(f"schedule must have {ROUNDS} entries")


def round_value_generation(c: int, table: SubstitutionTable = DEFAULT_TABLE):
    """Split a 64-bit word, substitute bytes, and XOR-mix the halves.

    Returns (upper, lower) where the lower output XORs the pre-substitution
    halves and the upper output XORs the post-substitution halves.
    """
    cu = (c >> 32) & 0xFFFFFFFF
    cl = c & 0xFFFFFFFF
    return table.sub_word32(cu) ^ table.sub_word32(cl), cu ^ cl


def mavshield_key_schedule(key: bytes, nonce: int,
                           table: SubstitutionTable = DEFAULT_TABLE) -> MavShieldSchedule:
    """Derive the 10-entry schedule from a 16-byte key and a 64-bit nonce."""
    key = check_key(key, 16, "mavshield")
    k3 = int.from_bytes(key[0:4], "little")
    k2 = int.from_bytes(key[4:8], "little")
    k1 = int.from_bytes(key[8:12], "little")
    k0 = int.from_bytes(key[12:16], "little")
    c = nonce & MASK64
    entries = []
    for i in range(ROUNDS):
        c = (~rotr64(c, i)) & MASK64
        cu, cl = round_value_generation(c, table)
        k3, k2 = speck_round_forward(k3, k2, cu)
        k1, k0 = speck_round_forward(k1, k0, cl)
        entries.append((k1 << 32) | k0)
    return MavShieldSchedule(tuple(entries), nonce & MASK64)


def mavshield_encrypt_block(block: bytes, schedule: MavShieldSchedule,
                            table: SubstitutionTable = DEFAULT_TABLE) -> bytes:
    """Encrypt one 16-byte block. The two 64-bit halves never mix."""
    if len(block) != 16:
        raise ValueError("mavshield block must be 16 bytes")
    ct3 = int.from_bytes(block[0:4], "little")
    ct2 = int.from_bytes(block[4:8], "little")
    ct1 = int.from_bytes(block[8:12], "little")
    ct0 = int.from_bytes(block[12:16], "little")
    for entry in schedule.round_keys:
        ku, kl = round_value_generation(entry, table)
        ct3, ct2 = speck_round_forward(ct3, ct2, ku)
        ct1, ct0 = speck_round_forward(ct1, ct0, kl)
    return (ct3.to_bytes(4, "little") + ct2.to_bytes(4, "little")
            + ct1.to_bytes(4, "little") + ct0.to_bytes(4, "little"))


def mavshield_decrypt_block(block: bytes, schedule: MavShieldSchedule,
                            table: SubstitutionTable = DEFAULT_TABLE) -> bytes:
    """Exact inverse of mavshield_encrypt_block (round keys in reverse)."""
    if len(block) != 16:
        raise ValueError("mavshield block must be 16 bytes")
    ct3 = int.from_bytes(block[0:4], "little")
    ct2 = int.from_bytes(block[4:8], "little")
    ct1 = int.from_bytes(block[8:12], "little")
    ct0 = int.from_bytes(block[12:16], "little")
    for entry in reversed(schedule.round_keys):
        ku, kl = round_value_generation(entry, table)
        ct3, ct2 = speck_round_inverse(ct3, ct2, ku)
        ct1, ct0 = speck_round_inverse(ct1, ct0, kl)
    return (ct3.to_bytes(4, "little") + ct2.to_bytes(4, "little")
            + ct1.to_bytes(4, "little") + ct0.to_bytes(4, "little"))


# ---------------------------------------------------------------------------
# Vectorized bulk paths. Semantics are identical to the scalar functions
# (per-round keys are pure functions of the schedule, so hoisting them out
# of the block loop is observationally equivalent); tests cross-check the
# two paths word for word.

def _round_key_pairs(schedule: MavShieldSchedule, table: SubstitutionTable):
    return [round_value_generation(e, table) for e in schedule.round_keys]


def blocks_from_bytes(data: bytes) -> np.ndarray:
    """View 16-byte blocks as an (N, 4) array of [ct3, ct2, ct1, ct0]."""
    if len(data) % 16:
        raise ValueError("data must be a whole number of 16-byte blocks")
    return np.frombuffer(data, dtype="<u4").reshape(-1, 4).copy()


def bytes_from_blocks(words: np.ndarray) -> bytes:
    return words.astype("<u4", copy=False).tobytes()


def _bulk_forward(a, b, k):
    a = (((a >> np.uint32(8)) | (a << np.uint32(24))) + b) ^ np.uint32(k)
    b = ((b << np.uint32(3)) | (b >> np.uint32(29))) ^ a
    return a, b


def _bulk_inverse(a2, b2, k):
    b = b2 ^ a2
    b = (b >> np.uint32(3)) | (b << np.uint32(29))
    a = (a2 ^ np.uint32(k)) - b
    a = (a << np.uint32(8)) | (a >> np.uint32(24))
    return a, b


def mavshield_encrypt_blocks(words: np.ndarray, schedule: MavShieldSchedule,
                             table: SubstitutionTable = DEFAULT_TABLE) -> np.ndarray:
    """Encrypt many blocks at once; words is an (N, 4) uint32 array."""
    a3, a2, a1, a0 = (words[:, i].astype(np.uint32, copy=True) for i in range(4))
    for ku, kl in _round_key_pairs(schedule, table):
        a3, a2 = _bulk_forward(a3, a2, ku)
        a1, a0 = _bulk_forward(a1, a0, kl)
    return np.stack([a3, a2, a1, a0], axis=1)


def mavshield_decrypt_blocks(words: np.ndarray, schedule: MavShieldSchedule,
                             table: SubstitutionTable = DEFAULT_TABLE) -> np.ndarray:
    a3, a2, a1, a0 = (words[:, i].astype(np.uint32, copy=True) for i in range(4))
    for ku, kl in reversed(_round_key_pairs(schedule, table)):
        a3, a2 = _bulk_inverse(a3, a2, ku)
        a1, a0 = _bulk_inverse(a1, a0, kl)
    return np.stack([a3, a2, a1, a0], axis=1)


# ---------------------------------------------------------------------------
# Reduced-width instantiation (8-bit words, 32-bit block) with the same
# structure, small enough for exhaustive permutation checks. Test-only; the
# rotation amounts follow the smallest published Speck variant.

TOY_LANE = SpeckVariant(16, 32, 7, 2, ROUNDS)


def toy_round_value(c: int, table: SubstitutionTable = DEFAULT_TABLE):
    cu, cl = (c >> 8) & 0xFF, c & 0xFF
    return table[cu] ^ table[cl], cu ^ cl


def toy_schedule(key: bytes, nonce: int, table: SubstitutionTable = DEFAULT_TABLE):
    """16-bit schedule entries from a 4-byte key and 16-bit nonce."""
    if len(key) != 4:
        raise ValueError("toy key must be 4 bytes")
    k3, k2, k1, k0 = key
    c = nonce & 0xFFFF
    entries = []
    for i in range(ROUNDS):
        r = i & 15
        c = ((c >> r) | (c << (16 - r))) & 0xFFFF if r else c
        c = (~c) & 0xFFFF
        cu, cl = toy_round_value(c, table)
        k3, k2 = speck_round_forward(k3, k2, cu, TOY_LANE)
        k1, k0 = speck_round_forward(k1, k0, cl, TOY_LANE)
        entries.append((k1 << 8) | k0)
    return entries


def toy_lane_encrypt(lane: int, entries, low_lane: bool,
                     table: SubstitutionTable = DEFAULT_TABLE) -> int:
    """Encrypt one 16-bit lane value under a toy schedule."""
    a, b = (lane >> 8) & 0xFF, lane & 0xFF
    for entry in entries:
        ku, kl = toy_round_value(entry, table)
        a, b = speck_round_forward(a, b, kl if low_lane else ku, TOY_LANE)
    return (a << 8) | b
