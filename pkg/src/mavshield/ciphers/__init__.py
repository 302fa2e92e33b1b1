"""Cipher suite registry.

Every suite exposes the same length-preserving interface: a stream object
built from (key, session nonce) whose ``xcrypt(iv, data)`` both encrypts
and decrypts. The 16-byte ``iv`` is the per-packet counter block; suites
narrower than 128 IV bits document which slice they consume.
"""

from __future__ import annotations

from mavshield.ciphers import aes, chacha, ctr, rabbit, shield, speck
from mavshield.ciphers.common import InvalidKeyError, check_key, parse_hex
from mavshield.ciphers.sbox import DEFAULT_TABLE, SubstitutionTable

SUITE_NAMES = (
    "none",
    "mavshield",
    "speck128_128",
    "speck128_192",
    "speck128_256",
    "aes128",
    "chacha20",
    "rabbit",
)

_KEY_SIZES = {
    "none": 0,
    "mavshield": 16,
    "speck128_128": 16,
    "speck128_192": 24,
    "speck128_256": 32,
    "aes128": 16,
    "chacha20": 32,
    "rabbit": 16,
}

_SPECK_VARIANTS = {
    "speck128_128": speck.SPECK_128_128,
    "speck128_192": speck.SPECK_128_192,
    "speck128_256": speck.SPECK_128_256,
}


def key_size(suite: str) -> int:
    if suite not in _KEY_SIZES:
        raise ValueError(f"unknown cipher suite: {suite!r}")
    return _KEY_SIZES[suite]


class _NoneStream:
    """Pass-through baseline suite."""

    def xcrypt(self, iv: bytes, data: bytes) -> bytes:
        return data


class _CtrStream:
    """Counter mode over a 128-bit block permutation; uses the full IV."""

    def __init__(self, block_fn):
        self._block_fn = block_fn

    def xcrypt(self, iv: bytes, data: bytes) -> bytes:
        return ctr.ctr_xcrypt(self._block_fn, iv, data)


class _ChaChaStream:
    """ChaCha20: IV bytes 0..3 seed the block counter (little-endian),
    bytes 4..15 are the 96-bit nonce."""

    def __init__(self, key: bytes):
        self._key = check_key(key, 32, "chacha20")

    def xcrypt(self, iv: bytes, data: bytes) -> bytes:
        counter = int.from_bytes(iv[0:4], "little")
        return chacha.chacha20_xcrypt(self._key, iv[4:16], counter, data)


class _RabbitStream:
    """Rabbit: key setup runs once; IV bytes 8..15 re-key the counters
    per packet."""

    def __init__(self, key: bytes):
        self._master = rabbit.rabbit_key_setup(key)

    def xcrypt(self, iv: bytes, data: bytes) -> bytes:
        if not data:
            return b""
        state = rabbit.rabbit_iv_setup(self._master, iv[8:16])
        return ctr.xor_bytes(data, rabbit.rabbit_keystream(state, len(data)))


def make_stream(suite: str, key: bytes = b"", session_nonce: int = 0,
                table: SubstitutionTable = DEFAULT_TABLE):
    """Build the per-channel stream cipher for a suite."""
    if suite == "none":
        return _NoneStream()
    check_key(key, key_size(suite), suite)
    if suite == "mavshield":
        schedule = shield.mavshield_key_schedule(key, session_nonce, table)
        return _CtrStream(lambda b: shield.mavshield_encrypt_block(b, schedule, table))
    if suite in _SPECK_VARIANTS:
        cipher = speck.Speck128(key, _SPECK_VARIANTS[suite])
        return _CtrStream(cipher.encrypt_block)
    if suite == "aes128":
        round_keys = aes.expand_key_128(key)
        return _CtrStream(lambda b: aes.aes128_encrypt_block(b, round_keys))
    if suite == "chacha20":
        return _ChaChaStream(key)
    if suite == "rabbit":
        return _RabbitStream(key)
    raise ValueError(f"unknown cipher suite: {suite!r}")


__all__ = [
    "SUITE_NAMES",
    "InvalidKeyError",
    "SubstitutionTable",
    "DEFAULT_TABLE",
    "key_size",
    "make_stream",
    "parse_hex",
]
