"""Seeded deterministic byte source for reproducible corpora.

Drives a fixed, counter-based keystream (ChaCha20 under a key hashed from
the seed), so the same seed yields byte-identical output on every platform
and in every release. Not a general-purpose RNG: it exists so corpus files
can be regenerated bit-for-bit.
"""

from __future__ import annotations

import hashlib

from mavshield.ciphers.chacha import chacha20_init_state, _block_from_state

_DOMAIN = b"mavshield corpus drbg v1"


class DeterministicRandom:
    def __init__(self, seed: int):
        if not 0 <= seed < (1 << 64):
            raise ValueError("seed must be an unsigned 64-bit integer")
        self.seed = seed
        key = hashlib.sha256(_DOMAIN + seed.to_bytes(8, "big")).digest()
        self._state = chacha20_init_state(key, bytes(12), 0)
        self._counter = 0
        self._buffer = b""
        self._offset = 0

    def take(self, n: int) -> bytes:
        """Next n keystream bytes."""
        out = bytearray()
        while n > 0:
            if self._offset == len(self._buffer):
                self._refill()
            chunk = self._buffer[self._offset:self._offset + n]
            out += chunk
            self._offset += len(chunk)
            n -= len(chunk)
        return bytes(out)

    def byte(self) -> int:
        return self.take(1)[0]

    def _refill(self):
        blocks = []
        for _ in range(256):  # 16 KiB at a time
            self._state[12] = self._counter & 0xFFFFFFFF
            blocks.append(_block_from_state(self._state))
            self._counter += 1
        self._buffer = b"".join(blocks)
        self._offset = 0
