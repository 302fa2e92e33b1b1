"""Packed binary sequences for the randomness battery."""

from __future__ import annotations

import numpy as np


class BitSequence:
    """An immutable bit string, packed MSB-first."""

    def __init__(self, packed: np.ndarray, n: int):
        if n <= 0:
            raise ValueError("bit sequence must be non-empty")
        if len(packed) != -(-n // 8):
            raise ValueError("packed length does not match bit count")
        self.packed = np.asarray(packed, dtype=np.uint8)
        self.n = n
        self._bits: np.ndarray | None = None

    @classmethod
    def from_bits(cls, bits) -> "BitSequence":
        arr = np.asarray(bits, dtype=np.uint8)
        return cls(np.packbits(arr), len(arr))

    @classmethod
    def from_bytes(cls, data: bytes, n: int | None = None) -> "BitSequence":
        if n is None:
            n = 8 * len(data)
        return cls(np.frombuffer(data, dtype=np.uint8)[: -(-n // 8)].copy(), n)

    @classmethod
    def from_string(cls, text: str) -> "BitSequence":
        return cls.from_bits([int(c) for c in text if c in "01"])

    def bits(self) -> np.ndarray:
        """The sequence as a 0/1 uint8 array (cached)."""
        if self._bits is None:
            self._bits = np.unpackbits(self.packed)[:self.n]
        return self._bits

    def __len__(self) -> int:
        return self.n
