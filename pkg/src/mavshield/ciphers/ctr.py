"""Counter mode: turns any 128-bit block permutation into a length-preserving
stream cipher.

Keystream block j encrypts (iv + j) mod 2^128, where the 16-byte counter is
read and incremented as a big-endian unsigned integer. Applying the same
operation twice with the same (key, iv) is the identity.
"""

from __future__ import annotations

from typing import Callable

from mavshield.ciphers.common import MASK128, xor_bytes

BlockFn = Callable[[bytes], bytes]


def counter_add(iv: bytes, offset: int) -> bytes:
    """(iv + offset) mod 2^128 as a 16-byte big-endian counter."""
    if len(iv) != 16:
        raise ValueError("counter block must be 16 bytes")
    return ((int.from_bytes(iv, "big") + offset) & MASK128).to_bytes(16, "big")


def ctr_keystream(block_encrypt: BlockFn, iv: bytes, nbytes: int) -> bytes:
    if len(iv) != 16:
        raise ValueError("counter block must be 16 bytes")
    counter = int.from_bytes(iv, "big")
    out = bytearray()
    while len(out) < nbytes:
        out += block_encrypt((counter & MASK128).to_bytes(16, "big"))
        counter += 1
    return bytes(out[:nbytes])


def ctr_xcrypt(block_encrypt: BlockFn, iv: bytes, data: bytes) -> bytes:
    """XOR data with the counter-mode keystream; output length = input length."""
    if not data:
        return b""
    return xor_bytes(data, ctr_keystream(block_encrypt, iv, len(data)))
