"""AES-128 forward block function, table driven from the standard's constants.

Only encryption is implemented (counter mode never inverts the block
function). Not hardened against timing side channels.
"""

from __future__ import annotations

import struct

from mavshield.ciphers.common import check_key
from mavshield.ciphers.sbox import AES_SBOX

_RCON = (0x01, 0x02, 0x04, 0x08, 0x10, 0x20, 0x40, 0x80, 0x1B, 0x36)


def _xtime(x: int) -> int:
    x <<= 1
    return (x ^ 0x11B) & 0xFF if x & 0x100 else x


def _build_tables():
    te0 = []
    for s in AES_SBOX:
        s2 = _xtime(s)
        s3 = s2 ^ s
        te0.append((s2 << 24) | (s << 16) | (s << 8) | s3)
    te1 = [((t >> 8) | (t << 24)) & 0xFFFFFFFF for t in te0]
    te2 = [((t >> 16) | (t << 16)) & 0xFFFFFFFF for t in te0]
    te3 = [((t >> 24) | (t << 8)) & 0xFFFFFFFF for t in te0]
    return tuple(te0), tuple(te1), tuple(te2), tuple(te3)


TE0, TE1, TE2, TE3 = _build_tables()


def expand_key_128(key: bytes) -> list[int]:
    """AES-128 key expansion: 44 round-key words (big-endian columns)."""
    key = check_key(key, 16, "aes128")
    w = list(struct.unpack(">4I", key))
    for i in range(4, 44):
        t = w[i - 1]
        if i % 4 == 0:
            t = ((t << 8) | (t >> 24)) & 0xFFFFFFFF  # RotWord
            t = (AES_SBOX[t >> 24] << 24 | AES_SBOX[(t >> 16) & 0xFF] << 16
                 | AES_SBOX[(t >> 8) & 0xFF] << 8 | AES_SBOX[t & 0xFF])
            t ^= _RCON[i // 4 - 1] << 24
        w.append(w[i - 4] ^ t)
    return w


def aes128_encrypt_block(block: bytes, round_keys: list[int]) -> bytes:
    """Encrypt one 16-byte block: 10 rounds, MixColumns omitted in the last."""
    if len(block) != 16:
        raise ValueError("aes128 block must be 16 bytes")
    w = round_keys
    a0, a1, a2, a3 = struct.unpack(">4I", block)
    a0 ^= w[0]; a1 ^= w[1]; a2 ^= w[2]; a3 ^= w[3]
    for r in range(1, 10):
        k = 4 * r
        b0 = TE0[a0 >> 24] ^ TE1[(a1 >> 16) & 0xFF] ^ TE2[(a2 >> 8) & 0xFF] ^ TE3[a3 & 0xFF] ^ w[k]
        b1 = TE0[a1 >> 24] ^ TE1[(a2 >> 16) & 0xFF] ^ TE2[(a3 >> 8) & 0xFF] ^ TE3[a0 & 0xFF] ^ w[k + 1]
        b2 = TE0[a2 >> 24] ^ TE1[(a3 >> 16) & 0xFF] ^ TE2[(a0 >> 8) & 0xFF] ^ TE3[a1 & 0xFF] ^ w[k + 2]
        b3 = TE0[a3 >> 24] ^ TE1[(a0 >> 16) & 0xFF] ^ TE2[(a1 >> 8) & 0xFF] ^ TE3[a2 & 0xFF] ^ w[k + 3]
        a0, a1, a2, a3 = b0, b1, b2, b3
    s = AES_SBOX
    c0 = (s[a0 >> 24] << 24 | s[(a1 >> 16) & 0xFF] << 16 | s[(a2 >> 8) & 0xFF] << 8 | s[a3 & 0xFF]) ^ w[40]
    c1 = (s[a1 >> 24] << 24 | s[(a2 >> 16) & 0xFF] << 16 | s[(a3 >> 8) & 0xFF] << 8 | s[a0 & 0xFF]) ^ w[41]
    c2 = (s[a2 >> 24] << 24 | s[(a3 >> 16) & 0xFF] << 16 | s[(a0 >> 8) & 0xFF] << 8 | s[a1 & 0xFF]) ^ w[42]
    c3 = (s[a3 >> 24] << 24 | s[(a0 >> 16) & 0xFF] << 16 | s[(a1 >> 8) & 0xFF] << 8 | s[a2 & 0xFF]) ^ w[43]
    return struct.pack(">4I", c0, c1, c2, c3)
