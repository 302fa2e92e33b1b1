"""Rabbit stream cipher (128-bit key, 128 keystream bits per iteration).

Internal state spans 513 bits: eight 32-bit state variables, eight 32-bit
counters, and one carry bit. Each iteration advances the counters through
a carry chain, squares-and-folds the coupled state, and extracts 16
keystream bytes by half-word XOR. The optional 64-bit IV setup follows the
cipher's published specification so per-packet keystreams never repeat.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

from mavshield.ciphers.common import MASK32, check_key, xor_bytes

A = (0x4D34D34D, 0xD34D34D3, 0x34D34D34,
     0x4D34D34D, 0xD34D34D3, 0x34D34D34,
     0x4D34D34D, 0xD34D34D3)


@dataclass
class RabbitState:
    """8 state words, 8 counter words, and the counter carry bit."""
    x: list[int] = field(default_factory=lambda: [0] * 8)
    c: list[int] = field(default_factory=lambda: [0] * 8)
    carry: int = 0

    def copy(self) -> "RabbitState":
        return RabbitState(list(self.x), list(self.c), self.carry)


def _g(u: int, v: int) -> int:
    s = (u + v) & MASK32
    s = s * s
    return (s ^ (s >> 32)) & MASK32


def rabbit_next_state(state: RabbitState) -> None:
    """Advance counters (with carry chain) and the coupled state by one step."""
    c = state.c
    carry = state.carry
    for j in range(8):
        t = c[j] + A[j] + carry
        carry = t >> 32
        c[j] = t & MASK32
    state.carry = carry
    x = state.x
    g = [_g(x[j], c[j]) for j in range(8)]
    for j in range(8):
        gp = g[j - 1]
        gpp = g[j - 2]
        if j & 1:
            x[j] = (g[j] + ((gp << 8 | gp >> 24) & MASK32) + gpp) & MASK32
        else:
            rp = (gp << 16 | gp >> 16) & MASK32
            rpp = (gpp << 16 | gpp >> 16) & MASK32
            x[j] = (g[j] + rp + rpp) & MASK32


def rabbit_key_setup(key: bytes) -> RabbitState:
    """Expand a 16-byte key into the initial 513-bit state."""
    key = check_key(key, 16, "rabbit")
    k = struct.unpack("<8H", key)
    state = RabbitState()
    for j in range(8):
        if j % 2 == 0:
            state.x[j] = (k[(j + 1) % 8] << 16) | k[j]
            state.c[j] = (k[(j + 4) % 8] << 16) | k[(j + 5) % 8]
        else:
            state.x[j] = (k[(j + 5) % 8] << 16) | k[(j + 4) % 8]
            state.c[j] = (k[j] << 16) | k[(j + 1) % 8]
    for _ in range(4):
        rabbit_next_state(state)
    for j in range(8):
        state.c[j] ^= state.x[(j + 4) % 8]
    return state


def rabbit_iv_setup(state: RabbitState, iv: bytes) -> RabbitState:
    """Re-key the counters of a master (key-set-up) state with a 64-bit IV."""
    if len(iv) != 8:
        raise ValueError("rabbit IV must be 8 bytes")
    i0, i2 = struct.unpack("<II", iv)
    i1 = (i2 & 0xFFFF0000) | (i0 >> 16)
    i3 = ((i2 << 16) | (i0 & 0xFFFF)) & MASK32
    out = state.copy()
    words = (i0, i1, i2, i3)
    for j in range(8):
        out.c[j] ^= words[j % 4]
    for _ in range(4):
        rabbit_next_state(out)
    return out


def rabbit_keystream_block(state: RabbitState):
    """Advance one iteration and extract 16 keystream bytes."""
    rabbit_next_state(state)
    x = state.x
    s = []
    for j in range(4):
        lo = (x[2 * j] & 0xFFFF) ^ (x[(2 * j + 5) % 8] >> 16)
        hi = (x[2 * j] >> 16) ^ (x[(2 * j + 3) % 8] & 0xFFFF)
        s.append(lo | (hi << 16))
    return state, struct.pack("<4I", *s)


def rabbit_keystream(state: RabbitState, nbytes: int) -> bytes:
    out = bytearray()
    while len(out) < nbytes:
        _, block = rabbit_keystream_block(state)
        out += block
    return bytes(out[:nbytes])


def rabbit_xcrypt(key: bytes, data: bytes, iv: bytes | None = None) -> bytes:
    """XOR data with the Rabbit keystream; involution for a fixed (key, iv)."""
    if not data:
        return b""
    state = rabbit_key_setup(key)
    if iv is not None:
        state = rabbit_iv_setup(state, iv)
    return xor_bytes(data, rabbit_keystream(state, len(data)))
