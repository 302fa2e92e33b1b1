"""ChaCha20 stream cipher (256-bit key, 96-bit nonce, 32-bit block counter).

State is a 4x4 grid of 32-bit words: four constants, eight key words, the
counter at index 12, and three nonce words. Each block runs 10 double
rounds (column then diagonal quarter rounds) and serializes the working
state added to the input state.
"""

from __future__ import annotations

import struct

from mavshield.ciphers.common import MASK32, check_key, rotl32, xor_bytes

CONSTANTS = (0x61707865, 0x3320646E, 0x79622D32, 0x6B206574)

COLUMN_ROUNDS = ((0, 4, 8, 12), (1, 5, 9, 13), (2, 6, 10, 14), (3, 7, 11, 15))
DIAGONAL_ROUNDS = ((0, 5, 10, 15), (1, 6, 11, 12), (2, 7, 8, 13), (3, 4, 9, 14))


def chacha20_init_state(key: bytes, nonce: bytes, counter: int) -> list[int]:
    """Build the 16-word input grid from constants, key, counter, nonce."""
    check_key(key, 32, "chacha20")
    if len(nonce) != 12:
        raise ValueError("chacha20 nonce must be 12 bytes")
    state = list(CONSTANTS)
    state.extend(struct.unpack("<8I", key))
    state.append(counter & MASK32)
    state.extend(struct.unpack("<3I", nonce))
    return state


def chacha20_quarter_round(state: list[int], i: int, j: int, k: int, l: int) -> list[int]:
    """Apply the add/xor/rotate quarter-round mix to four words in place."""
    a, b, c, d = state[i], state[j], state[k], state[l]
    a = (a + b) & MASK32
    d = rotl32(d ^ a, 16)
    c = (c + d) & MASK32
    b = rotl32(b ^ c, 12)
    a = (a + b) & MASK32
    d = rotl32(d ^ a, 8)
    c = (c + d) & MASK32
    b = rotl32(b ^ c, 7)
    state[i], state[j], state[k], state[l] = a, b, c, d
    return state


def chacha20_rounds(state: list[int]) -> list[int]:
    """Run the 10 double rounds on a copy of the input grid."""
    x = list(state)
    for _ in range(10):
        for quarter in COLUMN_ROUNDS:
            chacha20_quarter_round(x, *quarter)
        for quarter in DIAGONAL_ROUNDS:
            chacha20_quarter_round(x, *quarter)
    return x


def chacha20_block(key: bytes, nonce: bytes, counter: int) -> bytes:
    """Produce one 64-byte keystream block."""
    state = chacha20_init_state(key, nonce, counter)
    return _block_from_state(state)


def _block_from_state(state: list[int]) -> bytes:
    # Unrolled hot path; equivalence with chacha20_rounds is under test.
    x0, x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, x14, x15 = state
    for _ in range(10):
        x0 = (x0 + x4) & 0xFFFFFFFF; x12 ^= x0; x12 = ((x12 << 16) | (x12 >> 16)) & 0xFFFFFFFF
        x8 = (x8 + x12) & 0xFFFFFFFF; x4 ^= x8; x4 = ((x4 << 12) | (x4 >> 20)) & 0xFFFFFFFF
        x0 = (x0 + x4) & 0xFFFFFFFF; x12 ^= x0; x12 = ((x12 << 8) | (x12 >> 24)) & 0xFFFFFFFF
        x8 = (x8 + x12) & 0xFFFFFFFF; x4 ^= x8; x4 = ((x4 << 7) | (x4 >> 25)) & 0xFFFFFFFF
        x1 = (x1 + x5) & 0xFFFFFFFF; x13 ^= x1; x13 = ((x13 << 16) | (x13 >> 16)) & 0xFFFFFFFF
        x9 = (x9 + x13) & 0xFFFFFFFF; x5 ^= x9; x5 = ((x5 << 12) | (x5 >> 20)) & 0xFFFFFFFF
        x1 = (x1 + x5) & 0xFFFFFFFF; x13 ^= x1; x13 = ((x13 << 8) | (x13 >> 24)) & 0xFFFFFFFF
        x9 = (x9 + x13) & 0xFFFFFFFF; x5 ^= x9; x5 = ((x5 << 7) | (x5 >> 25)) & 0xFFFFFFFF
        x2 = (x2 + x6) & 0xFFFFFFFF; x14 ^= x2; x14 = ((x14 << 16) | (x14 >> 16)) & 0xFFFFFFFF
        x10 = (x10 + x14) & 0xFFFFFFFF; x6 ^= x10; x6 = ((x6 << 12) | (x6 >> 20)) & 0xFFFFFFFF
        x2 = (x2 + x6) & 0xFFFFFFFF; x14 ^= x2; x14 = ((x14 << 8) | (x14 >> 24)) & 0xFFFFFFFF
        x10 = (x10 + x14) & 0xFFFFFFFF; x6 ^= x10; x6 = ((x6 << 7) | (x6 >> 25)) & 0xFFFFFFFF
        x3 = (x3 + x7) & 0xFFFFFFFF; x15 ^= x3; x15 = ((x15 << 16) | (x15 >> 16)) & 0xFFFFFFFF
        x11 = (x11 + x15) & 0xFFFFFFFF; x7 ^= x11; x7 = ((x7 << 12) | (x7 >> 20)) & 0xFFFFFFFF
        x3 = (x3 + x7) & 0xFFFFFFFF; x15 ^= x3; x15 = ((x15 << 8) | (x15 >> 24)) & 0xFFFFFFFF
        x11 = (x11 + x15) & 0xFFFFFFFF; x7 ^= x11; x7 = ((x7 << 7) | (x7 >> 25)) & 0xFFFFFFFF
        x0 = (x0 + x5) & 0xFFFFFFFF; x15 ^= x0; x15 = ((x15 << 16) | (x15 >> 16)) & 0xFFFFFFFF
        x10 = (x10 + x15) & 0xFFFFFFFF; x5 ^= x10; x5 = ((x5 << 12) | (x5 >> 20)) & 0xFFFFFFFF
        x0 = (x0 + x5) & 0xFFFFFFFF; x15 ^= x0; x15 = ((x15 << 8) | (x15 >> 24)) & 0xFFFFFFFF
        x10 = (x10 + x15) & 0xFFFFFFFF; x5 ^= x10; x5 = ((x5 << 7) | (x5 >> 25)) & 0xFFFFFFFF
        x1 = (x1 + x6) & 0xFFFFFFFF; x12 ^= x1; x12 = ((x12 << 16) | (x12 >> 16)) & 0xFFFFFFFF
        x11 = (x11 + x12) & 0xFFFFFFFF; x6 ^= x11; x6 = ((x6 << 12) | (x6 >> 20)) & 0xFFFFFFFF
        x1 = (x1 + x6) & 0xFFFFFFFF; x12 ^= x1; x12 = ((x12 << 8) | (x12 >> 24)) & 0xFFFFFFFF
        x11 = (x11 + x12) & 0xFFFFFFFF; x6 ^= x11; x6 = ((x6 << 7) | (x6 >> 25)) & 0xFFFFFFFF
        x2 = (x2 + x7) & 0xFFFFFFFF; x13 ^= x2; x13 = ((x13 << 16) | (x13 >> 16)) & 0xFFFFFFFF
        x8 = (x8 + x13) & 0xFFFFFFFF; x7 ^= x8; x7 = ((x7 << 12) | (x7 >> 20)) & 0xFFFFFFFF
        x2 = (x2 + x7) & 0xFFFFFFFF; x13 ^= x2; x13 = ((x13 << 8) | (x13 >> 24)) & 0xFFFFFFFF
        x8 = (x8 + x13) & 0xFFFFFFFF; x7 ^= x8; x7 = ((x7 << 7) | (x7 >> 25)) & 0xFFFFFFFF
        x3 = (x3 + x4) & 0xFFFFFFFF; x14 ^= x3; x14 = ((x14 << 16) | (x14 >> 16)) & 0xFFFFFFFF
        x9 = (x9 + x14) & 0xFFFFFFFF; x4 ^= x9; x4 = ((x4 << 12) | (x4 >> 20)) & 0xFFFFFFFF
        x3 = (x3 + x4) & 0xFFFFFFFF; x14 ^= x3; x14 = ((x14 << 8) | (x14 >> 24)) & 0xFFFFFFFF
        x9 = (x9 + x14) & 0xFFFFFFFF; x4 ^= x9; x4 = ((x4 << 7) | (x4 >> 25)) & 0xFFFFFFFF
    working = (x0, x1, x2, x3, x4, x5, x6, x7, x8, x9, x10, x11, x12, x13, x14, x15)
    return struct.pack("<16I", *((w + s) & 0xFFFFFFFF for w, s in zip(working, state)))


def chacha20_xcrypt(key: bytes, nonce: bytes, counter: int, data: bytes) -> bytes:
    """XOR data with the keystream of successive blocks; length preserving."""
    if not data:
        return b""
    out = bytearray()
    state = chacha20_init_state(key, nonce, counter)
    for offset in range(0, len(data), 64):
        state[12] = counter & MASK32
        block = _block_from_state(state)
        chunk = data[offset:offset + 64]
        out += xor_bytes(chunk, block)
        counter += 1
    return bytes(out)
