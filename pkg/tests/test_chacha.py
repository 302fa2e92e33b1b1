import random

import pytest

from mavshield.ciphers.chacha import (
    CONSTANTS,
    _block_from_state,
    chacha20_block,
    chacha20_init_state,
    chacha20_quarter_round,
    chacha20_rounds,
    chacha20_xcrypt,
)
from mavshield.ciphers.common import MASK32, InvalidKeyError, rotr32
from conftest import kats_for

KEY = bytes(range(32))


def test_init_state_layout():
    state = chacha20_init_state(KEY, bytes(12), 7)
    assert tuple(state[:4]) == CONSTANTS
    assert state[12] == 7
    assert state[13:] == [0, 0, 0]


def test_quarter_round_published_vector():
    state = [0] * 16
    state[0], state[1], state[2], state[3] = (
        0x11111111, 0x01020304, 0x9B8D6F43, 0x01234567)
    chacha20_quarter_round(state, 0, 1, 2, 3)
    assert state[:4] == [0xEA2A92F4, 0xCB1CF8CE, 0x4581472E, 0x5881C4BB]


def test_quarter_round_zero_fixed_point():
    state = [0] * 16
    chacha20_quarter_round(state, 0, 4, 8, 12)
    assert state == [0] * 16


def _quarter_round_inverse(state, i, j, k, l):
    a, b, c, d = state[i], state[j], state[k], state[l]
    b = rotr32(b, 7) ^ c
    c = (c - d) & MASK32
    d = rotr32(d, 8) ^ a
    a = (a - b) & MASK32
    b = rotr32(b, 12) ^ c
    c = (c - d) & MASK32
    d = rotr32(d, 16) ^ a
    a = (a - b) & MASK32
    state[i], state[j], state[k], state[l] = a, b, c, d


def test_quarter_round_is_bijective():
    rng = random.Random(13)
    for _ in range(10_000):
        state = [rng.getrandbits(32) for _ in range(16)]
        mixed = chacha20_quarter_round(list(state), 1, 6, 11, 12)
        _quarter_round_inverse(mixed, 1, 6, 11, 12)
        assert mixed == state


def test_block_published_vector():
    for _, key, iv, pt, ct in kats_for("chacha20_block"):
        counter = int.from_bytes(iv[:4], "little")
        assert chacha20_block(key, iv[4:], counter) == ct


def test_block_deterministic():
    nonce = bytes(range(12))
    assert chacha20_block(KEY, nonce, 3) == chacha20_block(KEY, nonce, 3)


def test_consecutive_counters_differ():
    nonce = bytes(range(12))
    rng = random.Random(14)
    for _ in range(200):
        c = rng.getrandbits(32) & 0x7FFFFFFF
        assert chacha20_block(KEY, nonce, c) != chacha20_block(KEY, nonce, c + 1)


def test_unrolled_block_matches_quarter_round_composition():
    rng = random.Random(15)
    for _ in range(50):
        state = chacha20_init_state(rng.randbytes(32), rng.randbytes(12),
                                    rng.getrandbits(32))
        import struct
        working = chacha20_rounds(state)
        expected = struct.pack(
            "<16I", *((w + s) & MASK32 for w, s in zip(working, state)))
        assert _block_from_state(state) == expected


def test_message_published_vector():
    for _, key, iv, pt, ct in kats_for("chacha20"):
        counter = int.from_bytes(iv[:4], "little")
        assert chacha20_xcrypt(key, iv[4:], counter, pt) == ct
        assert chacha20_xcrypt(key, iv[4:], counter, ct) == pt


def test_xcrypt_empty_and_involution():
    nonce = bytes(12)
    assert chacha20_xcrypt(KEY, nonce, 0, b"") == b""
    rng = random.Random(16)
    for n in (1, 63, 64, 65, 200):
        m = rng.randbytes(n)
        c = chacha20_xcrypt(KEY, nonce, 5, m)
        assert len(c) == n
        assert chacha20_xcrypt(KEY, nonce, 5, c) == m


def test_block_counter_concatenation():
    # 128 bytes of keystream equals the two block outputs at c and c+1
    nonce = bytes(range(12))
    data = bytes(128)
    ks = chacha20_xcrypt(KEY, nonce, 9, data)
    assert ks == chacha20_block(KEY, nonce, 9) + chacha20_block(KEY, nonce, 10)


def test_key_and_nonce_validation():
    with pytest.raises(InvalidKeyError):
        chacha20_block(bytes(16), bytes(12), 0)
    with pytest.raises(ValueError):
        chacha20_block(KEY, bytes(8), 0)
