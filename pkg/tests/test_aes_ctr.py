import random

import pytest

from mavshield.ciphers.aes import aes128_encrypt_block, expand_key_128
from mavshield.ciphers.common import InvalidKeyError
from mavshield.ciphers.ctr import counter_add, ctr_keystream, ctr_xcrypt
from conftest import kats_for


def test_fips_block_vector():
    for _, key, _, pt, ct in kats_for("aes128_block"):
        assert aes128_encrypt_block(pt, expand_key_128(key)) == ct


def test_ctr_published_vector():
    for _, key, iv, pt, ct in kats_for("aes128"):
        rk = expand_key_128(key)
        got = ctr_xcrypt(lambda b: aes128_encrypt_block(b, rk), iv, pt)
        assert got == ct
        assert ctr_xcrypt(lambda b: aes128_encrypt_block(b, rk), iv, ct) == pt


def test_key_length_check():
    with pytest.raises(InvalidKeyError):
        expand_key_128(bytes(24))


def test_ctr_empty():
    rk = expand_key_128(bytes(16))
    assert ctr_xcrypt(lambda b: aes128_encrypt_block(b, rk), bytes(16), b"") == b""


def test_ctr_involution_and_length():
    rk = expand_key_128(bytes(range(16)))
    fn = lambda b: aes128_encrypt_block(b, rk)
    rng = random.Random(20)
    iv = rng.randbytes(16)
    for n in (1, 15, 16, 17, 255, 4096):
        m = rng.randbytes(n)
        c = ctr_xcrypt(fn, iv, m)
        assert len(c) == n
        assert ctr_xcrypt(fn, iv, c) == m


def test_keystream_is_block_fn_over_successive_counters():
    rk = expand_key_128(bytes(range(16)))
    fn = lambda b: aes128_encrypt_block(b, rk)
    iv = bytes.fromhex("000102030405060708090a0b0c0d0eff")
    ks = ctr_keystream(fn, iv, 48)
    assert ks == fn(iv) + fn(counter_add(iv, 1)) + fn(counter_add(iv, 2))
    # encrypting zeros exposes the keystream
    assert ctr_xcrypt(fn, iv, bytes(48)) == ks


def test_counter_wraps_at_128_bits():
    assert counter_add(b"\xff" * 16, 1) == bytes(16)
    assert counter_add(b"\xff" * 16, 2) == bytes(15) + b"\x01"
    rk = expand_key_128(bytes(16))
    fn = lambda b: aes128_encrypt_block(b, rk)
    ks = ctr_keystream(fn, b"\xff" * 16, 32)
    assert ks == fn(b"\xff" * 16) + fn(bytes(16))


def test_counter_block_validation():
    with pytest.raises(ValueError):
        counter_add(bytes(8), 1)
    with pytest.raises(ValueError):
        ctr_keystream(lambda b: b, bytes(8), 16)
