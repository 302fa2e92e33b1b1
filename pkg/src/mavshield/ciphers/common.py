"""Shared word arithmetic and key-material validation helpers."""

from __future__ import annotations

MASK32 = 0xFFFFFFFF
MASK64 = 0xFFFFFFFFFFFFFFFF
MASK128 = (1 << 128) - 1


class InvalidKeyError(ValueError):
    """Key material does not match the suite's declared width."""


def rotl32(x: int, r: int) -> int:
    r &= 31
    return ((x << r) | (x >> (32 - r))) & MASK32 if r else x & MASK32


def rotr32(x: int, r: int) -> int:
    r &= 31
    return ((x >> r) | (x << (32 - r))) & MASK32 if r else x & MASK32


def rotl64(x: int, r: int) -> int:
    r &= 63
    return ((x << r) | (x >> (64 - r))) & MASK64 if r else x & MASK64


def rotr64(x: int, r: int) -> int:
    r &= 63
    return ((x >> r) | (x << (64 - r))) & MASK64 if r else x & MASK64


def xor_bytes(data: bytes, keystream: bytes) -> bytes:
    """XOR data with the first len(data) bytes of keystream."""
    n = len(data)
    a = int.from_bytes(data, "little")
    b = int.from_bytes(keystream[:n], "little")
    return (a ^ b).to_bytes(n, "little")


def check_key(key: bytes, expected_len: int, suite: str) -> bytes:
    if not isinstance(key, (bytes, bytearray)):
        raise InvalidKeyError(f"{suite}: key must be bytes, got {type(key).__name__}")
    if len(key) != expected_len:
        raise InvalidKeyError(
            f"{suite}: key must be {expected_len} bytes, got {len(key)}")
    return bytes(key)


def parse_hex(text: str, expected_len: int | None = None, what: str = "value") -> bytes:
    """Decode a lowercase hex string used at module boundaries."""
    try:
        raw = bytes.fromhex(text)
    except ValueError as exc:
        raise ValueError(f"{what}: not a valid hex string: {text!r}") from exc
    if expected_len is not None and len(raw) != expected_len:
        raise ValueError(
            f"{what}: expected {expected_len} bytes ({2 * expected_len} hex chars), "
            f"got {len(raw)}")
    return raw
