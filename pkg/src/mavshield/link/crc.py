"""X.25 checksum (CRC-16/MCRF4XX) as used for MAVLink frame integrity.

Seed 0xFFFF, reflected polynomial 0x8408, with the per-message CRC_EXTRA
byte folded in after the frame bytes so payload-layout mismatches fail
verification.
"""

from __future__ import annotations


def _build_table():
    table = []
    for byte in range(256):
        crc = byte
        for _ in range(8):
            crc = (crc >> 1) ^ 0x8408 if crc & 1 else crc >> 1
        table.append(crc)
    return tuple(table)


_TABLE = _build_table()


def crc_x25(data: bytes, crc_extra: int | None = None) -> int:
    """Checksum over data, then over the single crc_extra byte if given."""
    crc = 0xFFFF
    for byte in data:
        crc = (crc >> 8) ^ _TABLE[(crc ^ byte) & 0xFF]
    if crc_extra is not None:
        crc = (crc >> 8) ^ _TABLE[(crc ^ crc_extra) & 0xFF]
    return crc
