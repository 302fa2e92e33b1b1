"""MAVLink 2.0 wire frame codec.

Layout: magic 0xFD, len, incompat_flags, compat_flags, seq, sysid, compid,
msgid (3 bytes little-endian), payload, checksum (2 bytes little-endian),
optional 13-byte signature (present iff incompat_flags bit 0). The
checksum covers the bytes from len through payload (magic excluded) plus
the message's CRC_EXTRA byte.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass, field

from mavshield.link.crc import crc_x25
from mavshield.link.defs import MessageDef

MAGIC = 0xFD
HEADER_LEN = 10  # magic..msgid
SIGNATURE_LEN = 13
IFLAG_SIGNED = 0x01


class FrameError(Exception):
    """Base class for codec failures."""


class BadMagicError(FrameError):
    pass


class TruncatedFrameError(FrameError):
    pass


class ChecksumMismatchError(FrameError):
    pass


class MissingDefinitionError(FrameError):
    pass


@dataclass
class MavFrame:
    msgid: int
    payload: bytes = b""
    seq: int = 0
    sysid: int = 1
    compid: int = 1
    incompat_flags: int = 0
    compat_flags: int = 0
    signature: bytes | None = field(default=None)

    def __post_init__(self):
        if not 0 <= self.msgid < (1 << 24):
            raise ValueError(f"msgid out of range: {self.msgid}")
        if len(self.payload) > 255:
            raise ValueError(f"payload too long: {len(self.payload)} > 255")
        for name in ("seq", "sysid", "compid", "incompat_flags", "compat_flags"):
            v = getattr(self, name)
            if not 0 <= v <= 255:
                raise ValueError(f"{name} out of range: {v}")
        signed = bool(self.incompat_flags & IFLAG_SIGNED)
        if signed and (self.signature is None or len(self.signature) != SIGNATURE_LEN):
            raise ValueError("signed frame requires a 13-byte signature")
        if not signed and self.signature is not None:
            raise ValueError("signature present but incompat flag bit 0 unset")


def _crc_extra(msgid: int, defs: dict[int, MessageDef]) -> int:
    try:
        return defs[msgid].crc_extra
    except KeyError:
        raise MissingDefinitionError(f"no definition for msgid {msgid}") from None


def serialize_frame(frame: MavFrame, defs: dict[int, MessageDef]) -> bytes:
    """Emit the wire bytes; the checksum is computed over len..payload."""
    extra = _crc_extra(frame.msgid, defs)
    header = struct.pack(
        "<BBBBBBB", MAGIC, len(frame.payload), frame.incompat_flags,
        frame.compat_flags, frame.seq, frame.sysid, frame.compid)
    header += frame.msgid.to_bytes(3, "little")
    crc = crc_x25(header[1:] + frame.payload, extra)
    out = header + frame.payload + struct.pack("<H", crc)
    if frame.signature is not None:
        out += frame.signature
    return out


def parse_frame(data: bytes, defs: dict[int, MessageDef]) -> MavFrame:
    """Parse and validate one frame; the checksum is verified during parse."""
    if len(data) < 1:
        raise TruncatedFrameError("empty input")
    if data[0] != MAGIC:
        raise BadMagicError(f"expected magic 0xfd, got {data[0]:#04x}")
    if len(data) < HEADER_LEN + 2:
        raise TruncatedFrameError(f"frame shorter than minimum: {len(data)} bytes")
    (length, incompat, compat, seq, sysid, compid) = struct.unpack_from("<BBBBBB", data, 1)
    msgid = int.from_bytes(data[7:10], "little")
    total = HEADER_LEN + length + 2
    signed = bool(incompat & IFLAG_SIGNED)
    if signed:
        total += SIGNATURE_LEN
    if len(data) < total:
        raise TruncatedFrameError(
            f"need {total} bytes for declared length {length}, got {len(data)}")
    payload = data[HEADER_LEN:HEADER_LEN + length]
    (wire_crc,) = struct.unpack_from("<H", data, HEADER_LEN + length)
    extra = _crc_extra(msgid, defs)
    computed = crc_x25(data[1:HEADER_LEN + length], extra)
    if computed != wire_crc:
        raise ChecksumMismatchError(
            f"checksum mismatch: wire {wire_crc:#06x}, computed {computed:#06x}")
    signature = data[HEADER_LEN + length + 2:total] if signed else None
    return MavFrame(
        msgid=msgid, payload=payload, seq=seq, sysid=sysid, compid=compid,
        incompat_flags=incompat, compat_flags=compat, signature=signature)


def frame_size(frame: MavFrame) -> int:
    size = HEADER_LEN + len(frame.payload) + 2
    if frame.signature is not None:
        size += SIGNATURE_LEN
    return size
