"""Per-link crypto session: encrypt-then-checksum on send,
checksum-verify-then-decrypt on receive.

HEARTBEAT (msgid 0) always passes through unencrypted so the link stays
monitorable. Headers are never encrypted. Per-packet IVs are derived from
(session nonce, direction, extended sequence), so the wire format carries
no extra bytes; both endpoints share the session nonce out of band.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path

from mavshield.ciphers import key_size, make_stream, parse_hex
from mavshield.link.defs import MessageDef, builtin_defs
from mavshield.link.frame import FrameError, MavFrame, parse_frame, serialize_frame

HEARTBEAT_MSGID = 0
SEQ_WINDOW = 128

_DIRECTION_BYTE = {"to_uav": 0x01, "to_gcs": 0x02}


class DesyncError(FrameError):
    """Reconstructed extended sequence fell outside the detection window."""


@dataclass
class ChannelState:
    """One direction of a secured link. Single-owner; not thread-shared."""
    suite: str
    key: bytes = b""
    session_nonce: int = 0
    defs: dict[int, MessageDef] = field(default_factory=builtin_defs)
    direction: str = "to_uav"
    tx_counter: int = 0
    rx_counter: int = 0
    cipher: object = None  # injectable for instrumentation

    def __post_init__(self):
        if self.direction not in _DIRECTION_BYTE:
            raise ValueError(f"direction must be one of {sorted(_DIRECTION_BYTE)}")
        if self.cipher is None:
            self.cipher = make_stream(self.suite, self.key, self.session_nonce)


def derive_packet_iv(channel: ChannelState, direction: str, extended_seq: int) -> bytes:
    """session_nonce(8) || direction byte || 0x00 || extended_seq low 6 bytes.

    Deterministic and collision-free within a session for fewer than 2^48
    frames per direction.
    """
    return (
        (channel.session_nonce & ((1 << 64) - 1)).to_bytes(8, "big")
        + bytes((_DIRECTION_BYTE[direction], 0x00))
        + (extended_seq & ((1 << 48) - 1)).to_bytes(6, "big")
    )


def _trim_trailing_zeros(payload: bytes) -> bytes:
    # Trailing payload zeros are trimmed before encryption (never below one
    # byte) so the receiver can zero-extend after decrypting.
    n = len(payload)
    while n > 1 and payload[n - 1] == 0:
        n -= 1
    return payload[:n]


def seal_payload(channel: ChannelState, frame: MavFrame) -> bytes:
    """Encrypt the plaintext payload (unless exempt), then frame and checksum."""
    plaintext = _trim_trailing_zeros(frame.payload)
    ext_seq = channel.tx_counter
    if frame.msgid == HEARTBEAT_MSGID or channel.suite == "none":
        wire_payload = plaintext
    else:
        iv = derive_packet_iv(channel, channel.direction, ext_seq)
        wire_payload = channel.cipher.xcrypt(iv, plaintext)
    wire_frame = replace(frame, payload=wire_payload, seq=ext_seq & 0xFF)
    data = serialize_frame(wire_frame, channel.defs)
    channel.tx_counter = ext_seq + 1
    return data


def _reconstruct_seq(channel: ChannelState, seq: int) -> int:
    base = channel.rx_counter
    delta = (seq - (base & 0xFF) + SEQ_WINDOW) % 256 - SEQ_WINDOW
    ext = base + delta
    if ext < 0:
        raise DesyncError(
            f"seq {seq} maps to extended sequence {ext}, outside the window")
    return ext


def open_payload(channel: ChannelState, data: bytes) -> MavFrame:
    """Parse and verify the checksum first; decrypt only after it passes."""
    frame = parse_frame(data, channel.defs)
    ext_seq = _reconstruct_seq(channel, frame.seq)
    if frame.msgid == HEARTBEAT_MSGID or channel.suite == "none":
        payload = frame.payload
    else:
        iv = derive_packet_iv(channel, channel.direction, ext_seq)
        payload = channel.cipher.xcrypt(iv, frame.payload)
    declared = channel.defs[frame.msgid].max_len
    if len(payload) < declared:
        payload = payload + bytes(declared - len(payload))
    channel.rx_counter = max(channel.rx_counter, ext_seq + 1)
    return replace(frame, payload=payload)


def load_channel_config(path: str | Path) -> dict[str, str]:
    """Flat ``key = value`` channel configuration."""
    config: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        k, v = line.split("=", 1)
        config[k.strip()] = v.strip()
    return config


def channel_from_config(path: str | Path, defs: dict[int, MessageDef] | None = None,
                        direction: str = "to_uav") -> ChannelState:
    config = load_channel_config(path)
    suite = config.get("suite", "none")
    key = b""
    if suite != "none":
        key = parse_hex(config["key_hex"], key_size(suite), "key_hex")
    nonce = 0
    if "session_nonce_hex" in config:
        nonce = int.from_bytes(parse_hex(config["session_nonce_hex"], 8,
                                         "session_nonce_hex"), "big")
    return ChannelState(suite=suite, key=key, session_nonce=nonce,
                        defs=defs if defs is not None else builtin_defs(),
                        direction=direction)
