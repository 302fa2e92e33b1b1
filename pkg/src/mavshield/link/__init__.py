"""MAVLink 2.0 frame codec and the encrypted-payload channel pipeline."""

from mavshield.link.channel import (
    ChannelState,
    DesyncError,
    channel_from_config,
    derive_packet_iv,
    open_payload,
    seal_payload,
)
from mavshield.link.crc import crc_x25
from mavshield.link.defs import MessageDef, builtin_defs, load_defs
from mavshield.link.frame import (
    BadMagicError,
    ChecksumMismatchError,
    FrameError,
    MavFrame,
    MissingDefinitionError,
    TruncatedFrameError,
    parse_frame,
    serialize_frame,
)

__all__ = [
    "BadMagicError",
    "ChannelState",
    "ChecksumMismatchError",
    "DesyncError",
    "FrameError",
    "MavFrame",
    "MessageDef",
    "MissingDefinitionError",
    "TruncatedFrameError",
    "builtin_defs",
    "channel_from_config",
    "crc_x25",
    "derive_packet_iv",
    "load_defs",
    "open_payload",
    "parse_frame",
    "seal_payload",
    "serialize_frame",
]
