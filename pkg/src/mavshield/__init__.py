"""Payload encryption toolkit for MAVLink 2.0 links.

Provides five interchangeable cipher suites (MAVShield, Speck-CTR in three
key sizes, AES-128-CTR, ChaCha20, Rabbit), a MAVLink 2.0 frame codec with
encrypt-before-checksum sealing, corpus generators for differential
analysis, and a statistical randomness battery.
"""

from mavshield.ciphers import SUITE_NAMES, key_size, make_stream
from mavshield.link.channel import ChannelState, open_payload, seal_payload
from mavshield.link.frame import MavFrame, parse_frame, serialize_frame

__version__ = "0.1.0"

__all__ = [
    "SUITE_NAMES",
    "key_size",
    "make_stream",
    "ChannelState",
    "MavFrame",
    "open_payload",
    "parse_frame",
    "seal_payload",
    "serialize_frame",
    "__version__",
]
