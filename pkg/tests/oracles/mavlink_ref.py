"""Independent straight-line reference for MAVLink 2.0 framing.

Transcribed directly from the published packet layout, with the checksum
anchored to the CRC-16/MCRF4XX catalog check value; deliberately shares no
code with the package implementation.
"""

import struct


def ref_crc(data, crc=0xFFFF):
    for byte in data:
        crc ^= byte
        for _ in range(8):
            crc = (crc >> 1) ^ 0x8408 if crc & 1 else crc >> 1
    return crc & 0xFFFF


def ref_frame(msgid, payload, seq=0, sysid=1, compid=1, crc_extra=0,
              incompat=0, compat=0):
    hdr = struct.pack("<BBBBBBB", 0xFD, len(payload), incompat, compat,
                      seq, sysid, compid) + msgid.to_bytes(3, "little")
    crc = ref_crc(hdr[1:] + payload + bytes([crc_extra]))
    return hdr + payload + struct.pack("<H", crc)


def ref_heartbeat(seq, sysid, compid, custom_mode, mtype, autopilot,
                  base_mode, system_status, version):
    payload = struct.pack("<IBBBBB", custom_mode, mtype, autopilot,
                          base_mode, system_status, version)
    trimmed = payload
    while len(trimmed) > 1 and trimmed[-1] == 0:
        trimmed = trimmed[:-1]
    return ref_frame(0, trimmed, seq=seq, sysid=sysid, compid=compid, crc_extra=50)


# Reference capture: HEARTBEAT frames produced by this transcription, frozen
# so regressions in the package codec are caught against fixed bytes.
CAPTURED_HEARTBEATS = (
    (dict(seq=0, sysid=1, compid=1, custom_mode=0, mtype=2, autopilot=3,
          base_mode=81, system_status=4, version=3),
     "fd090000000101000000000000000203510403e71e"),
    (dict(seq=42, sysid=255, compid=190, custom_mode=67371008, mtype=6,
          autopilot=8, base_mode=192, system_status=4, version=3),
     "fd0900002affbe000000000004040608c00403b805"),
)
