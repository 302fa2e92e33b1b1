"""Per-message metadata: checksum seed byte and declared payload length.

A definitions file has one message per line, whitespace separated::

    # msgid name crc_extra max_len
    0 HEARTBEAT 50 9

Lines starting with ``#`` (and inline ``#`` comments) are ignored.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path


@dataclass(frozen=True)
class MessageDef:
    msgid: int
    name: str
    crc_extra: int
    max_len: int

    def __post_init__(self):
        if not 0 <= self.msgid < (1 << 24):
            raise ValueError(f"msgid out of range: {self.msgid}")
        if not 0 <= self.crc_extra <= 255:
            raise ValueError(f"crc_extra out of range: {self.crc_extra}")
        if not 0 <= self.max_len <= 255:
            raise ValueError(f"max_len out of range: {self.max_len}")


# Common telemetry set; anything else comes from a definitions file.
_BUILTIN = (
    MessageDef(0, "HEARTBEAT", 50, 9),
    MessageDef(1, "SYS_STATUS", 124, 31),
    MessageDef(2, "SYSTEM_TIME", 137, 12),
    MessageDef(4, "PING", 237, 14),
    MessageDef(30, "ATTITUDE", 39, 28),
    MessageDef(33, "GLOBAL_POSITION_INT", 104, 28),
    MessageDef(70, "RC_CHANNELS_OVERRIDE", 124, 18),
    MessageDef(74, "VFR_HUD", 20, 20),
    MessageDef(76, "COMMAND_LONG", 152, 33),
)


def builtin_defs() -> dict[int, MessageDef]:
    return {d.msgid: d for d in _BUILTIN}


def load_defs(path: str | Path) -> dict[int, MessageDef]:
    """Parse a definitions file; msgids must be unique within the table."""
    table: dict[int, MessageDef] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 4:
            raise ValueError(f"{path}:{lineno}: expected 'msgid name crc_extra max_len'")
        try:
            d = MessageDef(int(parts[0]), parts[1], int(parts[2]), int(parts[3]))
        except ValueError as exc:
            raise ValueError(f"{path}:{lineno}: {exc}") from exc
        if d.msgid in table:
            raise ValueError(f"{path}:{lineno}: duplicate msgid {d.msgid}")
        table[d.msgid] = d
    return table


def dump_defs(table: dict[int, MessageDef], path: str | Path) -> None:
    lines = ["# msgid name crc_extra max_len"]
    for d in sorted(table.values(), key=lambda d: d.msgid):
        lines.append(f"{d.msgid} {d.name} {d.crc_extra} {d.max_len}")
    Path(path).write_text("\n".join(lines) + "\n")
