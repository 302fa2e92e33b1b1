"""Desk-scale throughput benchmark over the full suite roster.

Each cell runs a tight seal/open loop on pre-generated frames and reports
steady-state payload throughput after a warm-up pass (monotonic clock,
median of 5 measurement reps). Battery, RAM, and autopilot CPU figures
from flight hardware are deliberately out of scope; throughput and
relative overhead versus the unencrypted baseline are the desk-scale
comparables.
"""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from mavshield.analysis.drbg import DeterministicRandom
from mavshield.ciphers import SUITE_NAMES, key_size
from mavshield.link.channel import ChannelState, open_payload, seal_payload
from mavshield.link.defs import MessageDef
from mavshield.link.frame import MavFrame

BENCH_MSGID = 4242
_REPS = 5


@dataclass
class BenchRow:
    suite: str
    payload_size: int
    throughput: float  # payload bytes per second through seal+open
    frames_per_second: float
    relative_overhead: float  # percent versus the `none` suite


def _make_channels(suite: str, size: int, rng: DeterministicRandom):
    defs = {BENCH_MSGID: MessageDef(BENCH_MSGID, "BENCH", 7, size)}
    key = rng.take(key_size(suite))
    nonce = int.from_bytes(rng.take(8), "big")
    tx = ChannelState(suite=suite, key=key, session_nonce=nonce, defs=defs)
    rx = ChannelState(suite=suite, key=key, session_nonce=nonce, defs=defs)
    return tx, rx


def _make_frames(size: int, count: int, rng: DeterministicRandom):
    frames = []
    for _ in range(count):
        payload = rng.take(size)
        if size:  # avoid trailing-zero trimming so every frame moves `size` bytes
            payload = payload[:-1] + bytes([payload[-1] | 0x01])
        frames.append(MavFrame(msgid=BENCH_MSGID, payload=payload))
    return frames


def _run_cell(suite: str, size: int, duration_per_cell: float,
              min_bytes: int, seed: int) -> tuple[float, float]:
    rng = DeterministicRandom(seed)
    tx, rx = _make_channels(suite, size, rng)
    batch = _make_frames(size, max(1, min(256, min_bytes // max(size, 1) + 1)), rng)
    # warm-up, with a one-time round-trip sanity check
    wire = seal_payload(tx, batch[0])
    opened = open_payload(rx, wire)
    if opened.payload != batch[0].payload:
        raise AssertionError(f"{suite}: benchmark round-trip failed")
    rates = []
    frame_rates = []
    rep_budget = max(duration_per_cell / _REPS, 0.02)
    for _ in range(_REPS):
        done_bytes = 0
        done_frames = 0
        start = time.perf_counter()
        while True:
            for frame in batch:
                open_payload(rx, seal_payload(tx, frame))
            done_bytes += sum(len(f.payload) for f in batch)
            done_frames += len(batch)
            elapsed = time.perf_counter() - start
            if elapsed >= rep_budget and done_bytes >= min_bytes:
                break
        rates.append(done_bytes / elapsed)
        frame_rates.append(done_frames / elapsed)
    return statistics.median(rates), statistics.median(frame_rates)


def bench_suites(suites: list[str] | None = None,
                 payload_sizes: list[int] | None = None,
                 duration_per_cell: float = 0.5,
                 min_bytes: int = 0,
                 seed: int = 0) -> list[BenchRow]:
    """Measure every (suite, payload size) cell; the `none` baseline is
    always included so relative overhead is well-defined."""
    if duration_per_cell < 0.1:
        raise ValueError("duration_per_cell must be at least 0.1 s")
    suites = list(suites) if suites else list(SUITE_NAMES)
    for s in suites:
        key_size(s)  # raises on unknown suite names
    if "none" not in suites:
        suites.insert(0, "none")
    payload_sizes = sorted(set(payload_sizes or [255]))
    for size in payload_sizes:
        if not 0 <= size <= 255:
            raise ValueError(f"payload size out of range: {size}")
    baseline: dict[int, float] = {}
    raw: list[tuple[str, int, float, float]] = []
    for size in payload_sizes:
        for suite in suites:
            bps, fps = _run_cell(suite, size, duration_per_cell, min_bytes, seed)
            raw.append((suite, size, bps, fps))
            if suite == "none":
                baseline[size] = bps
    rows = []
    for suite, size, bps, fps in raw:
        overhead = 0.0 if suite == "none" else 100.0 * (baseline[size] / bps - 1.0)
        rows.append(BenchRow(suite, size, bps, fps, overhead))
    rows.sort(key=lambda r: (r.suite, r.payload_size))
    return rows


CSV_HEADER = "suite,payload_size,throughput_Bps,frames_per_s,overhead_pct"

_TABLE_NOTE = ("desk-scale seal/open loop; throughput and overhead vs the "
               "unencrypted baseline stand in for flight-hardware power/RAM/CPU")


def render_report(rows: list[BenchRow], format: str = "table") -> str:
    """Deterministic text rendering of benchmark rows."""
    if format == "csv":
        lines = [CSV_HEADER]
        for r in rows:
            lines.append(f"{r.suite},{r.payload_size},{r.throughput:.1f},"
                         f"{r.frames_per_second:.1f},{r.relative_overhead:.2f}")
        return "\n".join(lines) + "\n"
    if format == "table":
        lines = [f"# {_TABLE_NOTE}"]
        lines.append(f"{'suite':<14} {'size':>5} {'throughput B/s':>16} "
                     f"{'frames/s':>12} {'overhead %':>11}")
        for r in rows:
            lines.append(f"{r.suite:<14} {r.payload_size:>5} {r.throughput:>16.1f} "
                         f"{r.frames_per_second:>12.1f} {r.relative_overhead:>11.2f}")
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown report format: {format!r}")
