"""Unit-distance pair corpus: generation, encryption, and avalanche summary.

File formats (no headers):
  pt.bin — n records of 64 bytes, record = P(32) || P'(32), where P' is P
           with the least-significant bit of one uniformly chosen byte
           flipped.
  ct.bin — n records of 64 bytes, record = C(32) || C'(32); each 32-byte
           plaintext is encrypted as two independent block encryptions
           under one fixed (key, nonce) schedule, so ciphertext differences
           reflect only the cipher's own diffusion.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from mavshield.analysis.drbg import DeterministicRandom
from mavshield.ciphers.sbox import DEFAULT_TABLE, SubstitutionTable
from mavshield.ciphers.shield import (
    blocks_from_bytes,
    bytes_from_blocks,
    mavshield_encrypt_blocks,
    mavshield_key_schedule,
)
from mavshield.nist.bits import BitSequence

RECORD_LEN = 64
_CHUNK_RECORDS = 8192


def gen_unit_distance_pairs(n: int, seed: int, out_path: str | Path) -> Path:
    """Write n unit-distance plaintext pair records to out_path."""
    if n < 1:
        raise ValueError("need at least one pair")
    out_path = Path(out_path)
    rng = DeterministicRandom(seed)
    with out_path.open("wb") as fh:
        remaining = n
        while remaining:
            k = min(remaining, _CHUNK_RECORDS)
            raw = rng.take(33 * k)  # 32 plaintext bytes + 1 index byte each
            buf = np.frombuffer(raw, dtype=np.uint8).reshape(k, 33)
            p = buf[:, :32]
            idx = buf[:, 32] % 32  # 256 % 32 == 0, so this is unbiased
            records = np.empty((k, RECORD_LEN), dtype=np.uint8)
            records[:, :32] = p
            records[:, 32:] = p
            rows = np.arange(k)
            records[rows, 32 + idx] ^= 1
            fh.write(records.tobytes())
            remaining -= k
    return out_path


def _read_records(path: str | Path, chunk_records: int = _CHUNK_RECORDS):
    path = Path(path)
    size = path.stat().st_size
    if size == 0 or size % RECORD_LEN:
        raise ValueError(
            f"{path}: size {size} is not a positive multiple of {RECORD_LEN}")
    with path.open("rb") as fh:
        while True:
            chunk = fh.read(RECORD_LEN * chunk_records)
            if not chunk:
                break
            yield chunk


def encrypt_pairs(pt_path: str | Path, key: bytes, nonce: int,
                  out_path: str | Path,
                  table: SubstitutionTable = DEFAULT_TABLE) -> Path:
    """Encrypt every 32-byte plaintext in pt.bin as two ECB blocks."""
    out_path = Path(out_path)
    schedule = mavshield_key_schedule(key, nonce, table)
    with out_path.open("wb") as fh:
        for chunk in _read_records(pt_path):
            words = blocks_from_bytes(chunk)
            fh.write(bytes_from_blocks(mavshield_encrypt_blocks(words, schedule, table)))
    return out_path


@dataclass
class AvalancheStats:
    n_pairs: int
    mean_hd: float
    stdev_hd: float
    histogram: tuple[int, ...]  # counts per Hamming distance 0..256


def avalanche_stats(ct_path: str | Path) -> AvalancheStats:
    """Per-record Hamming distance between C and C', aggregated."""
    hist = np.zeros(257, dtype=np.int64)
    total = 0
    sum_hd = 0
    sum_sq = 0
    for chunk in _read_records(ct_path):
        rec = np.frombuffer(chunk, dtype=np.uint8).reshape(-1, RECORD_LEN)
        delta = rec[:, :32] ^ rec[:, 32:]
        hd = np.bitwise_count(delta).sum(axis=1, dtype=np.int64)
        hist += np.bincount(hd, minlength=257)
        total += len(hd)
        sum_hd += int(hd.sum())
        sum_sq += int((hd.astype(np.int64) ** 2).sum())
    mean = sum_hd / total
    var = sum_sq / total - mean * mean
    return AvalancheStats(n_pairs=total, mean_hd=mean,
                          stdev_hd=float(np.sqrt(max(var, 0.0))),
                          histogram=tuple(int(v) for v in hist))


STREAM_MODES = ("pairs", "c_only", "xor")


def corpus_to_bitstreams(ct_path: str | Path, n_sequences: int,
                         bits_per_sequence: int,
                         stream: str = "pairs") -> list[BitSequence]:
    """Slice the ciphertext corpus into disjoint MSB-first bit sequences.

    stream selects the bytes fed to the slicer:
      pairs  — record bytes in file order, C || C' (the default). Note the
               pair construction leaves the unaffected block identical in C
               and C', so this stream carries verbatim duplicates 256 bits
               apart, which randomness tests with wide blocks rightly flag.
      c_only — the C half of each record: the cipher's output distribution
               without the constructed duplication.
      xor    — C xor C' per record (the raw ciphertext difference).
    """
    if n_sequences < 1 or bits_per_sequence < 1:
        raise ValueError("need at least one sequence and one bit")
    if stream not in STREAM_MODES:
        raise ValueError(f"stream must be one of {STREAM_MODES}, got {stream!r}")
    total_bits = n_sequences * bits_per_sequence
    path = Path(ct_path)
    size = path.stat().st_size
    if size == 0 or size % RECORD_LEN:
        raise ValueError(f"{path}: size {size} is not a positive multiple of {RECORD_LEN}")
    avail = size if stream == "pairs" else size // 2
    if avail * 8 < total_bits:
        raise ValueError(
            f"insufficient data: need {total_bits} bits, file provides {avail * 8}")
    chunks = []
    got = 0
    for chunk in _read_records(path):
        if stream == "pairs":
            chunks.append(chunk)
        else:
            rec = np.frombuffer(chunk, dtype=np.uint8).reshape(-1, RECORD_LEN)
            if stream == "c_only":
                chunks.append(rec[:, :32].tobytes())
            else:
                chunks.append((rec[:, :32] ^ rec[:, 32:]).tobytes())
        got += len(chunks[-1])
        if got * 8 >= total_bits:
            break
    data = b"".join(chunks)
    bits = np.unpackbits(np.frombuffer(data, dtype=np.uint8))[:total_bits]
    return [BitSequence.from_bits(bits[i * bits_per_sequence:(i + 1) * bits_per_sequence])
            for i in range(n_sequences)]
