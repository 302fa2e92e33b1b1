"""The ten statistical randomness tests applied to ciphertext corpora.

Each test maps a bit sequence to one or more p-values; a sequence passes a
test when every p-value exceeds the significance threshold (0.025 here).
Formulas follow the test suite's published specification; undersized
inputs raise SequenceTooShortError naming the violated minimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from mavshield.nist.bits import BitSequence
from mavshield.nist.special import erfc, igamc, normal_cdf

ALPHA = 0.025


class SequenceTooShortError(ValueError):
    pass


@dataclass(frozen=True)
class TestResult:
    kind: str
    p_values: tuple[float, ...]
    passed: bool
    params: dict = field(default_factory=dict)
    error: str | None = None

    @property
    def p_value(self) -> float:
        """Single summary value: the worst (minimum) p-value."""
        return min(self.p_values) if self.p_values else 0.0


def _require(cond: bool, message: str):
    if not cond:
        raise SequenceTooShortError(message)


# --------------------------------------------------------------------------

def frequency(seq: BitSequence):
    bits = seq.bits()
    n = seq.n
    s = 2 * int(bits.sum()) - n
    p = erfc(abs(s) / math.sqrt(n) / math.sqrt(2.0))
    return (p,), {"n": n}


def block_frequency(seq: BitSequence, M: int = 128):
    n = seq.n
    _require(n >= M, f"block_frequency needs n >= M ({M}), got {n}")
    N = n // M
    props = seq.bits()[:N * M].reshape(N, M).sum(axis=1, dtype=np.float64) / M
    chi = 4.0 * M * float(((props - 0.5) ** 2).sum())
    return (igamc(N / 2.0, chi / 2.0),), {"M": M, "N": N, "chi_sq": chi}


def runs(seq: BitSequence):
    bits = seq.bits()
    n = seq.n
    _require(n >= 2, f"runs needs n >= 2, got {n}")
    pi = int(bits.sum()) / n
    tau = 2.0 / math.sqrt(n)
    # prerequisite from the frequency test: a heavily biased sequence fails
    # outright rather than dividing by ~0
    if abs(pi - 0.5) >= tau or pi in (0.0, 1.0):
        return (0.0,), {"pi": pi, "prerequisite_failed": True}
    v = 1 + int((bits[1:] != bits[:-1]).sum())
    p = erfc(abs(v - 2.0 * n * pi * (1 - pi))
             / (2.0 * math.sqrt(2.0 * n) * pi * (1 - pi)))
    return (p,), {"pi": pi, "v_obs": v}


_LONGEST_RUN_CLASSES = (
    # (min n, M, v_low, v_high, class probabilities)
    (750000, 10000, 10, 16, (0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727)),
    (6272, 128, 4, 9, (0.1174, 0.2430, 0.2493, 0.1752, 0.1027, 0.1124)),
    (128, 8, 1, 4, (0.2148, 0.3672, 0.2305, 0.1875)),
)


def longest_run(seq: BitSequence):
    n = seq.n
    _require(n >= 128, f"longest_run needs n >= 128, got {n}")
    for min_n, M, v_low, v_high, pi in _LONGEST_RUN_CLASSES:
        if n >= min_n:
            break
    N = n // M
    blocks = seq.bits()[:N * M].reshape(N, M)
    cur = np.zeros(N, dtype=np.int32)
    best = np.zeros(N, dtype=np.int32)
    for col in range(M):
        cur = (cur + 1) * blocks[:, col]
        np.maximum(best, cur, out=best)
    clipped = np.clip(best, v_low, v_high) - v_low
    nu = np.bincount(clipped, minlength=v_high - v_low + 1)
    K = len(pi) - 1
    chi = float((((nu - N * np.asarray(pi)) ** 2) / (N * np.asarray(pi))).sum())
    p = igamc(K / 2.0, chi / 2.0)
    return (p,), {"M": M, "N": N, "nu": tuple(int(v) for v in nu), "chi_sq": chi}


def cumulative_sums(seq: BitSequence):
    bits = seq.bits().astype(np.int64)
    n = seq.n
    x = 2 * bits - 1
    ps = []
    for direction in ("forward", "backward"):
        walk = np.cumsum(x if direction == "forward" else x[::-1])
        z = int(np.abs(walk).max())
        if z == 0:
            ps.append(0.0)  # constant alternation never strays; degenerate
            continue
        t1 = sum(normal_cdf((4 * k + 1) * z / math.sqrt(n))
                 - normal_cdf((4 * k - 1) * z / math.sqrt(n))
                 for k in range(math.floor((-n / z + 1) / 4),
                                math.floor((n / z - 1) / 4) + 1))
        t2 = sum(normal_cdf((4 * k + 3) * z / math.sqrt(n))
                 - normal_cdf((4 * k + 1) * z / math.sqrt(n))
                 for k in range(math.floor((-n / z - 3) / 4),
                                math.floor((n / z - 1) / 4) + 1))
        ps.append(min(max(1.0 - t1 + t2, 0.0), 1.0))
    return tuple(ps), {"n": n}


def _pattern_counts(bits: np.ndarray, n: int, m: int) -> np.ndarray:
    """Occurrences of all 2^m overlapping m-bit patterns, with wraparound."""
    ext = np.concatenate([bits, bits[:m - 1]]) if m > 1 else bits
    idx = np.zeros(n, dtype=np.int64)
    for j in range(m):
        idx = (idx << 1) | ext[j:j + n]
    return np.bincount(idx, minlength=1 << m)


def _psi_sq(bits: np.ndarray, n: int, m: int) -> float:
    if m <= 0:
        return 0.0
    counts = _pattern_counts(bits, n, m).astype(np.float64)
    return float((1 << m) / n * (counts ** 2).sum() - n)


def serial(seq: BitSequence, m: int = 2):
    n = seq.n
    _require(m >= 2, f"serial needs m >= 2, got {m}")
    _require(n >= (1 << m), f"serial with m={m} needs n >= {1 << m}, got {n}")
    bits = seq.bits()
    d1 = _psi_sq(bits, n, m) - _psi_sq(bits, n, m - 1)
    d2 = d1 - (_psi_sq(bits, n, m - 1) - _psi_sq(bits, n, m - 2))
    p1 = igamc(2 ** (m - 2), max(d1, 0.0) / 2.0)
    p2 = igamc(2 ** (m - 3), max(d2, 0.0) / 2.0)
    return (p1, p2), {"m": m, "del1": d1, "del2": d2}


def approximate_entropy(seq: BitSequence, m: int = 2):
    n = seq.n
    _require(m >= 1, f"approximate_entropy needs m >= 1, got {m}")
    _require(n >= (1 << m),
             f"approximate_entropy with m={m} needs n >= {1 << m}, got {n}")
    bits = seq.bits()

    def phi(mm: int) -> float:
        counts = _pattern_counts(bits, n, mm).astype(np.float64)
        nz = counts[counts > 0] / n
        return float((nz * np.log(nz)).sum())

    apen = phi(m) - phi(m + 1)
    chi = 2.0 * n * (math.log(2.0) - apen)
    p = igamc(2 ** (m - 1), max(chi, 0.0) / 2.0)
    return (p,), {"m": m, "apen": apen, "chi_sq": chi}


def _parse_template(template) -> np.ndarray:
    if isinstance(template, str):
        return np.array([int(c) for c in template], dtype=np.uint8)
    return np.asarray(template, dtype=np.uint8)


def non_overlapping_template(seq: BitSequence, template="000000001",
                             M: int | None = None):
    tmpl = _parse_template(template)
    m = len(tmpl)
    n = seq.n
    if M is None:
        M = n // 8
    _require(M > m, f"non_overlapping_template needs block M > {m}, got {M}")
    _require(n >= M, f"non_overlapping_template needs n >= M ({M}), got {n}")
    N = n // M
    bits = seq.bits()
    mu = (M - m + 1) / 2 ** m
    var = M * (1 / 2 ** m - (2 * m - 1) / 2 ** (2 * m))
    chi = 0.0
    counts = []
    for j in range(N):
        block = bits[j * M:(j + 1) * M]
        windows = np.lib.stride_tricks.sliding_window_view(block, m)
        matches = np.flatnonzero((windows == tmpl).all(axis=1))
        w = 0
        next_free = 0
        for pos in matches:  # count non-overlapping occurrences greedily
            if pos >= next_free:
                w += 1
                next_free = pos + m
        counts.append(w)
        chi += (w - mu) ** 2 / var
    p = igamc(N / 2.0, chi / 2.0)
    return (p,), {"template": "".join(map(str, tmpl)), "M": M, "N": N,
                  "counts": tuple(counts), "chi_sq": chi}


def _overlap_pi(u: int, eta: float) -> float:
    if u == 0:
        return math.exp(-eta)
    total = 0.0
    for ell in range(1, u + 1):
        total += (math.comb(u - 1, ell - 1) * eta ** ell
                  / (2 ** u * math.factorial(ell)))
    return math.exp(-eta) * total


def overlapping_template(seq: BitSequence, template=None, template_len: int = 9,
                         M: int = 1032, K: int = 5):
    tmpl = np.ones(template_len, dtype=np.uint8) if template is None \
        else _parse_template(template)
    m = len(tmpl)
    n = seq.n
    _require(M > m, f"overlapping_template needs block M > {m}, got {M}")
    _require(n >= M, f"overlapping_template needs n >= M ({M}), got {n}")
    N = n // M
    bits = seq.bits()
    windows = np.lib.stride_tricks.sliding_window_view(bits[:N * M], m)
    match = (windows == tmpl).all(axis=1)
    nu = np.zeros(K + 1, dtype=np.int64)
    for j in range(N):
        w = int(match[j * M:j * M + M - m + 1].sum())
        nu[min(w, K)] += 1
    lam = (M - m + 1) / 2 ** m
    eta = lam / 2.0
    pi = [_overlap_pi(u, eta) for u in range(K)]
    pi.append(max(1.0 - sum(pi), 1e-12))
    chi = float((((nu - N * np.asarray(pi)) ** 2) / (N * np.asarray(pi))).sum())
    p = igamc(K / 2.0, chi / 2.0)
    return (p,), {"template": "".join(map(str, tmpl)), "M": M, "N": N,
                  "nu": tuple(int(v) for v in nu), "chi_sq": chi}


_LC_PI = (0.010417, 0.03125, 0.125, 0.5, 0.25, 0.0625, 0.020833)


def _berlekamp_massey(block: np.ndarray) -> int:
    """Linear span of a 0/1 block, computed over GF(2) with int bitsets."""
    s = int.from_bytes(np.packbits(block, bitorder="little").tobytes(), "little")
    length = len(block)
    c = 1
    b = 1
    l = 0
    m = -1
    rw = 0  # bit j holds s_{i-j}
    for i in range(length):
        rw = (rw << 1) | ((s >> i) & 1)
        if (c & rw).bit_count() & 1:
            t = c
            c ^= b << (i - m)
            if 2 * l <= i:
                l = i + 1 - l
                b = t
                m = i
    return l


def linear_complexity(seq: BitSequence, M: int = 500):
    n = seq.n
    _require(n >= M, f"linear_complexity needs n >= M ({M}), got {n}")
    N = n // M
    bits = seq.bits()
    mu = M / 2 + (9 + (-1) ** (M + 1)) / 36 - (M / 3 + 2 / 9) / 2 ** M
    sign = 1 if M % 2 == 0 else -1
    nu = np.zeros(7, dtype=np.int64)
    for j in range(N):
        L = _berlekamp_massey(bits[j * M:(j + 1) * M])
        T = sign * (L - mu) + 2 / 9
        if T <= -2.5:
            nu[0] += 1
        elif T <= -1.5:
            nu[1] += 1
        elif T <= -0.5:
            nu[2] += 1
        elif T <= 0.5:
            nu[3] += 1
        elif T <= 1.5:
            nu[4] += 1
        elif T <= 2.5:
            nu[5] += 1
        else:
            nu[6] += 1
    pi = np.asarray(_LC_PI)
    chi = float((((nu - N * pi) ** 2) / (N * pi)).sum())
    p = igamc(6 / 2.0, chi / 2.0)
    return (p,), {"M": M, "N": N, "nu": tuple(int(v) for v in nu), "chi_sq": chi}


def lc_p_value_from_histogram(nu, N: int) -> float:
    """p-value from a precomputed linear-complexity class histogram."""
    pi = np.asarray(_LC_PI)
    nu = np.asarray(nu)
    chi = float((((nu - N * pi) ** 2) / (N * pi)).sum())
    return igamc(3.0, chi / 2.0)


# --------------------------------------------------------------------------

_TESTS = {
    "frequency": frequency,
    "block_frequency": block_frequency,
    "cumulative_sums": cumulative_sums,
    "runs": runs,
    "longest_run": longest_run,
    "linear_complexity": linear_complexity,
    "approximate_entropy": approximate_entropy,
    "overlapping_template": overlapping_template,
    "non_overlapping_template": non_overlapping_template,
    "serial": serial,
}

TEST_KINDS = tuple(_TESTS)


def nist_test(kind: str, seq: BitSequence, params: dict | None = None,
              alpha: float = ALPHA) -> TestResult:
    """Run one test kind and fold its p-values into a pass/fail result."""
    if kind not in _TESTS:
        raise ValueError(f"unknown test kind: {kind!r}")
    p_values, info = _TESTS[kind](seq, **(params or {}))
    for p in p_values:
        if math.isnan(p) or not 0.0 <= p <= 1.0:
            raise ArithmeticError(f"{kind}: p-value out of range: {p}")
    passed = all(p > alpha for p in p_values)
    return TestResult(kind=kind, p_values=tuple(p_values), passed=passed, params=info)
