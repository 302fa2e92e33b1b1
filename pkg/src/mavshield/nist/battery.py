"""Run the full test roster over a set of sequences and assess pass rates.

The pass criterion mirrors the evaluation rule for a ten-sequence sample:
each individual p-value must exceed 0.025 and at least 8 of 10 sequences
must pass every test.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from mavshield.nist.bits import BitSequence
from mavshield.nist.suite import ALPHA, TEST_KINDS, SequenceTooShortError, TestResult, nist_test

DEFAULT_MIN_PASS = 8

DEFAULT_PARAMS: dict[str, dict] = {
    "block_frequency": {"M": 128},
    "serial": {"m": 2},
    "approximate_entropy": {"m": 2},
    "non_overlapping_template": {"template": "000000001"},
    "overlapping_template": {"template_len": 9, "M": 1032, "K": 5},
    "linear_complexity": {"M": 500},
}


@dataclass
class BatteryReport:
    n_sequences: int
    alpha: float
    results: dict[str, list[TestResult]] = field(default_factory=dict)

    def proportion(self, kind: str) -> int:
        return sum(1 for r in self.results[kind] if r.passed)


@dataclass
class BatteryVerdict:
    per_test: dict[str, bool]
    min_pass: int
    n_sequences: int

    @property
    def overall(self) -> bool:
        return all(self.per_test.values())


def run_battery(sequences: list[BitSequence], config: dict | None = None) -> BatteryReport:
    """Apply every test kind to every sequence; deterministic given inputs."""
    if not sequences:
        raise ValueError("need at least one sequence")
    config = dict(config or {})
    alpha = float(config.pop("alpha", ALPHA))
    report = BatteryReport(n_sequences=len(sequences), alpha=alpha)
    for kind in TEST_KINDS:
        params = dict(DEFAULT_PARAMS.get(kind, {}))
        params.update(config.get(kind, {}))
        outcomes = []
        for seq in sequences:
            try:
                outcomes.append(nist_test(kind, seq, params, alpha))
            except SequenceTooShortError as exc:
                outcomes.append(TestResult(kind=kind, p_values=(), passed=False,
                                           params=dict(params), error=str(exc)))
        report.results[kind] = outcomes
    return report


def proportion_assess(report: BatteryReport, min_pass: int = DEFAULT_MIN_PASS,
                      n_sequences: int | None = None) -> BatteryVerdict:
    """Per-test pass iff at least min_pass of the sequences passed."""
    n = report.n_sequences if n_sequences is None else n_sequences
    if min_pass > n:
        raise ValueError(f"min_pass {min_pass} exceeds sample size {n}")
    per_test = {kind: report.proportion(kind) >= min_pass for kind in report.results}
    return BatteryVerdict(per_test=per_test, min_pass=min_pass, n_sequences=n)


def report_to_csv(report: BatteryReport, min_pass: int = DEFAULT_MIN_PASS) -> str:
    """CSV serialization: per-sequence rows then a summary block."""
    lines = ["test,seq_index,p_value,passed"]
    for kind in report.results:
        for i, r in enumerate(report.results[kind]):
            lines.append(f"{kind},{i},{r.p_value:.6f},{'pass' if r.passed else 'fail'}")
    verdict = proportion_assess(report, min_pass=min_pass)
    lines.append("test,proportion,verdict")
    for kind in report.results:
        ok = "pass" if verdict.per_test[kind] else "fail"
        lines.append(f"{kind},{report.proportion(kind)}/{report.n_sequences},{ok}")
    lines.append(f"overall,,{'pass' if verdict.overall else 'fail'}")
    return "\n".join(lines) + "\n"


def load_battery_config(path: str | Path) -> dict:
    """Flat ``key = value`` battery configuration.

    Plain keys (``alpha``, ``min_pass``) set battery-level values; dotted
    keys (``serial.m = 3``) override one test's parameter.
    """
    config: dict = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"{path}:{lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        parsed: object
        try:
            parsed = int(value)
        except ValueError:
            try:
                parsed = float(value)
            except ValueError:
                parsed = value
        if "." in key:
            test, param = key.split(".", 1)
            if test not in TEST_KINDS:
                raise ValueError(f"{path}:{lineno}: unknown test {test!r}")
            config.setdefault(test, {})[param] = parsed
        else:
            config[key] = parsed
    return config
