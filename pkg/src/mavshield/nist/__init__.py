"""Statistical randomness battery and bitstream export."""

from mavshield.nist.battery import (
    DEFAULT_PARAMS,
    BatteryReport,
    BatteryVerdict,
    load_battery_config,
    proportion_assess,
    report_to_csv,
    run_battery,
)
from mavshield.nist.bits import BitSequence
from mavshield.nist.export import export_dieharder
from mavshield.nist.suite import (
    ALPHA,
    TEST_KINDS,
    SequenceTooShortError,
    TestResult,
    nist_test,
)

__all__ = [
    "ALPHA",
    "DEFAULT_PARAMS",
    "BatteryReport",
    "BatteryVerdict",
    "BitSequence",
    "SequenceTooShortError",
    "TEST_KINDS",
    "TestResult",
    "export_dieharder",
    "load_battery_config",
    "nist_test",
    "proportion_assess",
    "report_to_csv",
    "run_battery",
]
