"""Worked-example fixtures for every test kind, transcribed from the cited
statistical test suite specification and recomputed independently."""

import numpy as np
import pytest

from mavshield.nist.bits import BitSequence
from mavshield.nist.suite import lc_p_value_from_histogram, nist_test

E128 = ("11001100000101010110110001001100111000000000001001"
        "00110101010001000100111101011010000000110101111100"
        "1100111001101101100010110010")


def test_frequency_worked_example():
    r = nist_test("frequency", BitSequence.from_string("1011010101"))
    assert r.p_value == pytest.approx(0.527089, abs=1e-4)


def test_block_frequency_worked_example():
    r = nist_test("block_frequency", BitSequence.from_string("0110011010"), {"M": 3})
    assert r.p_value == pytest.approx(0.801252, abs=1e-4)


def test_runs_worked_example():
    r = nist_test("runs", BitSequence.from_string("1001101011"))
    assert r.p_value == pytest.approx(0.147232, abs=1e-4)


def test_longest_run_worked_example():
    r = nist_test("longest_run", BitSequence.from_string(E128))
    assert r.params["nu"] == (4, 9, 3, 0)
    assert r.p_value == pytest.approx(0.180609, abs=1e-4)


def test_cumulative_sums_worked_example():
    r = nist_test("cumulative_sums", BitSequence.from_string("1011010111"))
    # printed value 0.4116588 reflects the specification's rounded tables;
    # exact arithmetic gives 0.4115847
    assert r.p_values[0] == pytest.approx(0.4116588, abs=1e-4)
    assert r.p_values[0] == pytest.approx(0.4115847, abs=1e-6)


def test_serial_worked_example():
    r = nist_test("serial", BitSequence.from_string("0011011101"), {"m": 3})
    assert r.p_values[0] == pytest.approx(0.808792, abs=1e-4)
    assert r.p_values[1] == pytest.approx(0.670320, abs=1e-4)


def test_approximate_entropy_worked_example():
    r = nist_test("approximate_entropy", BitSequence.from_string("0100110101"),
                  {"m": 3})
    assert r.p_value == pytest.approx(0.261961, abs=1e-4)


def test_non_overlapping_template_worked_example():
    r = nist_test("non_overlapping_template",
                  BitSequence.from_string("10100100101110010110"),
                  {"template": "001", "M": 10})
    assert r.params["counts"] == (2, 1)
    assert r.p_value == pytest.approx(0.344154, abs=1e-4)


def test_overlapping_template_worked_example():
    seq = BitSequence.from_string(
        "10111011110010110100011100101110111110000101101001")
    r = nist_test("overlapping_template", seq, {"template": "11", "M": 10, "K": 5})
    assert r.params["nu"] == (0, 2, 0, 1, 1, 1)
    assert r.p_value == pytest.approx(0.409632, abs=1e-4)


def test_linear_complexity_worked_example_histogram():
    # the specification's million-bit example: histogram transcribed, p-value
    # recomputed exactly (the printed 0.845406 carries the doc's rounding)
    nu = (11, 31, 116, 501, 258, 57, 26)
    p = lc_p_value_from_histogram(nu, N=1000)
    assert p == pytest.approx(0.844721, abs=1e-4)
    assert p == pytest.approx(0.845406, abs=1e-3)


def test_frequency_on_e_expansion(e_bits):
    r = nist_test("frequency", BitSequence.from_bits(e_bits))
    assert r.p_value == pytest.approx(0.953749, abs=1e-4)


def test_linear_complexity_on_e_expansion(e_bits):
    # end-to-end reproduction of the million-bit worked example
    r = nist_test("linear_complexity", BitSequence.from_bits(e_bits), {"M": 1000})
    assert r.params["nu"] == (11, 31, 116, 501, 258, 57, 26)
    assert r.p_value == pytest.approx(0.844721, abs=1e-4)


def test_e_expansion_prefix():
    packed = np.packbits(np.array([1, 0, 1, 0, 1, 1, 0, 1], dtype=np.uint8))
    from conftest import DATA_DIR
    raw = np.fromfile(DATA_DIR / "e_bits_1m.bin", dtype=np.uint8)
    assert raw[0] == packed[0]
    assert raw.size == 125_000
