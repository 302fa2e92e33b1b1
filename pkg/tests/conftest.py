import sys
from pathlib import Path

import pytest

TESTS_DIR = Path(__file__).parent
DATA_DIR = TESTS_DIR / "data"

sys.path.insert(0, str(TESTS_DIR))


def load_golden_kats():
    """Parse tests/data/golden_kats.txt into (suite, key, nonce_or_iv, pt, ct)."""
    records = []
    for raw in (DATA_DIR / "golden_kats.txt").read_text().splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        suite, key_hex, nonce_hex, pt_hex, ct_hex = line.split()
        nonce = None if nonce_hex == "-" else bytes.fromhex(nonce_hex)
        records.append((suite, bytes.fromhex(key_hex), nonce,
                        bytes.fromhex(pt_hex), bytes.fromhex(ct_hex)))
    return records


GOLDEN_KATS = load_golden_kats()


def kats_for(suite):
    return [r for r in GOLDEN_KATS if r[0] == suite]


@pytest.fixture(scope="session")
def e_bits():
    """The first 1,000,000 bits of the binary expansion of e (packed)."""
    import numpy as np
    packed = np.fromfile(DATA_DIR / "e_bits_1m.bin", dtype="uint8")
    return np.unpackbits(packed)[:1_000_000]
