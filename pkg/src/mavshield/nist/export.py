"""Raw bitstream export for external randomness batteries (dieharder et al.)."""

from __future__ import annotations

import shutil
from pathlib import Path


def export_dieharder(ct_path: str | Path, out_path: str | Path) -> Path:
    """Write the ciphertext corpus as a raw, headerless byte stream.

    The corpus file already holds the concatenated C || C' records in
    order, so the export preserves bytes exactly; the output suits
    ``dieharder -g 201 -f <file>`` style raw-binary input.
    """
    ct_path = Path(ct_path)
    out_path = Path(out_path)
    if ct_path.stat().st_size == 0:
        raise ValueError(f"{ct_path}: empty corpus")
    with ct_path.open("rb") as src, out_path.open("wb") as dst:
        shutil.copyfileobj(src, dst)
    return out_path
