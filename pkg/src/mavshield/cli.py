"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 data/verification error. All
randomness sits behind an explicit --seed flag so every pipeline run is
reproducible byte for byte.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from mavshield.analysis.drbg import DeterministicRandom
from mavshield.analysis.pairs import (
    avalanche_stats,
    corpus_to_bitstreams,
    encrypt_pairs,
    gen_unit_distance_pairs,
)
from mavshield.bench import bench_suites, render_report
from mavshield.ciphers import SUITE_NAMES, key_size, make_stream, parse_hex
from mavshield.link.channel import channel_from_config, open_payload, seal_payload
from mavshield.link.defs import builtin_defs, load_defs
from mavshield.link.frame import FrameError, MavFrame
from mavshield.nist.battery import (
    DEFAULT_MIN_PASS,
    load_battery_config,
    proportion_assess,
    report_to_csv,
    run_battery,
)
from mavshield.nist.export import export_dieharder

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < (1 << 64):
        raise argparse.ArgumentTypeError("expected an unsigned 64-bit integer")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="mavshield",
                     description="Cipher suites, secure MAVLink framing, and "
                                 "randomness analysis tools")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("keygen", help="derive key material from a seed")
    p.add_argument("--suite", choices=SUITE_NAMES, default="mavshield")
    p.add_argument("--seed", type=_u64, required=True)

    p = sub.add_parser("xcrypt", help="encrypt/decrypt a file with one suite")
    p.add_argument("--suite", choices=SUITE_NAMES, required=True)
    p.add_argument("--key", default="", help="key as lowercase hex")
    p.add_argument("--iv", default="00" * 16, help="16-byte counter block, hex")
    p.add_argument("--nonce", default="0", help="64-bit schedule nonce (mavshield)")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("frame-seal", help="seal one frame onto a wire file")
    p.add_argument("--config", required=True, help="channel config file")
    p.add_argument("--defs", help="message definitions file")
    p.add_argument("--direction", choices=("to_uav", "to_gcs"), default="to_uav")
    p.add_argument("--msgid", type=int, required=True)
    p.add_argument("--sysid", type=int, default=1)
    p.add_argument("--compid", type=int, default=1)
    p.add_argument("--payload", default="", help="plaintext payload, hex")
    p.add_argument("--count", type=int, default=1, help="seal N copies")
    p.add_argument("--out", required=True, help="output file (appends)")

    p = sub.add_parser("frame-open", help="parse and decrypt frames from a file")
    p.add_argument("--config", required=True)
    p.add_argument("--defs")
    p.add_argument("--direction", choices=("to_uav", "to_gcs"), default="to_uav")
    p.add_argument("--in", dest="inp", required=True)

    p = sub.add_parser("gen-pairs", help="generate unit-distance plaintext pairs")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=_u64, required=True)
    p.add_argument("--out", default="pt.bin")

    p = sub.add_parser("encrypt-pairs", help="encrypt a pair corpus (ECB blocks)")
    p.add_argument("--in", dest="inp", default="pt.bin")
    p.add_argument("--key", required=True, help="16-byte key, hex")
    p.add_argument("--nonce", required=True, help="8-byte schedule nonce, hex")
    p.add_argument("--out", default="ct.bin")

    p = sub.add_parser("avalanche", help="Hamming-distance statistics over ct.bin")
    p.add_argument("--in", dest="inp", default="ct.bin")

    p = sub.add_parser("nist", help="run the randomness battery over ct.bin")
    p.add_argument("--in", dest="inp", default="ct.bin")
    p.add_argument("--sequences", type=int, default=10)
    p.add_argument("--bits", type=int, default=100_000, help="bits per sequence")
    p.add_argument("--stream", choices=("pairs", "c_only", "xor"), default="pairs",
                   help="bytes to analyze: C||C' file order, the C halves, or C^C'")
    p.add_argument("--config", help="battery config file")
    p.add_argument("--min-pass", type=int, default=DEFAULT_MIN_PASS)
    p.add_argument("--out", help="write the CSV report here (default stdout)")

    p = sub.add_parser("export-bits", help="export raw bytes for external batteries")
    p.add_argument("--in", dest="inp", default="ct.bin")
    p.add_argument("--out", required=True)

    p = sub.add_parser("bench", help="seal/open throughput across suites")
    p.add_argument("--suites", default="all", help="comma list or 'all'")
    p.add_argument("--sizes", default="255", help="comma list of payload sizes")
    p.add_argument("--duration", type=float, default=0.5, help="seconds per cell")
    p.add_argument("--min-bytes", type=int, default=0,
                   help="minimum payload bytes per measurement rep")
    p.add_argument("--seed", type=_u64, default=0)
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.add_argument("--out")

    return parser


def _write_text(path: str | None, text: str):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_keygen(args) -> int:
    rng = DeterministicRandom(args.seed)
    print(f"suite = {args.suite}")
    print(f"key_hex = {rng.take(key_size(args.suite)).hex()}")
    print(f"session_nonce_hex = {rng.take(8).hex()}")
    return 0


def _cmd_xcrypt(args) -> int:
    key = parse_hex(args.key, key_size(args.suite) or None, "key") if args.key else b""
    iv = parse_hex(args.iv, 16, "iv")
    nonce = int(args.nonce, 16) if args.nonce else 0
    stream = make_stream(args.suite, key, nonce)
    data = Path(args.inp).read_bytes()
    Path(args.out).write_bytes(stream.xcrypt(iv, data))
    return 0


def _load_defs_arg(args):
    return load_defs(args.defs) if args.defs else builtin_defs()


def _cmd_frame_seal(args) -> int:
    channel = channel_from_config(args.config, _load_defs_arg(args), args.direction)
    payload = parse_hex(args.payload, what="payload") if args.payload else b""
    out = Path(args.out)
    with out.open("ab") as fh:
        for _ in range(args.count):
            frame = MavFrame(msgid=args.msgid, payload=payload,
                             sysid=args.sysid, compid=args.compid)
            fh.write(seal_payload(channel, frame))
    return 0


def _cmd_frame_open(args) -> int:
    channel = channel_from_config(args.config, _load_defs_arg(args), args.direction)
    data = Path(args.inp).read_bytes()
    offset = 0
    while offset < len(data):
        frame = open_payload(channel, data[offset:])
        # consumed length comes from the wire; the opened payload may have
        # been zero-extended past the transmitted length
        if offset + 3 > len(data):
            break
        offset += 12 + data[offset + 1] + (13 if data[offset + 2] & 0x01 else 0)
        print(f"msgid={frame.msgid} seq={frame.seq} sysid={frame.sysid} "
              f"compid={frame.compid} payload={frame.payload.hex()}")
    return 0


def _cmd_gen_pairs(args) -> int:
    gen_unit_distance_pairs(args.n, args.seed, args.out)
    print(f"wrote {args.n} pair records to {args.out}")
    return 0


def _cmd_encrypt_pairs(args) -> int:
    key = parse_hex(args.key, 16, "key")
    nonce = int.from_bytes(parse_hex(args.nonce, 8, "nonce"), "big")
    encrypt_pairs(args.inp, key, nonce, args.out)
    print(f"wrote ciphertext pairs to {args.out}")
    return 0


def _cmd_avalanche(args) -> int:
    stats = avalanche_stats(args.inp)
    print(f"pairs = {stats.n_pairs}")
    print(f"mean_hd = {stats.mean_hd:.4f}")
    print(f"stdev_hd = {stats.stdev_hd:.4f}")
    nonzero = [(d, c) for d, c in enumerate(stats.histogram) if c]
    lo, hi = nonzero[0][0], nonzero[-1][0]
    print(f"hd_range = [{lo}, {hi}]")
    return 0


def _cmd_nist(args) -> int:
    sequences = corpus_to_bitstreams(args.inp, args.sequences, args.bits,
                                     stream=args.stream)
    config = load_battery_config(args.config) if args.config else None
    report = run_battery(sequences, config)
    csv_text = report_to_csv(report, min_pass=args.min_pass)
    _write_text(args.out, csv_text)
    verdict = proportion_assess(report, min_pass=args.min_pass)
    print(f"overall: {'pass' if verdict.overall else 'fail'} "
          f"(min_pass {args.min_pass}/{report.n_sequences})", file=sys.stderr)
    return 0


def _cmd_export_bits(args) -> int:
    export_dieharder(args.inp, args.out)
    return 0


def _cmd_bench(args) -> int:
    suites = list(SUITE_NAMES) if args.suites == "all" else args.suites.split(",")
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = bench_suites(suites, sizes, duration_per_cell=args.duration,
                        min_bytes=args.min_bytes, seed=args.seed)
    _write_text(args.out, render_report(rows, args.format))
    return 0


_HANDLERS = {
    "keygen": _cmd_keygen,
    "xcrypt": _cmd_xcrypt,
    "frame-seal": _cmd_frame_seal,
    "frame-open": _cmd_frame_open,
    "gen-pairs": _cmd_gen_pairs,
    "encrypt-pairs": _cmd_encrypt_pairs,
    "avalanche": _cmd_avalanche,
    "nist": _cmd_nist,
    "export-bits": _cmd_export_bits,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except FrameError as exc:
        print(f"mavshield {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR
    except FileNotFoundError as exc:
        print(f"mavshield {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR
    except (ValueError, ArithmeticError) as exc:
        print(f"mavshield {args.command}: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    sys.exit(main())
