"""Command line: encode, decode, simulate, tabulate.

Exit codes: 0 success (decode: every list nonempty), 1 some decoded list
was empty, 2 bad input or a violated precondition.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from fractions import Fraction
from math import ceil
from pathlib import Path

from . import io
from .channel import ChannelSpec, apply_channel, rng_for, trial_seed
from .errors import CodingError
from .field import GF
from .frs import (
    FRSSpec,
    check_bundled,
    frs_decode_capacity,
    frs_decode_overlapping,
    frs_encode,
    overlap_threshold,
)
from .oracle import brute_force_frs_list, brute_force_list
from .rs import check_word, rs_encode
from .rs_decode import (
    basic_threshold,
    decode as rs_decode,
    gs_threshold,
    unique_radius,
    weighted_threshold,
)

RS_ALGOS = ("bw", "basic", "weighted", "gs", "oracle")
FRS_ALGOS = ("frs", "oracle")


class UsageError(CodingError):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _words(spec, text):
    if isinstance(spec, FRSSpec):
        return [check_bundled(spec, w) for w in io.parse_bundled(text)]
    return [check_word(spec, w) for w in io.parse_blocks(text)]


def _threshold(spec, t, err_frac):
    if t is not None:
        return t
    if err_frac is not None:
        return ceil((1 - err_frac) * spec.n)
    return None


def decode_word(spec, word, algo, t=None, err_frac=None, force=False, s_prime=None, cap=None):
    """Run one decoder on one word; shared by ``decode`` and ``simulate``."""
    if isinstance(spec, FRSSpec):
        if algo not in FRS_ALGOS:
            raise UsageError(f"algorithm {algo!r} does not apply to a folded spec; use {FRS_ALGOS}")
        if algo == "frs" and s_prime is not None:
            if err_frac is None:
                raise UsageError("--s-prime decoding needs --err-frac")
            return frs_decode_capacity(spec, s_prime, word, err_frac, cap=cap)
        thr = _threshold(spec, t, err_frac)
        if thr is None:
            raise UsageError("give --t or --err-frac")
        if algo == "oracle":
            return brute_force_frs_list(spec, word, thr)
        return frs_decode_overlapping(spec, word, thr, cap=cap, force=force)
    if algo not in RS_ALGOS:
        raise UsageError(f"algorithm {algo!r} does not apply to a Reed-Solomon spec; use {RS_ALGOS}")
    thr = _threshold(spec, t, err_frac)
    if algo == "oracle":
        if thr is None:
            raise UsageError("give --t or --err-frac")
        return brute_force_list(spec, word, thr)
    if algo != "bw" and thr is None:
        raise UsageError("give --t or --err-frac")
    return rs_decode(spec, word, algo, thr, force=force)


def cmd_encode(args) -> int:
    spec = io.load_spec(args.spec)
    if args.frs and not isinstance(spec, FRSSpec):
        raise UsageError("--frs given but the spec file has no folding parameters")
    msgs = io.parse_blocks(_read(args.messages))
    if not msgs:
        raise UsageError("no message found")
    out = []
    for m in msgs:
        if isinstance(spec, FRSSpec):
            out.append(io.format_bundled(frs_encode(spec, m)))
        else:
            out.append(io.format_word(rs_encode(spec, m)))
    sep = "\n\n" if isinstance(spec, FRSSpec) else "\n"
    print(sep.join(out))
    return 0


def cmd_decode(args) -> int:
    spec = io.load_spec(args.spec)
    words = _words(spec, _read(args.word))
    if not words:
        raise UsageError("no word found")
    results = [decode_word(spec, w, args.algo, args.t, args.err_frac, args.force,
                           args.s_prime, args.cap) for w in words]
    for res in results:
        print(json.dumps(res.to_json()))
    return 0 if all(len(r) for r in results) else 1


def _channel_kwargs(args, n):
    target = None
    if args.channel == "targeted":
        if not args.target:
            raise UsageError("targeted channel needs --target FILE")
        target = args.target
    err = args.err_frac
    if args.channel == "prefix_zero":
        if args.ell is None:
            raise UsageError("prefix_zero channel needs --ell")
        if err is None:
            err = Fraction(n - args.ell, n)
    if err is None:
        raise UsageError("give --err-frac")
    return err, target


def cmd_simulate(args) -> int:
    spec = io.load_spec(args.spec)
    folded = isinstance(spec, FRSSpec)
    err, target = _channel_kwargs(args, spec.n)
    if target is not None:
        tw = _words(spec, _read(target))
        if len(tw) != 1:
            raise UsageError("target file must hold exactly one word")
        target = tw[0]
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    q = spec.field.q
    successes, sizes, dims = 0, [], []
    start = time.perf_counter()
    for trial in range(args.trials):
        rng = rng_for(trial_seed(args.seed, trial))
        msg = tuple(int(c) for c in rng.integers(0, q, size=spec.k))
        cw = frs_encode(spec, msg) if folded else rs_encode(spec, msg)
        ch = ChannelSpec(args.channel, err, int(rng.integers(0, 1 << 63)), target, args.ell)
        received = apply_channel(ch, cw, q)
        t = args.t
        if t is None and args.algo != "bw" and not (folded and args.s_prime):
            t = ceil((1 - err) * spec.n)
        res = decode_word(spec, received, args.algo, t, err, args.force, args.s_prime, args.cap)
        successes += msg in res
        sizes.append(len(res))
        if res.solution_dim is not None:
            dims.append(res.solution_dim)
    elapsed = time.perf_counter() - start
    mean = Fraction(sum(sizes), len(sizes))
    report = {
        "trials": args.trials,
        "successes": successes,
        "mean_list_size": str(mean),
        "max_list_size": max(sizes),
        "max_solution_dim": max(dims) if folded and dims else None,
        "wall_time_ms": round(elapsed * 1000) if args.timing else None,
    }
    print(json.dumps(report, sort_keys=False))
    return 0


def _range(text: str) -> range:
    try:
        if ":" in text:
            lo, hi = text.split(":")
            return range(int(lo), int(hi) + 1)
        return range(int(text), int(text) + 1)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO:HI") from None


TABLE_COLUMNS = ["k", "n", "rate", "unique_radius", "basic_t", "weighted_t", "gs_t",
                 "frs_t", "capacity_1_minus_R", "frs_n"]


def tabulate_rows(family, q, ns, ks, s=None, s_prime=None):
    GF.from_order(q)
    rows = []
    for n in ns:
        for k in ks:
            if n < 1 or k < 1:
                raise UsageError("n and k must be positive")
            if family == "rs":
                if k > n:
                    continue
                if n > q:
                    raise UsageError(f"n={n} exceeds q={q}")
                N, rate, frs_t, frs_n = n, Fraction(k, n), "", ""
            else:
                if s is None or s_prime is None or not 1 <= s_prime <= s:
                    raise UsageError("frs family needs --s and --s-prime with 1 <= s' <= s")
                if s * n > q - 1:
                    raise UsageError(f"s*n = {s * n} exceeds q-1 = {q - 1}")
                N, rate = s * n, Fraction(k, s * n)
                if k > N:
                    continue
                frs_n = n * (s - s_prime + 1)
                frs_t = overlap_threshold(frs_n, k, s_prime)
            rows.append({
                "k": k, "n": n, "rate": str(rate),
                "unique_radius": unique_radius(N, k),
                "basic_t": basic_threshold(N, k),
                "weighted_t": weighted_threshold(N, k),
                "gs_t": gs_threshold(N, k),
                "frs_t": frs_t,
                "capacity_1_minus_R": str(1 - rate),
                "frs_n": frs_n,
            })
    return rows


def cmd_tabulate(args) -> int:
    rows = tabulate_rows(args.family, args.q, _range(args.n), _range(args.k), args.s, args.s_prime)
    w = csv.DictWriter(sys.stdout, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="rslist", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="encode messages (one per line)")
    p.add_argument("spec")
    p.add_argument("messages")
    p.add_argument("--frs", action="store_true", help="require a folded spec")
    p.set_defaults(func=cmd_encode)

    def decoding_opts(p):
        p.add_argument("--algo", required=True, choices=sorted(set(RS_ALGOS + FRS_ALGOS)))
        p.add_argument("--t", type=int, help="agreement threshold")
        p.add_argument("--err-frac", type=io.parse_fraction, help="error fraction a/b")
        p.add_argument("--force", action="store_true",
                       help="skip the decoder's threshold precondition")
        p.add_argument("--s-prime", type=int, help="dilute to this folding (frs only)")
        p.add_argument("--cap", type=int, help="limit on the enumerated solution space")

    p = sub.add_parser("decode", help="list-decode received words")
    p.add_argument("spec")
    p.add_argument("word")
    decoding_opts(p)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="encode, corrupt and decode random messages")
    p.add_argument("spec")
    decoding_opts(p)
    p.add_argument("--channel", required=True, choices=["random_positions", "targeted", "prefix_zero"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--ell", type=int)
    p.add_argument("--target")
    p.add_argument("--timing", action="store_true", help="report wall_time_ms")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("tabulate", help="CSV of decoding thresholds")
    p.add_argument("--family", choices=["rs", "frs"], required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--n", required=True, help="N or LO:HI")
    p.add_argument("--k", required=True, help="N or LO:HI")
    p.add_argument("--s", type=int)
    p.add_argument("--s-prime", type=int)
    p.set_defaults(func=cmd_tabulate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args)
    except (CodingError, ValueError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
