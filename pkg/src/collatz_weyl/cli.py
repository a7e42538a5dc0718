"""Command-line surface: stream export, interleaving, birthday and cycle
reports, throughput measurement, and the golden self-test.

Exit codes: 0 success, 1 test/analysis failure, 2 usage error.  Raw bytes
go to stdout only; diagnostics go to stderr.
"""

import argparse
import json
import os
import statistics
import sys
import time
from dataclasses import asdict, dataclass

from . import analysis
from .generators import EvenIncrement
from .scaled import CwgA, CwgB
from .seeding import (ALGOS, GAMMA, Splitmix, SplitmixStream, StreamFamily,
                      _RECIPES, seed_simple, seed_splitmix)


@dataclass
class BenchReport:
    algorithm: str
    ns_per_64_bits: float
    cycles_per_byte: float | None
    total_outputs: int


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------

def _fmt(v):
    if isinstance(v, str):
        return v
    return json.dumps(v)


def _print_block(block, fh):
    for k, v in block.items():
        fh.write("%s: %s\n" % (k, _fmt(v)))


def _print_report(payload, fmt, fh=None):
    """payload: a single block dict, or {'summary': ..., 'runs': [...]}."""
    fh = fh or sys.stdout
    if fmt == "json":
        fh.write(json.dumps(payload, indent=2) + "\n")
        return
    if "runs" in payload or "reports" in payload:
        runs = payload.get("runs") or payload.get("reports")
        for i, block in enumerate(runs):
            _print_block({"run": i, **block}, fh)
            fh.write("\n")
        rest = {k: v for k, v in payload.items()
                if k not in ("runs", "reports")}
        summary = rest.pop("summary", None)
        if summary:
            _print_block(summary, fh)
        if rest:
            _print_block(rest, fh)
    else:
        _print_block(payload, fh)


def _maybe_plots(payload, paths):
    if paths:
        payload["plots"] = paths
    return payload


# ---------------------------------------------------------------------------
# byte emission
# ---------------------------------------------------------------------------

def _bit_packer(words):
    # eight 1-bit outputs per byte, least significant bit first
    while True:
        byte = 0
        for i in range(8):
            try:
                byte |= (next(words) & 1) << i
            except StopIteration:
                if i:
                    yield byte
                return
        yield byte


def _emit_words(words, out_bits, nbytes, fh=None):
    fh = fh or sys.stdout.buffer
    words = iter(words)
    if out_bits == 1:
        words = _bit_packer(words)
        out_bits = 8
    wb = out_bits // 8
    buf = bytearray()
    total = 0
    for w in words:
        buf += w.to_bytes(wb, "little")
        if nbytes is not None and total + len(buf) >= nbytes:
            fh.write(buf[:nbytes - total])
            total = nbytes
            break
        if len(buf) >= 65536:
            fh.write(buf)
            total += len(buf)
            buf = bytearray()
    else:
        fh.write(buf)
        total += len(buf)
    fh.flush()
    return total


def _stream_gen(args):
    algo = args.algo
    if args.seed_simple is not None:
        if algo == "ideal":
            raise ValueError("the ideal sampler is seeded with --seed-entropy")
        return seed_simple(algo, args.seed_simple)
    entropy = args.seed_entropy or 0
    if algo == "ideal":
        return SplitmixStream(entropy)
    if algo in _RECIPES:
        return seed_splitmix(algo, entropy)
    raise ValueError("%s has no splitmix recipe; use --seed-simple" % algo)


def cmd_stream(args):
    gen = _stream_gen(args)
    for _ in range(args.skip):
        gen.step()
    _emit_words(iter(gen.step, None), gen.out_bits,
                None if args.unlimited else args.nbytes)
    return 0


def cmd_interleave(args):
    family = StreamFamily(args.algo, args.seed_entropy or 0)
    words = analysis.build_interleaved(family, args.streams, args.mode,
                                       args.nth)
    out_bits = seed_simple(args.algo, 1).out_bits
    nbytes = args.nbytes
    if nbytes is None and not args.unlimited and args.mode != "round-robin":
        nbytes = args.streams * (out_bits // 8)  # one word per stream
    if nbytes is None and not args.unlimited and args.mode == "round-robin":
        raise ValueError("round-robin interleaving needs --bytes/--unlimited")
    _emit_words(words, out_bits, nbytes)
    return 0


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

def _reduced(gen, d):
    full = 1 << gen.out_bits
    if d > full:
        raise ValueError("domain %d exceeds the %d-bit output" %
                         (d, gen.out_bits))
    if d == full:
        while True:
            yield gen.step()
    elif d & (d - 1) == 0:
        while True:
            yield gen.step() & (d - 1)
    else:
        while True:
            yield gen.step() % d


def cmd_birthday(args):
    plot_paths = []
    if args.exhaustive:
        if args.algo not in (None, "cwg16"):
            raise ValueError("--exhaustive runs the CWG16 sweep only")
        summary, dups, ps = analysis.birthday_exhaustive_cwg16()
        if args.plot_dir:
            from . import plotting
            plot_paths = plotting.birthday_figures(
                dups, ps, summary.expected_repeats, args.plot_dir)
        payload = _maybe_plots({"summary": asdict(summary)}, plot_paths)
        _print_report(payload, args.format)
        return 0

    if args.n is None:
        raise ValueError("--n is required unless --exhaustive")
    n, runs = args.n, args.runs
    entropy = args.seed_entropy or 0

    if args.algo == "ideal":
        d = args.d or (1 << 64)
        if runs > 1:
            summary, dups, ps = analysis.birthday_ideal_ensemble(
                runs, n, d, entropy=entropy)
            if args.plot_dir:
                from . import plotting
                plot_paths = plotting.birthday_figures(
                    dups, ps, summary.expected_repeats, args.plot_dir)
            payload = _maybe_plots({"summary": asdict(summary)}, plot_paths)
            _print_report(payload, args.format)
            return 0
        gen = SplitmixStream(entropy)
        reports = [analysis.birthday_test(_reduced(gen, d), n, d, args.null)]
    else:
        family = StreamFamily(args.algo, entropy)
        probe = seed_simple(args.algo, 1)
        d = args.d or (1 << probe.out_bits)
        reports = []
        for _ in range(runs):
            gen = family.next_stream()
            reports.append(
                analysis.birthday_test(_reduced(gen, d), n, d, args.null))

    if len(reports) == 1:
        rep = reports[0]
        if args.plot_dir:
            from . import plotting
            plot_paths = plotting.birthday_figures(
                [rep.observed_repeats], [rep.p_value],
                rep.expected_repeats, args.plot_dir)
        payload = _maybe_plots(asdict(rep), plot_paths)
    else:
        summary = analysis.summarize_reports(reports)
        if args.plot_dir:
            from . import plotting
            plot_paths = plotting.birthday_figures(
                [r.observed_repeats for r in reports],
                [r.p_value for r in reports],
                summary.expected_repeats, args.plot_dir)
        payload = _maybe_plots(
            {"runs": [asdict(r) for r in reports],
             "summary": asdict(summary)}, plot_paths)
    _print_report(payload, args.format)
    return 0


def _probe_state(shape, n, sm):
    mask = (1 << n) - 1
    if shape == "a":
        return CwgA(n, x=sm.next64() & mask, a=sm.next64() & mask,
                    weyl=sm.next64() & mask,
                    s=((sm.next63() & ((1 << (n - 1)) - 1)) << 1) | 1)
    mask2 = (1 << (2 * n)) - 1
    x = ((sm.next64() << 64) | sm.next64()) & mask2
    return CwgB(n, x=x, a=sm.next64() & mask, weyl=sm.next64() & mask,
                s=((sm.next63() & ((1 << (n - 1)) - 1)) << 1) | 1)


def cmd_cycles(args):
    plot_paths = []
    if args.predict:
        if args.n is None:
            raise ValueError("--predict needs --n")
        rep = analysis.theory_predict(args.n, args.w or args.n)
        _print_report(asdict(rep), args.format)
        return 0

    if args.census:
        census = analysis.graph_census(args.n or 8, args.s)
        if args.plot_dir:
            from . import plotting
            plot_paths = plotting.census_figure(census, args.plot_dir)
        _print_report(_maybe_plots(asdict(census), plot_paths), args.format)
        return 0

    # orbit probes
    n = args.n or 16
    if n not in (8, 16, 32):
        raise ValueError("probes cover widths 8, 16, 32")
    sm = Splitmix(args.seed_entropy or 0)
    blocks, orbits, exhausted = [], [], 0
    for _ in range(args.seeds):
        gen = _probe_state(args.shape, n, sm)
        try:
            rep = analysis.brent_probe(gen, budget=args.budget)
        except analysis.BudgetExhausted:
            exhausted += 1
            blocks.append({"start": repr(gen), "status": "budget-exhausted"})
        else:
            orbits.append(rep.tail_length + rep.cycle_length)
            blocks.append({**asdict(rep), "status": "ok"})
    state_bits = 3 * n if args.shape == "a" else 4 * n
    theory = analysis.theory_predict(state_bits, n)
    summary = {
        "seeds": args.seeds,
        "budget_exhausted": exhausted,
        "median_orbit": int(statistics.median(orbits)) if orbits else None,
        "predicted_orbit_log2": theory.expected_tail_log2 + 1.0,
        "status": "ok" if orbits else "budget-exhausted",
    }
    if args.plot_dir and orbits:
        from . import plotting
        plot_paths = plotting.probe_figure(
            orbits, summary["predicted_orbit_log2"], args.plot_dir)
    payload = _maybe_plots({"reports": blocks, "summary": summary},
                           plot_paths)
    _print_report(payload, args.format)
    return 0


def _bench_gen(tag):
    if tag in _RECIPES:
        return seed_splitmix(tag, 0)
    probe = seed_simple(tag, 1)
    return seed_simple(tag, (GAMMA & ((1 << probe.weyl_bits) - 1)) | 1)


def cmd_bench(args):
    algos = [a.strip() for a in args.algos.split(",") if a.strip()]
    reports = []
    fold = 0
    for tag in algos:
        gen = _bench_gen(tag)
        step = gen.step
        for _ in range(args.count // 10):  # warm-up, excluded from timing
            step()
        per_rep = []
        for _ in range(args.reps):
            t0 = time.perf_counter_ns()
            for _ in range(args.count):
                fold ^= step()
            dt = time.perf_counter_ns() - t0
            per_rep.append(dt / (args.count * gen.out_bits / 64.0))
        ns64 = statistics.median(per_rep)
        cpb = (ns64 / 8.0) * args.cpu_ghz if args.cpu_ghz else None
        reports.append(BenchReport(
            algorithm=tag, ns_per_64_bits=round(ns64, 3),
            cycles_per_byte=None if cpb is None else round(cpb, 3),
            total_outputs=args.count * args.reps + args.count // 10))
    print("xor fold: %#x" % fold, file=sys.stderr)
    plot_paths = []
    if args.plot_dir:
        from . import plotting
        plot_paths = plotting.bench_figure(reports, args.plot_dir)
    payload = _maybe_plots({"reports": [asdict(r) for r in reports]},
                           plot_paths)
    _print_report(payload, args.format)
    return 0


def cmd_selftest(args):
    from . import selftest
    failures = selftest.run(quick=args.quick)
    return 1 if failures else 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _hexint(text):
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError("not a hex integer: %r" % text)


def _positive(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _add_format(sp):
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.add_argument("--plot-dir", metavar="DIR",
                    help="also render matplotlib figures into DIR")


def build_parser():
    p = argparse.ArgumentParser(
        prog="cwg",
        description="Collatz-Weyl generator streams and verification "
                    "reports.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("stream", help="write raw generator bytes to stdout")
    sp.add_argument("--algo", required=True, choices=ALGOS + ("ideal",))
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--seed-simple", type=_hexint, metavar="HEX",
                     help="odd increment; all other substates zero")
    grp.add_argument("--seed-entropy", type=_hexint, metavar="HEX",
                     help="64-bit splitmix seeding entropy (default 0)")
    grp2 = sp.add_mutually_exclusive_group(required=True)
    grp2.add_argument("--bytes", type=_positive, dest="nbytes")
    grp2.add_argument("--unlimited", action="store_true")
    sp.add_argument("--skip", type=_positive, default=0,
                    help="discard this many leading outputs")
    sp.add_argument("--format", choices=("raw",), default="raw")
    sp.set_defaults(func=cmd_stream)

    sp = sub.add_parser("interleave",
                        help="interleave family streams into one byte "
                             "stream")
    sp.add_argument("--algo", required=True, choices=tuple(sorted(_RECIPES)))
    sp.add_argument("--seed-entropy", type=_hexint, metavar="HEX")
    sp.add_argument("--streams", type=int, required=True, metavar="K")
    sp.add_argument("--mode", choices=("round-robin", "nth"),
                    default="round-robin")
    sp.add_argument("--nth", type=int, default=1, metavar="J",
                    help="1-based output index for nth mode")
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--bytes", type=_positive, dest="nbytes")
    grp.add_argument("--unlimited", action="store_true")
    sp.add_argument("--format", choices=("raw",), default="raw")
    sp.set_defaults(func=cmd_interleave)

    sp = sub.add_parser("birthday", help="duplicate-count (birthday) tests")
    sp.add_argument("--algo", choices=ALGOS + ("ideal",))
    sp.add_argument("--exhaustive", action="store_true",
                    help="all 2^15 odd increments of CWG16, full period")
    sp.add_argument("--n", type=int, help="samples per run")
    sp.add_argument("--d", type=int, help="domain size (default: full word)")
    sp.add_argument("--runs", type=int, default=1)
    sp.add_argument("--null", choices=("auto", "poisson", "monte-carlo"),
                    default="auto")
    sp.add_argument("--seed-entropy", type=_hexint, metavar="HEX")
    _add_format(sp)
    sp.set_defaults(func=cmd_birthday)

    sp = sub.add_parser("cycles",
                        help="orbit probes, exhaustive census, theory")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--predict", action="store_true")
    grp.add_argument("--census", action="store_true")
    grp.add_argument("--probe", action="store_true")
    sp.add_argument("--n", type=int, help="state width in bits")
    sp.add_argument("--w", type=int, help="Weyl width for --predict")
    sp.add_argument("--s", type=_hexint, default=1, metavar="HEX",
                    help="census increment")
    sp.add_argument("--shape", choices=("a", "b"), default="a")
    sp.add_argument("--seeds", type=int, default=30)
    sp.add_argument("--budget", type=int, default=1 << 31)
    sp.add_argument("--seed-entropy", type=_hexint, metavar="HEX")
    _add_format(sp)
    sp.set_defaults(func=cmd_cycles)

    sp = sub.add_parser("bench", help="throughput (ns per 64 output bits)")
    sp.add_argument("--algos", default="cwg128_64,cwg128,cwg64",
                    help="comma-separated algorithm tags")
    sp.add_argument("--count", type=int, default=1 << 20,
                    help="outputs per repetition (>= 10^6)")
    sp.add_argument("--reps", type=int, default=5)
    sp.add_argument("--cpu-ghz", type=float,
                    help="CPU frequency for cycles-per-byte")
    _add_format(sp)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("selftest", help="golden-vector self-test")
    sp.add_argument("--quick", action="store_true",
                    help="hand-traced subset only")
    sp.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "bench":
        if args.count < 10 ** 6:
            parser.error("--count must be at least 10^6 outputs")
        if args.reps < 1:
            parser.error("--reps must be >= 1")
        unknown = [a for a in args.algos.split(",")
                   if a.strip() and a.strip() not in ALGOS]
        if unknown:
            parser.error("unknown algorithms: %s" % ",".join(unknown))
    if args.command == "interleave" and not 1 <= args.streams <= 1 << 20:
        parser.error("--streams must be in 1..2^20")
    try:
        return args.func(args)
    except BrokenPipeError:
        # Downstream closed early (| head): success by pipeline convention.
        # Point stdout at /dev/null so the interpreter's exit flush does
        # not raise a second time.
        devnull = os.open(os.devnull, os.O_WRONLY)
        os.dup2(devnull, sys.stdout.fileno())
        return 0
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except EvenIncrement as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (analysis.InsufficientSamples, analysis.TooFewSamples) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except (analysis.WidthTooLarge, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
