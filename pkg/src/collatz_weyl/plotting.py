"""Figure rendering for the report subcommands.

Everything draws through the Agg backend straight to files; the CLI calls
these when --plot-dir is given and prints the written paths.
"""

import os
from collections import Counter

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def _save(fig, outdir, name):
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, name)
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def birthday_figures(dups, ps, expected, outdir):
    paths = []
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(dups, bins=min(60, max(5, len(set(dups)))), color="#4878cf")
    ax.axvline(expected, color="crimson", lw=1.5,
               label="expected %.1f" % expected)
    ax.set_xlabel("duplicates per run")
    ax.set_ylabel("runs")
    ax.legend()
    fig.tight_layout()
    paths.append(_save(fig, outdir, "birthday_duplicates.png"))

    fig, ax = plt.subplots(figsize=(6, 4))
    ax.hist(ps, bins=20, range=(0.0, 1.0), color="#6acc65")
    ax.set_xlabel("two-sided p-value")
    ax.set_ylabel("runs")
    fig.tight_layout()
    paths.append(_save(fig, outdir, "birthday_pvalues.png"))
    return paths


def census_figure(census, outdir):
    counts = Counter(census.cycle_lengths)
    xs = sorted(counts)
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.bar(range(len(xs)), [counts[x] for x in xs], color="#4878cf")
    ax.set_xticks(range(len(xs)))
    ax.set_xticklabels([str(x) for x in xs], rotation=45, ha="right")
    ax.set_xlabel("cycle length (all multiples of 2^%d)" % census.width)
    ax.set_ylabel("cycles")
    ax.set_title("width-%d census, s=%#x: %d components"
                 % (census.width, census.increment, census.component_count))
    fig.tight_layout()
    return [_save(fig, outdir, "census_cycles.png")]


def probe_figure(orbits, predicted_log2, outdir):
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.plot(sorted(orbits), "o", ms=4, color="#4878cf", label="tail+cycle")
    ax.axhline(2 ** predicted_log2, color="crimson", lw=1.5,
               label="theory 2^%.2f" % predicted_log2)
    ax.set_yscale("log", base=2)
    ax.set_xlabel("probe (sorted)")
    ax.set_ylabel("orbit length")
    ax.legend()
    fig.tight_layout()
    return [_save(fig, outdir, "probe_orbits.png")]


def bench_figure(reports, outdir):
    fig, ax = plt.subplots(figsize=(6, 4))
    names = [r.algorithm for r in reports]
    ax.bar(names, [r.ns_per_64_bits for r in reports], color="#4878cf")
    ax.set_ylabel("ns per 64 output bits")
    fig.tight_layout()
    return [_save(fig, outdir, "bench_ns.png")]
