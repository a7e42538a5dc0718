"""Verification engine: birthday repeats, random-mapping theory, orbit
probes, the exhaustive width-8 census, uniformity checks, and interleaved
stream construction.

Heavy inner loops are delegated to ``_kernels`` (compiled) or vectorized
numpy; every fast path has a bit-equality test against the pure-Python
steppers.
"""

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import stats

from .scaled import CwgA, CwgB
from .seeding import GAMMA


class InsufficientSamples(ValueError):
    """Source ran dry before n samples were collected."""


class BudgetExhausted(RuntimeError):
    """Orbit is longer than the probe's step budget (not a defect)."""


class WidthTooLarge(ValueError):
    """Exhaustive census only exists where the state space is enumerable."""


class TooFewSamples(ValueError):
    """Not enough samples for at least 5 expected counts per bin."""


# ---------------------------------------------------------------------------
# random-mapping theory
# ---------------------------------------------------------------------------

@dataclass
class TheoryPrediction:
    n: int
    expected_tail_log2: float
    expected_cycle_log2: float
    repeat_horizon_log2: float
    expected_components: float


def theory_predict(n, w) -> TheoryPrediction:
    """Random-mapping expectations for an n-bit map with a w-bit Weyl part.

    tail = cycle = sqrt(pi/8 * 2^n); the repeat horizon multiplies twice
    that by the 2^w Weyl period; components = ln(2^n)/2.
    """
    if n < 1 or w < 1:
        raise ValueError("widths must be >= 1")
    half = 0.5 * math.log2(math.pi / 8.0)
    tail_log2 = n / 2.0 + half
    return TheoryPrediction(
        n=n,
        expected_tail_log2=tail_log2,
        expected_cycle_log2=tail_log2,
        repeat_horizon_log2=1.0 + tail_log2 + w,
        expected_components=n * math.log(2.0) / 2.0,
    )


def expected_repeats(n, d) -> float:
    """Expected duplicate count among n draws from d equally likely values.

    Evaluates n - d*(1 - (1 - 1/d)^n) through log1p/expm1 so the d=2^32
    case doesn't lose everything to cancellation.
    """
    if n < 0 or d < 1:
        raise ValueError("need n >= 0 and d >= 1")
    if n <= 1:
        return 0.0
    return n + d * math.expm1(n * math.log1p(-1.0 / d))


# ---------------------------------------------------------------------------
# birthday machinery
# ---------------------------------------------------------------------------

@dataclass
class BirthdayReport:
    samples: int
    domain: int
    expected_repeats: float
    observed_repeats: int
    p_value: float
    null_model: str


@dataclass
class BirthdayEnsemble:
    runs: int
    samples: int
    domain: int
    expected_repeats: float
    mean_observed: float
    mean_p: float
    ks_statistic: float
    null_model: str


def _splitmix64_block(entropy, count, offset=0):
    """count splitmix64 outputs for counter positions offset+1..offset+count."""
    idx = np.arange(offset + 1, offset + count + 1, dtype=np.uint64)
    z = idx * np.uint64(GAMMA) + np.uint64(entropy)
    z ^= z >> 30
    z *= np.uint64(0xBF58476D1CE4E5B9)
    z ^= z >> 27
    z *= np.uint64(0x94D049BB133111EB)
    z ^= z >> 31
    return z


def _row_duplicates(mat):
    """Duplicate count per row: n minus the number of distinct values."""
    mat.sort(axis=1)
    distinct = 1 + (mat[:, 1:] != mat[:, :-1]).sum(axis=1)
    return (mat.shape[1] - distinct).astype(np.int64)


def _ideal_duplicates(entropy, runs, n, d):
    """Per-run duplicate counts for the splitmix64 ideal sampler."""
    if d > 1 << 64:
        raise ValueError("ideal sampler covers domains up to 2^64")
    if d <= 1 << 16:
        small = np.uint16
    elif d <= 1 << 32:
        small = np.uint32
    else:
        small = np.uint64
    out = np.empty(runs, np.int64)
    chunk = max(1, (1 << 24) // n)
    done = 0
    while done < runs:
        rows = min(chunk, runs - done)
        z = _splitmix64_block(entropy, rows * n, offset=done * n)
        if d < 1 << 64:
            z %= np.uint64(d)
        mat = z.astype(small).reshape(rows, n)
        out[done:done + rows] = _row_duplicates(mat)
        done += rows
    return out


@lru_cache(maxsize=8)
def _null_duplicates(n, d, runs, entropy):
    """Sorted empirical null of duplicate counts (cached; ideal sampler)."""
    null = _ideal_duplicates(entropy, runs, n, d)
    null.sort()
    return null


def _empirical_p(null, observed):
    """Two-sided p against a sorted empirical null, add-one smoothed."""
    m = len(null)
    lo = np.searchsorted(null, observed, "right")
    hi = m - np.searchsorted(null, observed, "left")
    p = 2.0 * np.minimum((lo + 1) / (m + 1), (hi + 1) / (m + 1))
    return np.minimum(1.0, p)


def _collect(source, n):
    vals = []
    it = iter(source)
    for _ in range(n):
        try:
            vals.append(next(it))
        except StopIteration:
            raise InsufficientSamples(
                "needed %d samples, got %d" % (n, len(vals))) from None
    return vals


MC_RUNS = 16384  # empirical-null size; >= 10^4


def birthday_test(source, n, d, null_model="auto",
                  mc_runs=MC_RUNS, mc_entropy=GAMMA) -> BirthdayReport:
    """Count duplicates among n outputs and score them against a null.

    null_model "poisson" treats the duplicate count as Poisson with the
    expected_repeats mean (sound when n << d); "monte-carlo" builds an
    empirical null from ideal-sampler runs; "auto" picks poisson only when
    64*n <= d.
    """
    if isinstance(source, np.ndarray):
        if source.size < n:
            raise InsufficientSamples(
                "needed %d samples, got %d" % (n, source.size))
        observed = n - np.unique(source[:n]).size
    else:
        observed = n - len(set(_collect(source, n)))
    exp = expected_repeats(n, d)
    if null_model == "auto":
        null_model = "poisson" if 64 * n <= d else "monte-carlo"
    if null_model == "poisson":
        p = min(1.0, 2.0 * min(stats.poisson.cdf(observed, exp),
                               stats.poisson.sf(observed - 1, exp)))
    elif null_model == "monte-carlo":
        null = _null_duplicates(n, d, mc_runs, mc_entropy)
        p = float(_empirical_p(null, observed))
    else:
        raise ValueError("unknown null model %r" % null_model)
    return BirthdayReport(samples=n, domain=int(d), expected_repeats=exp,
                          observed_repeats=int(observed), p_value=float(p),
                          null_model=null_model)


def _ensemble_summary(dups, ps, n, d, null_model):
    return BirthdayEnsemble(
        runs=len(dups), samples=n, domain=int(d),
        expected_repeats=expected_repeats(n, d),
        mean_observed=float(np.mean(dups)), mean_p=float(np.mean(ps)),
        ks_statistic=ks_uniform(ps), null_model=null_model)


def summarize_reports(reports) -> BirthdayEnsemble:
    """Fold per-run BirthdayReports into one ensemble summary."""
    first = reports[0]
    dups = np.array([r.observed_repeats for r in reports])
    ps = np.array([r.p_value for r in reports])
    return _ensemble_summary(dups, ps, first.samples, first.domain,
                             first.null_model)


def birthday_ideal_ensemble(runs, n, d, entropy=0,
                            mc_runs=MC_RUNS, mc_entropy=GAMMA):
    """Calibration ensemble: ideal sampler scored against the ideal null.

    Returns (summary, per-run duplicate counts, per-run p-values).
    """
    dups = _ideal_duplicates(entropy, runs, n, d)
    null = _null_duplicates(n, d, mc_runs, mc_entropy)
    ps = _empirical_p(null, dups)
    return _ensemble_summary(dups, ps, n, d, "monte-carlo"), dups, ps


def _cwga16_batch_outputs(s_values, steps):
    """Vectorized CwgA(16) outputs, one row per increment, zero start."""
    s = np.asarray(s_values, np.uint16)
    batch = s.size
    x = np.zeros(batch, np.uint16)
    a = np.zeros(batch, np.uint16)
    w = np.zeros(batch, np.uint16)
    buf = np.empty((batch, steps), np.uint16)
    for t in range(steps):
        a += x
        mul = (x >> 1) * (a | 1)
        w += s
        x = mul ^ w
        buf[:, t] = (a >> 12) ^ x
    return buf


def birthday_exhaustive_cwg16(batch=2048, mc_runs=MC_RUNS, mc_entropy=GAMMA):
    """Full birthday sweep: every odd 16-bit s, 2^16 outputs from zero state.

    Returns (summary, per-stream duplicate counts, per-stream p-values);
    32768 streams of 65536 outputs each.
    """
    n = 1 << 16
    s_all = np.arange(1, 1 << 16, 2, dtype=np.uint16)
    dups = np.empty(s_all.size, np.int64)
    for lo in range(0, s_all.size, batch):
        rows = _cwga16_batch_outputs(s_all[lo:lo + batch], n)
        dups[lo:lo + rows.shape[0]] = _row_duplicates(rows)
    null = _null_duplicates(n, n, mc_runs, mc_entropy)
    ps = _empirical_p(null, dups)
    return _ensemble_summary(dups, ps, n, n, "monte-carlo"), dups, ps


# ---------------------------------------------------------------------------
# orbit structure
# ---------------------------------------------------------------------------

@dataclass
class CycleReport:
    start: str
    tail_length: int
    cycle_length: int
    weyl_multiple: bool


@dataclass
class GraphCensus:
    width: int
    increment: int
    component_count: int
    cycle_lengths: list
    component_sizes: list
    max_tail_length: int
    states_visited: int


def brent_probe(gen, budget=1 << 31) -> CycleReport:
    """Exact tail and cycle length of gen's combined-state orbit.

    Uses Brent's algorithm (constant memory); raises BudgetExhausted once
    more than ``budget`` step evaluations would be needed.
    """
    start = repr(gen)
    w = gen.weyl_bits
    if isinstance(gen, (CwgA, CwgB)) and gen.n <= 32:
        from . import _kernels
        u = np.uint64
        if isinstance(gen, CwgA):
            mu, lam, _, status = _kernels.brent_a(
                u(gen.x), u(gen.a), u(gen.weyl), u(gen.s),
                u(gen.mask), u(budget))
        else:
            mu, lam, _, status = _kernels.brent_b(
                u(gen.x), u(gen.a), u(gen.weyl), u(gen.s),
                u(gen.mask), u(gen.mask2), u(budget))
        if status:
            raise BudgetExhausted(
                "orbit of %s exceeds %d steps" % (start, budget))
        mu, lam = int(mu), int(lam)
    else:
        mu, lam = _brent_python(gen, budget)
    return CycleReport(start=start, tail_length=mu, cycle_length=lam,
                       weyl_multiple=lam % (1 << w) == 0)


def _brent_python(gen, budget):
    start = gen.copy()
    tort = gen.copy()
    hare = gen.copy()
    hare.step()
    evals = 1
    power = lam = 1
    while tort.state != hare.state:
        if power == lam:
            tort = hare.copy()
            power <<= 1
            lam = 0
        hare.step()
        evals += 1
        lam += 1
        if evals > budget:
            raise BudgetExhausted(
                "orbit of %r exceeds %d steps" % (start, budget))
    tort = start.copy()
    hare = start.copy()
    evals += lam
    if evals > budget:
        raise BudgetExhausted("orbit of %r exceeds %d steps" % (start, budget))
    for _ in range(lam):
        hare.step()
    mu = 0
    while tort.state != hare.state:
        tort.step()
        hare.step()
        mu += 1
        evals += 2
        if evals > budget:
            raise BudgetExhausted(
                "orbit of %r exceeds %d steps" % (start, budget))
    return mu, lam


def graph_census(n, s) -> GraphCensus:
    """Exhaustive functional-graph census of CwgA(n) over all (x, a, weyl)."""
    if n != 8:
        raise WidthTooLarge("exhaustive census is limited to width 8")
    CwgA(8, s=s)  # width/oddness validation
    from . import _kernels
    ncomp, cyc_len, comp_nodes, dist, _ = _kernels.census_a8(int(s))
    sizes = [int(v) for v in comp_nodes]
    total = int(sum(sizes))
    assert total == 1 << 24, total  # conservation: every state in one tree
    return GraphCensus(width=8, increment=int(s), component_count=int(ncomp),
                       cycle_lengths=sorted(int(v) for v in cyc_len),
                       component_sizes=sizes,
                       max_tail_length=int(dist.max()),
                       states_visited=total)


# ---------------------------------------------------------------------------
# uniformity and interleaving
# ---------------------------------------------------------------------------

def chi_square_uniformity(samples, bins) -> float:
    """Pearson chi-square p-value of samples against uniform over bins."""
    arr = np.asarray(samples)
    if arr.size < 5 * bins:
        raise TooFewSamples(
            "%d samples give <5 expected per bin over %d bins"
            % (arr.size, bins))
    counts = np.bincount(arr, minlength=bins)
    if counts.size > bins:
        raise ValueError("sample values exceed the bin range")
    return float(stats.chisquare(counts).pvalue)


def ks_uniform(ps) -> float:
    """Kolmogorov-Smirnov distance of p-values from Uniform(0,1)."""
    return float(stats.kstest(ps, "uniform").statistic)


def build_interleaved(family, k, mode="round-robin", nth=1):
    """Interleave streams issued by a family.

    round-robin cycles forever over k streams (A0 B0 ... A1 B1 ...);
    nth mode yields the nth output (1-based) of k freshly seeded streams.
    """
    if k < 1:
        raise ValueError("need k >= 1 streams")
    if mode == "round-robin":
        def rr():
            streams = [family.next_stream() for _ in range(k)]
            while True:
                for g in streams:
                    yield g.step()
        return rr()
    if mode in ("nth", "nth-output"):
        if nth < 1:
            raise ValueError("nth is 1-based")

        def firsts():
            for _ in range(k):
                g = family.next_stream()
                for _ in range(nth - 1):
                    g.step()
                yield g.step()
        return firsts()
    raise ValueError("unknown mode %r" % mode)
