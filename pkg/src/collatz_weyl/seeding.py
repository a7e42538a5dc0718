"""Seeding pipeline: Splitmix64/63, warm-up, and the multi-stream allocator.

One ``Splitmix`` counter feeds both mix flavours; the serial seeding
recipes draw from it left to right (high word before low word where a
128-bit value is composed).  ``StreamFamily`` hands out warmed-up,
distinct-increment streams — up to 2^63 of them before the Splitmix63
sequence repeats.
"""

from .experimental import CollatzBit, Cwg64Rot2, Cwg128_2
from .generators import _MASK64, Cwg64, Cwg128, Cwg128_64
from .scaled import CwgA, CwgB

GAMMA = 0x9E3779B97F4A7C15
_M63 = (1 << 63) - 1


class Splitmix:
    """64-bit counter with the two output mixes (full and 63-bit-masked)."""

    def __init__(self, y=0):
        self.y = y & _MASK64

    def next64(self) -> int:
        self.y = y = (self.y + GAMMA) & _MASK64
        z = ((y ^ (y >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def next63(self) -> int:
        # the counter keeps all 64 bits; only z is masked
        self.y = y = (self.y + GAMMA) & _MASK64
        z = y & _M63
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M63
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M63
        return z ^ (z >> 31)

    def copy(self):
        return Splitmix(self.y)


class SplitmixStream:
    """Splitmix64 exposed with the generator protocol (the ideal sampler)."""

    out_bits = 64
    weyl_bits = 64
    warmup_steps = 0

    def __init__(self, y=0):
        self._sm = Splitmix(y)

    def step(self) -> int:
        return self._sm.next64()

    @property
    def state(self):
        return (self._sm.y,)

    def copy(self):
        return SplitmixStream(self._sm.y)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "SplitmixStream(y=%#x)" % self._sm.y


_SIMPLE = {
    "cwg64": lambda s: Cwg64(s=s),
    "cwg128_64": lambda s: Cwg128_64(s=s),
    "cwg128": lambda s: Cwg128(c0=s),
    "cwg8": lambda s: CwgA(8, s=s),
    "cwg16": lambda s: CwgA(16, s=s),
    "cwg32": lambda s: CwgA(32, s=s),
    "cwg16_8": lambda s: CwgB(8, s=s),
    "cwg32_16": lambda s: CwgB(16, s=s),
    "cwg64_32": lambda s: CwgB(32, s=s),
    "collatz": lambda s: CollatzBit(s=s),
    "cwg128_2": lambda s: Cwg128_2(s=s),
    "cwg64_rot2": lambda s: Cwg64Rot2(s=s),
}

_SCALED_A = {"cwg8": 8, "cwg16": 16, "cwg32": 32}
_SCALED_B = {"cwg16_8": 8, "cwg32_16": 16, "cwg64_32": 32}
_RECIPES = frozenset({"cwg64", "cwg128_64", "cwg128",
                      *_SCALED_A, *_SCALED_B})

ALGOS = tuple(_SIMPLE)


def seed_simple(algo, s):
    """State with increment s and every other substate zero."""
    try:
        make = _SIMPLE[algo]
    except KeyError:
        raise ValueError("unknown algorithm %r" % algo) from None
    return make(s)


def warmup(gen):
    """Run the decorrelation steps (48, or 96 for the 128-bit family)."""
    for _ in range(gen.warmup_steps):
        gen.step()
    return gen


def _seed_from(algo, sm):
    if algo == "cwg64":
        x = sm.next64()
        return Cwg64(x=x, s=(sm.next63() << 1) | 1)
    if algo == "cwg128_64":
        hi = sm.next64()
        lo = sm.next64()
        return Cwg128_64(x=(hi << 64) | lo, s=(sm.next63() << 1) | 1)
    if algo == "cwg128":
        c1 = sm.next64()
        hi = sm.next64()
        return Cwg128(c0=(hi << 64) | (sm.next63() << 1) | 1, c1=c1)
    if algo in _SCALED_A:
        n = _SCALED_A[algo]
        x = sm.next64() & ((1 << n) - 1)
        s = ((sm.next63() & ((1 << (n - 1)) - 1)) << 1) | 1
        return CwgA(n, x=x, s=s)
    if algo in _SCALED_B:
        n = _SCALED_B[algo]
        mask = (1 << n) - 1
        hi = sm.next64() & mask
        lo = sm.next64() & mask
        s = ((sm.next63() & ((1 << (n - 1)) - 1)) << 1) | 1
        return CwgB(n, x=(hi << n) | lo, s=s)
    raise ValueError("no splitmix seeding recipe for %r" % algo)


def seed_splitmix(algo, entropy):
    """Serially seed one stream from a fresh Splitmix counter (no warm-up)."""
    return _seed_from(algo, Splitmix(entropy))


def increment(gen):
    """The stream-identity Weyl increment of a generator state."""
    return gen.c0 if isinstance(gen, Cwg128) else gen.s


class StreamFamily:
    """Allocator of independent streams off one shared Splitmix counter.

    Issued streams are warmed up and carry pairwise-distinct odd
    increments; a family is single-threaded (serialize next_stream calls).
    """

    def __init__(self, algo, entropy=0):
        if algo not in _RECIPES:
            raise ValueError("no splitmix seeding recipe for %r" % algo)
        self.algo = algo
        self.entropy = entropy
        self.issued = 0
        self._sm = Splitmix(entropy)

    def next_stream(self):
        gen = _seed_from(self.algo, self._sm)
        warmup(gen)
        self.issued += 1
        return gen

    def __repr__(self):
        return "StreamFamily(%r, entropy=%#x, issued=%d)" % (
            self.algo, self.entropy, self.issued)
