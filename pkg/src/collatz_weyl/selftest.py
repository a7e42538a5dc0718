"""Golden-vector self-test: hand traces, frozen 1000-output sequences,
seeding recipes, stream digests, and a branchless/piecewise sample.

``run()`` returns the number of failing sections and logs one line per
section; the CLI turns that into the exit status.
"""

import hashlib
import json
from importlib import resources

from .experimental import CollatzBit, Cwg64Rot2, Cwg128_2, rotr64
from .generators import Cwg64, Cwg128, Cwg128_64
from .scaled import CwgA, CwgB
from .seeding import (Splitmix, StreamFamily, seed_simple, seed_splitmix,
                      warmup)


def load_vectors():
    path = resources.files("collatz_weyl") / "golden" / "vectors.json"
    return json.loads(path.read_text())


_MAKERS = {
    "cwg64": lambda v: Cwg64(*v),
    "cwg128_64": lambda v: Cwg128_64(*v),
    "cwg128": lambda v: Cwg128(*v),
    "collatz": lambda v: CollatzBit(*v),
    "cwg128_2": lambda v: Cwg128_2(*v),
    "cwg64_rot2": lambda v: Cwg64Rot2(*v),
}
for _n in (8, 16, 32, 64):
    _MAKERS["cwga%d" % _n] = lambda v, n=_n: CwgA(n, *v)
    _MAKERS["cwgb%d" % _n] = lambda v, n=_n: CwgB(n, *v)


def _gen_from(name, seed_hex):
    return _MAKERS[name]([int(v, 16) for v in seed_hex])


def _first_mismatch(got, want):
    for i, (g, w) in enumerate(zip(got, want)):
        if g != w:
            return i
    return None if len(got) == len(want) else min(len(got), len(want))


def _hex(vals):
    return ["0x%x" % v for v in vals]


def _le_digest(vals, bits):
    h = hashlib.sha256()
    for v in vals:
        h.update(v.to_bytes(bits // 8, "little"))
    return h.hexdigest()


def _traces():
    assert Cwg64(s=1).outputs(3) == [1, 2, 0]
    assert Cwg128_64(s=1).outputs(3) == [1, 2, 0]
    assert Cwg128(c0=1).outputs(3) == [1, 2, 0]
    assert CwgA(8, s=1).step() == 1
    assert CwgB(8, s=1).step() == 1
    assert Splitmix(0).next64() == 0xE220A8397B1DCDAF
    sm = Splitmix(0)
    sm.next63()
    assert sm.y == 0x9E3779B97F4A7C15
    assert rotr64(1, 1) == 1 << 63
    assert rotr64(0xABCD, 0) == 0xABCD
    assert rotr64(1 << 63, 63) == 1
    g = CollatzBit(x=1, s=1)
    assert g.step() == 1 and g.x == 3
    g = CollatzBit(x=4, s=1)
    assert g.step_reference() == 1 and g.x == 3
    assert Cwg128_2(s=1).step() == 1
    assert Cwg64Rot2(s=1).step() == 1


def run(quick=False, log=print, vectors=None):
    """Run all golden checks; returns the number of failed sections."""
    failures = 0

    def section(name, fn):
        nonlocal failures
        try:
            fn()
        except AssertionError as exc:
            failures += 1
            log("FAIL %s: %s" % (name, exc))
        else:
            log("ok   %s" % name)

    section("hand traces", _traces)
    if quick:
        return failures

    vec = load_vectors() if vectors is None else vectors

    def check_sequence(name, entry):
        def fn():
            gen = _gen_from(name, entry["seed"])
            if name == "collatz":
                got = "".join(str(gen.step()) for _ in range(1000))
                want = entry["bits"]
            else:
                got = _hex(gen.outputs(len(entry["outputs"])))
                want = entry["outputs"]
            i = _first_mismatch(got, want)
            assert i is None, "first mismatch at index %d (%s != %s)" % (
                i, got[i], want[i])
        return fn

    for name, entry in sorted(vec["sequences"].items()):
        section("sequence %s" % name, check_sequence(name, entry))

    def splitmix_check():
        sm64 = Splitmix(int(vec["splitmix"]["seed_y"], 16))
        got = _hex([sm64.next64() for _ in range(1000)])
        i = _first_mismatch(got, vec["splitmix"]["splitmix64"])
        assert i is None, "splitmix64 mismatch at %d" % i
        sm63 = Splitmix(int(vec["splitmix"]["seed_y"], 16))
        got = _hex([sm63.next63() for _ in range(1000)])
        i = _first_mismatch(got, vec["splitmix"]["splitmix63"])
        assert i is None, "splitmix63 mismatch at %d" % i
    section("splitmix outputs", splitmix_check)

    def recipe_check(entropy_hex, tag, entry):
        def fn():
            gen = seed_splitmix(tag, int(entropy_hex, 16))
            assert _hex(gen.state) == entry["state"], "seeded state differs"
            probe = gen.copy()
            got = _hex(probe.outputs(16))
            assert got == entry["outputs"], "pre-warm-up outputs differ"
            warmed = warmup(gen.copy())
            assert _hex(warmed.state) == entry["warmed_state"], \
                "warmed state differs"
            got = _hex(warmed.outputs(16))
            assert got == entry["warmed_outputs"], "post-warm-up differs"
        return fn

    tag_map = {"cwg64": "cwg64", "cwg128_64": "cwg128_64",
               "cwg128": "cwg128", "cwga16": "cwg16", "cwgb16": "cwg32_16"}
    for entropy_hex, entries in sorted(vec["seed_splitmix"].items()):
        for name, entry in sorted(entries.items()):
            section("seed recipe %s entropy %s" % (name, entropy_hex),
                    recipe_check(entropy_hex, tag_map[name], entry))

    def family_check(name, streams):
        def fn():
            fam = StreamFamily(name, entropy=0)
            for i, want in enumerate(streams):
                gen = fam.next_stream()
                assert _hex(gen.state) == want["state"], \
                    "stream %d state differs" % i
                assert "0x%x" % gen.step() == want["first_output"], \
                    "stream %d first output differs" % i
        return fn

    for name, streams in sorted(vec["family_entropy_0"].items()):
        section("stream family %s" % name, family_check(name, streams))

    def digest_check():
        d = vec["stream_sha256_1mib"]
        got = _le_digest(seed_simple("cwg64", 1).outputs(131072), 64)
        assert got == d["cwg64_seed_simple_1"], "cwg64 seed-simple digest"
        got = _le_digest(seed_splitmix("cwg64", 0).outputs(131072), 64)
        assert got == d["cwg64_entropy_0"], "cwg64 entropy-0 digest"
        got = _le_digest(seed_splitmix("cwg128_64", 0).outputs(65536), 128)
        assert got == d["cwg128_64_entropy_0"], "cwg128_64 digest"
        got = _le_digest(seed_splitmix("cwg128", 0).outputs(65536), 128)
        assert got == d["cwg128_entropy_0"], "cwg128 digest"
    section("1 MiB stream digests", digest_check)

    def equivalence_check():
        rng = Cwg128(c0=0x9E3779B97F4A7C15)
        for i in range(20000):
            r = rng.step()
            a = CollatzBit(x=r, weyl=r >> 11, s=(r >> 3) | 1)
            b = a.copy()
            bit_a, bit_b = a.step(), b.step_reference()
            assert bit_a == bit_b and a.state == b.state, \
                "divergence at sample %d" % i
    section("branchless equivalence sample", equivalence_check)

    return failures
