"""Splitmix pipeline, seeding recipes, warm-up, stream allocation."""

import pytest

from collatz_weyl.generators import Cwg64, Cwg128_64, Cwg128, EvenIncrement
from collatz_weyl.scaled import CwgA, CwgB
from collatz_weyl.seeding import (ALGOS, GAMMA, Splitmix, SplitmixStream,
                                  StreamFamily, increment, seed_simple,
                                  seed_splitmix, warmup)

M63 = (1 << 63) - 1


def test_splitmix64_known_value():
    assert Splitmix(0).next64() == 0xE220A8397B1DCDAF


def test_splitmix_counter_is_shared():
    """next63 advances the same 64-bit counter as next64."""
    a = Splitmix(0)
    a.next64()
    first63_after = a.next63()
    b = Splitmix(GAMMA & ((1 << 64) - 1))  # counter already advanced once
    assert b.next63() == first63_after
    assert a.y == 2 * GAMMA % (1 << 64)


def test_next63_range():
    sm = Splitmix(0xDEADBEEF)
    for _ in range(2000):
        assert sm.next63() <= M63


def test_splitmix_counter_wraps():
    sm = Splitmix((1 << 64) - 1)
    v = sm.next64()
    assert 0 <= v < 1 << 64
    assert sm.y == GAMMA - 1


def test_splitmix_stream_protocol():
    g = SplitmixStream(3)
    assert g.out_bits == 64 and g.warmup_steps == 0
    h = g.copy()
    assert g.outputs(5) == h.outputs(5)
    sm = Splitmix(3)
    for _ in range(5):
        sm.next64()
    assert g.step() == sm.next64()


@pytest.mark.parametrize("algo", ALGOS)
def test_seed_simple_zero_state(algo):
    g = seed_simple(algo, 1)
    assert increment(g) == 1
    zeros = [v for v in g.state if v not in (0, 1)]
    assert zeros == []


def test_seed_simple_cwg128_increment_slot():
    g = seed_simple("cwg128", 0xABC | 1)
    assert isinstance(g, Cwg128)
    assert g.c0 == 0xABC | 1
    assert (g.c1, g.c2, g.c3) == (0, 0, 0)


def test_seed_simple_rejects_even():
    with pytest.raises(EvenIncrement):
        seed_simple("cwg64", 8)


def test_seed_simple_unknown_algo():
    with pytest.raises(ValueError):
        seed_simple("xorshift", 1)


def test_warmup_counts():
    for algo, steps in (("cwg64", 48), ("cwg128_64", 48), ("cwg128", 96),
                        ("cwg16", 48), ("cwg32_16", 48)):
        g = seed_simple(algo, 5)
        h = seed_simple(algo, 5)
        warmed = warmup(g)
        assert warmed is g
        for _ in range(steps):
            h.step()
        assert g.state == h.state, algo


def test_recipe_cwg64_draw_order():
    sm = Splitmix(42)
    x = sm.next64()
    s = (sm.next63() << 1) | 1
    g = seed_splitmix("cwg64", 42)
    assert isinstance(g, Cwg64)
    assert g.state == (x, 0, 0, s)


def test_recipe_cwg128_64_high_word_first():
    sm = Splitmix(42)
    hi, lo = sm.next64(), sm.next64()
    s = (sm.next63() << 1) | 1
    g = seed_splitmix("cwg128_64", 42)
    assert isinstance(g, Cwg128_64)
    assert g.state == ((hi << 64) | lo, 0, 0, s)


def test_recipe_cwg128_layout():
    sm = Splitmix(42)
    c1 = sm.next64()
    hi = sm.next64()
    c0 = (hi << 64) | (sm.next63() << 1) | 1
    g = seed_splitmix("cwg128", 42)
    assert isinstance(g, Cwg128)
    assert g.state == (c0, c1, 0, 0)


@pytest.mark.parametrize("algo,n", [("cwg8", 8), ("cwg16", 16), ("cwg32", 32)])
def test_recipe_scaled_a_truncates(algo, n):
    sm = Splitmix(7)
    x = sm.next64() & ((1 << n) - 1)
    s = ((sm.next63() & ((1 << (n - 1)) - 1)) << 1) | 1
    g = seed_splitmix(algo, 7)
    assert isinstance(g, CwgA) and g.n == n
    assert g.state == (x, 0, 0, s)


@pytest.mark.parametrize("algo,n",
                         [("cwg16_8", 8), ("cwg32_16", 16), ("cwg64_32", 32)])
def test_recipe_scaled_b_composes_x(algo, n):
    sm = Splitmix(7)
    mask = (1 << n) - 1
    hi, lo = sm.next64() & mask, sm.next64() & mask
    s = ((sm.next63() & ((1 << (n - 1)) - 1)) << 1) | 1
    g = seed_splitmix(algo, 7)
    assert isinstance(g, CwgB) and g.n == n
    assert g.state == ((hi << n) | lo, 0, 0, s)


@pytest.mark.parametrize("algo", sorted(
    {"cwg64", "cwg128_64", "cwg128", "cwg8", "cwg16", "cwg32",
     "cwg16_8", "cwg32_16", "cwg64_32"}))
def test_recipe_increment_always_odd(algo):
    for e in range(25):
        assert increment(seed_splitmix(algo, e)) & 1


def test_seed_splitmix_no_recipe():
    for algo in ("collatz", "cwg128_2", "cwg64_rot2"):
        with pytest.raises(ValueError):
            seed_splitmix(algo, 0)
        with pytest.raises(ValueError):
            StreamFamily(algo)


def test_family_first_stream_is_warmed_recipe():
    fam = StreamFamily("cwg64", entropy=12)
    first = fam.next_stream()
    assert first.state == warmup(seed_splitmix("cwg64", 12)).state
    assert fam.issued == 1


def test_family_serial_draws():
    """Stream k+1 continues the same splitmix counter as stream k."""
    fam = StreamFamily("cwg128", entropy=5)
    sm = Splitmix(5)
    for _ in range(4):
        g = fam.next_stream()
        c1 = sm.next64()
        c0 = (sm.next64() << 64) | (sm.next63() << 1) | 1
        h = warmup(Cwg128(c0=c0, c1=c1))
        assert g.state == h.state


def test_family_increments_distinct():
    fam = StreamFamily("cwg64", entropy=0)
    incs = [increment(fam.next_stream()) for _ in range(300)]
    assert all(v & 1 for v in incs)
    assert len(set(incs)) == 300
    assert fam.issued == 300


def test_family_entropy_changes_streams():
    a = StreamFamily("cwg32", entropy=1).next_stream()
    b = StreamFamily("cwg32", entropy=2).next_stream()
    assert a.state != b.state


def test_increment_helper():
    assert increment(Cwg64(s=9)) == 9
    assert increment(Cwg128(c0=7)) == 7
    assert increment(CwgB(16, s=3)) == 3
