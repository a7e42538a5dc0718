"""Unit checks for the three production generators."""

import pytest

from collatz_weyl.generators import Cwg64, Cwg128_64, Cwg128, EvenIncrement

M64 = (1 << 64) - 1
M128 = (1 << 128) - 1


def test_cwg64_hand_trace():
    g = Cwg64(s=1)
    assert g.outputs(3) == [1, 2, 0]
    assert g.state == (0, 3, 3, 1)


def test_cwg128_64_hand_trace():
    g = Cwg128_64(s=1)
    assert g.outputs(3) == [1, 2, 0]


def test_cwg128_hand_trace():
    g = Cwg128(c0=1)
    assert g.outputs(3) == [1, 2, 0]


@pytest.mark.parametrize("cls", [Cwg64, Cwg128_64, Cwg128])
def test_deterministic(cls):
    a, b = cls(), cls()
    assert a.outputs(200) == b.outputs(200)


def test_copy_is_independent():
    g = Cwg64(x=9, a=7, weyl=5, s=3)
    h = g.copy()
    g.outputs(10)
    assert h.state == (9, 7, 5, 3)
    assert h.step() == Cwg64(x=9, a=7, weyl=5, s=3).step()


@pytest.mark.parametrize("cls,kw", [
    (Cwg64, dict(s=2)),
    (Cwg64, dict(s=0)),
    (Cwg128_64, dict(s=4)),
    (Cwg128, dict(c0=6)),
])
def test_rejects_even_increment(cls, kw):
    with pytest.raises(EvenIncrement):
        cls(**kw)


@pytest.mark.parametrize("cls,kw", [
    (Cwg64, dict(s=-1)),
    (Cwg64, dict(s=1 << 64)),
    (Cwg128, dict(c0=1 << 128)),
])
def test_rejects_out_of_range_increment(cls, kw):
    with pytest.raises(ValueError):
        cls(**kw)


def test_even_increment_is_value_error():
    assert issubclass(EvenIncrement, ValueError)


def test_weyl_closed_form():
    """After k steps the Weyl word is exactly k*s mod 2^w."""
    s = 0x9E3779B97F4A7C15
    g = Cwg64(x=123, a=456, weyl=789, s=s)
    for k in range(1, 300):
        g.step()
        assert g.weyl == (789 + k * s) & M64
    h = Cwg128(c0=s, c1=1, c2=2, c3=3)
    for k in range(1, 100):
        h.step()
        assert h.c3 == (3 + k * s) & M128


def test_accumulator_tracks_x_sum():
    """a is the running sum of pre-step x values."""
    g = Cwg64(x=42, a=0, weyl=0, s=1)
    total = 0
    for _ in range(200):
        total = (total + g.x) & M64
        g.step()
        assert g.a == total


def test_scrambler_linearity():
    """output XOR x equals the shifted accumulator."""
    g = Cwg64(x=7, a=11, weyl=13, s=0xDEAD_BEEF | 1)
    for _ in range(500):
        out = g.step()
        assert out ^ g.x == g.a >> 48
    h = Cwg128(c0=0x1_0000_0001, c1=3, c2=5, c3=7)
    for _ in range(200):
        out = h.step()
        assert out ^ h.c1 == h.c2 >> 96


def test_cwg128_64_output_is_full_state_width():
    g = Cwg128_64(x=(1 << 127) | 5, a=3, weyl=9, s=1)
    outs = g.outputs(64)
    assert any(o > M64 for o in outs)
    assert all(0 <= o <= M128 for o in outs)
    assert g.out_bits == 128


def test_high_half_never_feeds_back():
    """Cwg128_64: bits 64..127 of x influence nothing but the output."""
    lo = Cwg128_64(x=0x1234, a=5, weyl=6, s=7)
    hi = Cwg128_64(x=(0xABCDEF << 64) | 0x1234, a=5, weyl=6, s=7)
    for _ in range(128):
        a, b = lo.step(), hi.step()
        assert a & M64 == b & M64
        assert (lo.a, lo.weyl) == (hi.a, hi.weyl)
        assert lo.x & M64 == hi.x & M64


def test_seed_divergence():
    """Same state, different increments: streams separate quickly."""
    a = Cwg64(x=1, a=1, weyl=1, s=3)
    b = Cwg64(x=1, a=1, weyl=1, s=5)
    outs_a = a.outputs(64)
    outs_b = b.outputs(64)
    agree = sum(1 for u, v in zip(outs_a, outs_b) if u == v)
    assert agree <= 2


def test_masking_of_wide_inputs():
    g = Cwg64(x=(1 << 70) | 9, a=1 << 64, weyl=(1 << 65) + 4, s=1)
    assert g.state == (9, 0, 4, 1)


@pytest.mark.parametrize("cls,bits", [(Cwg64, 64), (Cwg128_64, 128), (Cwg128, 128)])
def test_outputs_in_range(cls, bits):
    g = cls()
    for o in g.outputs(500):
        assert 0 <= o < (1 << bits)


def test_repr_roundtrip_fields():
    g = Cwg64(x=1, a=2, weyl=3, s=5)
    r = repr(g)
    assert "Cwg64" in r and "0x5" in r
