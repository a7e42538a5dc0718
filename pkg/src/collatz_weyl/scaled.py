"""Width-parameterized replicas of the two production generator shapes.

``CwgA(n)`` scales the CWG64 recurrence down to n bits, ``CwgB(n)`` scales
CWG128-64 (2n-bit chaotic substate over n-bit accumulator/Weyl).  Every
shift keeps the same fraction of the word: the state shift stays 1 and the
output scrambler shift is 3n/4, preserving the upper-accumulator-bits XOR
lower-x-bits geometry.  At n=64 both are bit-identical to the full-width
classes.

Widths 8 and 16 exist so that the period structure is exhaustively
measurable; they carry no statistical-quality claim of their own.
"""

from .generators import _odd

WIDTHS = (8, 16, 32, 64)


def _check_width(n):
    if n not in WIDTHS:
        raise ValueError("unsupported width %r (choose from %s)" % (n, WIDTHS))
    return n


class CwgA:
    """n-bit CWG64 shape: out = (a >> 3n/4) ^ x."""

    def __init__(self, n, x=0, a=0, weyl=0, s=1):
        self.n = _check_width(n)
        self.mask = (1 << n) - 1
        self.shift = 3 * n // 4
        self.out_bits = n
        self.weyl_bits = n
        self.warmup_steps = 48
        self.x = x & self.mask
        self.a = a & self.mask
        self.weyl = weyl & self.mask
        self.s = _odd(s, n)

    def step(self) -> int:
        mask = self.mask
        a = (self.a + self.x) & mask
        t = ((self.x >> 1) * (a | 1)) & mask
        weyl = (self.weyl + self.s) & mask
        x = t ^ weyl
        self.a = a
        self.weyl = weyl
        self.x = x
        return (a >> self.shift) ^ x

    @property
    def state(self):
        return (self.x, self.a, self.weyl, self.s)

    def copy(self):
        return CwgA(self.n, self.x, self.a, self.weyl, self.s)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "CwgA(%d, x=%#x, a=%#x, weyl=%#x, s=%#x)" % (
            (self.n,) + self.state)


class CwgB:
    """n-bit CWG128-64 shape: 2n-bit x, 2n-bit output."""

    def __init__(self, n, x=0, a=0, weyl=0, s=1):
        self.n = _check_width(n)
        self.mask = (1 << n) - 1
        self.mask2 = (1 << (2 * n)) - 1
        self.shift = 3 * n // 4
        self.out_bits = 2 * n
        self.weyl_bits = n
        self.warmup_steps = 48
        self.x = x & self.mask2
        self.a = a & self.mask
        self.weyl = weyl & self.mask
        self.s = _odd(s, n)

    def step(self) -> int:
        mask = self.mask
        a = (self.a + self.x) & mask
        t = ((self.x | 1) * (a >> 1)) & self.mask2
        weyl = (self.weyl + self.s) & mask
        x = t ^ weyl
        self.a = a
        self.weyl = weyl
        self.x = x
        return (a >> self.shift) ^ x

    @property
    def state(self):
        return (self.x, self.a, self.weyl, self.s)

    def copy(self):
        return CwgB(self.n, self.x, self.a, self.weyl, self.s)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "CwgB(%d, x=%#x, a=%#x, weyl=%#x, s=%#x)" % (
            (self.n,) + self.state)
