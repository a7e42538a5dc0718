"""Research-grade generators: the 1-bit original-Collatz construction and
two conditional-multiplier variants.

Nothing here carries a quality or stability guarantee; the classes exist
for equivalence testing and exploration.  The 1-bit generator's branchless
and piecewise steppers are required to agree bit-for-bit on every input —
both compute the odd arm as x + ((x+1) >> 1) in wrapping arithmetic, which
is "(3x+1)/2" everywhere except that the +1 carry out of the top bit is
dropped.
"""

from .generators import _MASK64, _MASK128, _odd


def rotr64(v, k):
    """Rotate a 64-bit word right; k is taken mod 64 and rotr64(v, 0) == v."""
    k &= 63
    return ((v >> k) | (v << ((64 - k) & 63))) & _MASK64


class CollatzBit:
    """1-bit-per-step generator over a 128-bit Collatz-with-Weyl map."""

    out_bits = 1
    weyl_bits = 128
    warmup_steps = 96

    def __init__(self, x=0, weyl=0, s=1):
        self.x = x & _MASK128
        self.weyl = weyl & _MASK128
        self.s = _odd(s, 128)

    def step(self) -> int:
        # branchless form: arms selected by the parity mask -(x & 1)
        x = self.x
        m = (-(x & 1)) & _MASK128
        arm = (m & ((x + (((x + 1) & _MASK128) >> 1)) & _MASK128)) \
            | ((~m & _MASK128) & (x >> 1))
        weyl = (self.weyl + self.s) & _MASK128
        x = arm ^ weyl
        self.weyl = weyl
        self.x = x
        return x & 1

    def step_reference(self) -> int:
        # piecewise form of the same map
        x = self.x
        if x & 1:
            x = (x + (((x + 1) & _MASK128) >> 1)) & _MASK128
        else:
            x >>= 1
        weyl = (self.weyl + self.s) & _MASK128
        x ^= weyl
        self.weyl = weyl
        self.x = x
        return x & 1

    @property
    def state(self):
        return (self.x, self.weyl, self.s)

    def copy(self):
        return CollatzBit(self.x, self.weyl, self.s)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "CollatzBit(x=%#x, weyl=%#x, s=%#x)" % self.state


class Cwg128_2:
    """CWG128-2: multiplier arm chosen by the parity of x."""

    out_bits = 128
    weyl_bits = 128
    warmup_steps = 96

    def __init__(self, x=0, a=0, weyl=0, s=1):
        self.x = x & _MASK128
        self.a = a & _MASK128
        self.weyl = weyl & _MASK128
        self.s = _odd(s, 128)

    def step(self) -> int:
        x = self.x
        a = (self.a + x) & _MASK128
        if x & 1:
            t = (x * (a >> 1)) & _MASK128
        else:
            t = ((x >> 1) * (a | 1)) & _MASK128
        weyl = (self.weyl + self.s) & _MASK128
        x = t ^ weyl
        self.a = a
        self.weyl = weyl
        self.x = x
        return (a >> 96) ^ x

    @property
    def state(self):
        return (self.x, self.a, self.weyl, self.s)

    def copy(self):
        return Cwg128_2(self.x, self.a, self.weyl, self.s)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "Cwg128_2(x=%#x, a=%#x, weyl=%#x, s=%#x)" % self.state


class Cwg64Rot2:
    """CWG64-rot-2: data-dependent rotations instead of plain shifts."""

    out_bits = 64
    weyl_bits = 64
    warmup_steps = 48

    def __init__(self, x=0, a=0, weyl=0, s=1):
        self.x = x & _MASK64
        self.a = a & _MASK64
        self.weyl = weyl & _MASK64
        self.s = _odd(s, 64)

    def step(self) -> int:
        x = self.x
        a = (self.a + x) & _MASK64
        if x & 1:
            t = (x * rotr64(a >> 1, a >> 58)) & _MASK64
        else:
            t = (rotr64(x >> 1, x >> 58) * (a | 1)) & _MASK64
        weyl = (self.weyl + self.s) & _MASK64
        x = t ^ weyl
        self.a = a
        self.weyl = weyl
        self.x = x
        return rotr64(a, 48) ^ x

    @property
    def state(self):
        return (self.x, self.a, self.weyl, self.s)

    def copy(self):
        return Cwg64Rot2(self.x, self.a, self.weyl, self.s)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "Cwg64Rot2(x=%#x, a=%#x, weyl=%#x, s=%#x)" % self.state
