"""The three production Collatz-Weyl generators (CWG64, CWG128-64, CWG128).

Each generator is a small mutable state machine: ``step()`` advances the
state once and returns the next output word.  States are plain values —
``copy()`` gives an independent stream and nothing is shared, but a single
instance must not be stepped from two threads at once.

All arithmetic wraps modulo the substate width.  The update order is fixed:
accumulator first, multiply second, Weyl increment third, state XOR fourth,
output last.
"""

_MASK64 = (1 << 64) - 1
_MASK128 = (1 << 128) - 1


class EvenIncrement(ValueError):
    """Weyl increments must be odd; even ones would merge streams."""


def _odd(s, width, name="s"):
    if not 0 <= s <= (1 << width) - 1:
        raise ValueError("%s out of range for %d bits: %r" % (name, width, s))
    if s & 1 == 0:
        raise EvenIncrement("%s must be odd, got %#x" % (name, s))
    return s


class Cwg64:
    """64-bit state, 64-bit output: x = (x>>1)*((a+=x)|1) ^ (weyl+=s)."""

    out_bits = 64
    weyl_bits = 64
    warmup_steps = 48

    def __init__(self, x=0, a=0, weyl=0, s=1):
        self.x = x & _MASK64
        self.a = a & _MASK64
        self.weyl = weyl & _MASK64
        self.s = _odd(s, 64)

    def step(self) -> int:
        a = (self.a + self.x) & _MASK64
        t = ((self.x >> 1) * (a | 1)) & _MASK64
        weyl = (self.weyl + self.s) & _MASK64
        x = t ^ weyl
        self.a = a
        self.weyl = weyl
        self.x = x
        return (a >> 48) ^ x

    @property
    def state(self):
        return (self.x, self.a, self.weyl, self.s)

    def copy(self):
        return Cwg64(self.x, self.a, self.weyl, self.s)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "Cwg64(x=%#x, a=%#x, weyl=%#x, s=%#x)" % self.state


class Cwg128_64:
    """128-bit chaotic substate, 64-bit accumulator/Weyl; 128-bit output.

    Only the low 64 bits of x feed back into a, so the top half of x never
    influences the rest of the state.
    """

    out_bits = 128
    weyl_bits = 64
    warmup_steps = 48

    def __init__(self, x=0, a=0, weyl=0, s=1):
        self.x = x & _MASK128
        self.a = a & _MASK64
        self.weyl = weyl & _MASK64
        self.s = _odd(s, 64)

    def step(self) -> int:
        a = (self.a + self.x) & _MASK64
        t = ((self.x | 1) * (a >> 1)) & _MASK128
        weyl = (self.weyl + self.s) & _MASK64
        x = t ^ weyl
        self.a = a
        self.weyl = weyl
        self.x = x
        return (a >> 48) ^ x

    @property
    def state(self):
        return (self.x, self.a, self.weyl, self.s)

    def copy(self):
        return Cwg128_64(self.x, self.a, self.weyl, self.s)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "Cwg128_64(x=%#x, a=%#x, weyl=%#x, s=%#x)" % self.state


class Cwg128:
    """All-128-bit variant; c0 is the (odd) Weyl increment."""

    out_bits = 128
    weyl_bits = 128
    warmup_steps = 96

    def __init__(self, c0=1, c1=0, c2=0, c3=0):
        self.c0 = _odd(c0, 128, "c0")
        self.c1 = c1 & _MASK128
        self.c2 = c2 & _MASK128
        self.c3 = c3 & _MASK128

    def step(self) -> int:
        c2 = (self.c2 + self.c1) & _MASK128
        t = ((self.c1 >> 1) * (c2 | 1)) & _MASK128
        c3 = (self.c3 + self.c0) & _MASK128
        c1 = t ^ c3
        self.c1 = c1
        self.c2 = c2
        self.c3 = c3
        return (c2 >> 96) ^ c1

    @property
    def state(self):
        return (self.c0, self.c1, self.c2, self.c3)

    def copy(self):
        return Cwg128(self.c0, self.c1, self.c2, self.c3)

    def outputs(self, k):
        return [self.step() for _ in range(k)]

    def __repr__(self):
        return "Cwg128(c0=%#x, c1=%#x, c2=%#x, c3=%#x)" % self.state
