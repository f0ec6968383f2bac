"""Arithmetic in F_q with q = 2^127 - 1.

Field elements are plain Python ints kept in the canonical range [0, q).
Each routine reports itself to :mod:`mukummer.opcount` so that algorithm
costs can be measured exactly.  The exponentiation chains for inversion and
for g -> g^(-1/2) are fixed addition chains, so their cost never depends on
the input.
"""

from collections import namedtuple

from .opcount import paused, tick

q = (1 << 127) - 1
MASK128 = (1 << 128) - 1


class MalformedEncoding(ValueError):
    """A byte string does not encode a canonical field element."""


SmallConstant = namedtuple("SmallConstant", "magnitude sign")


def small(value):
    """SmallConstant for a signed integer whose magnitude fits in 16 bits."""
    mag = abs(value)
    if mag >= 1 << 16:
        raise ValueError("constant %d does not fit in 16 bits" % value)
    return SmallConstant(mag, -1 if value < 0 else 1)


def small_value(c):
    """Field element represented by a SmallConstant."""
    return (c.sign * c.magnitude) % q


def reduce(wide):
    """Reduce a nonnegative integer below 2^256 modulo q.

    Folds the top half down using 2^128 = 2 (mod q), then the bit at 2^127
    using 2^127 = 1, and finishes with one conditional subtraction.
    """
    if wide < 0 or wide >> 256:
        raise ValueError("reduce expects 0 <= wide < 2^256")
    x = (wide & MASK128) + 2 * (wide >> 128)
    x = (x & q) + (x >> 127)
    x = (x & q) + (x >> 127)
    if x >= q:
        x -= q
    return x


def add(x, y):
    tick("a")
    r = x + y
    return r - q if r >= q else r


def sub(x, y):
    tick("s")
    r = x - y
    return r + q if r < 0 else r


def neg(x):
    tick("neg")
    return q - x if x else 0


def mul(x, y):
    tick("M")
    return x * y % q


def sqr(x):
    tick("S")
    return x * x % q


def mulconst(x, c):
    """Multiply by a signed 16-bit constant; counted as a single m_c."""
    tick("m_c")
    return x * c.magnitude * c.sign % q


def _sqr_n(x, n):
    for _ in range(n):
        x = sqr(x)
    return x


def _pow_2k_minus_1(x):
    """Return (x^(2^125 - 1), 125) using the chain 1,2,3,5,10,20,40,80,120,125.

    Costs 9M + 124S.  Each step t_{i+j} = t_i^(2^j) * t_j.
    """
    t1 = x
    t2 = mul(sqr(t1), t1)
    t3 = mul(sqr(t2), t1)
    t5 = mul(_sqr_n(t3, 2), t2)
    t10 = mul(_sqr_n(t5, 5), t5)
    t20 = mul(_sqr_n(t10, 10), t10)
    t40 = mul(_sqr_n(t20, 20), t20)
    t80 = mul(_sqr_n(t40, 40), t40)
    t120 = mul(_sqr_n(t80, 40), t40)
    t125 = mul(_sqr_n(t120, 5), t5)
    return t125


def invert(x):
    """x^(q-2), i.e. 1/x for x != 0 and 0 for x = 0.  Costs 10M + 126S.

    q - 2 = 4(2^125 - 1) + 1.
    """
    t = _pow_2k_minus_1(x)
    return mul(_sqr_n(t, 2), x)


def inverse(x):
    """Same value as invert, tallied as a single I.

    Cost tables for the higher-level algorithms list inversions as their own
    unit, so the chain inside is not itemised.
    """
    tick("I")
    with paused():
        return invert(x)


def powminhalf(x):
    """x^((3q-5)/4), a square root of 1/x when x is a nonzero square.

    (3q-5)/4 = (2^126 - 1) + (2^125 - 1).  Costs 11M + 125S.
    """
    t125 = _pow_2k_minus_1(x)
    t126 = mul(sqr(t125), x)
    return mul(t126, t125)


def select(bit, x, y):
    """Return x if bit == 0 else y, without branching on bit."""
    mask = -bit & MASK128
    return x ^ ((x ^ y) & mask)


def sqrtinv(x, y, bit):
    """Return (s, t) with s^2 = x, lsb(s) = bit and t = 1/y.

    Computed as (+-x*y*z, x*y*z^2) with z = powminhalf(x*y^2).  The result s
    is only a square root if x is a square; callers must check s^2 = x.
    Costs 15M + 126S + 1neg.
    """
    y2 = sqr(y)
    z = powminhalf(mul(x, y2))
    xy = mul(x, y)
    s = mul(xy, z)
    t = mul(s, z)
    ns = neg(s)
    s = select((s & 1) ^ bit, s, ns)
    return s, t


def lsb(x):
    return x & 1


def is_square(x):
    """Euler's criterion; used only by tests and diagnostics (not counted)."""
    return x == 0 or pow(x, (q - 1) // 2, q) == 1


def encode(x):
    """16-byte little-endian canonical encoding."""
    return x.to_bytes(16, "little")


def decode(b):
    """Inverse of encode; rejects lengths other than 16 and values >= q."""
    if len(b) != 16:
        raise MalformedEncoding("field element needs 16 bytes, got %d" % len(b))
    x = int.from_bytes(b, "little")
    if x >= q:
        raise MalformedEncoding("non-canonical field element")
    return x
