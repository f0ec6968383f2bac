"""Group arithmetic on the Jacobian J_C in Mumford coordinates.

A point is <X^2 + u1 X + u0, v1 X + v0>.  Only points with deg u = 2 are
representable; the identity and degree-one classes never occur on the
happy path of the schemes, and any operation that would produce one raises.
"""

from collections import namedtuple

from . import field as fq
from .constants import CONSTANTS as K
from .field import add, sub, neg as fneg, mul, sqr, inverse, powminhalf, sqrtinv, select, q
from .opcount import validation

JacobianPoint = namedtuple("JacobianPoint", "u1 u0 v1 v0")


class NonGenericAddition(ArithmeticError):
    """The inputs of ADD share a root of u, or the sum has deg u < 2."""


class InvalidEncoding(ValueError):
    """A 32-byte string is not the compressed form of any point."""


_SHIFT = K.add_shift
_SHIFT2 = 2 * _SHIFT % q
_TWO_F2 = 2 * K.f2 % q


def add_points(P, Q):
    """P + Q for points in general, mutually generic position.

    The inputs are first moved by X -> X + f4/5 to a model of the curve with
    no X^4 term, added there with a single inversion, and moved back.
    Costs 28M + 2S + 11a + 24s + 1I.
    """
    c, c2 = _SHIFT, _SHIFT2
    u11, u10, v11, v10 = P
    u21, u20, v21, v20 = Q

    u10 = sub(u10, mul(c, sub(u11, c)))
    u11 = sub(u11, c2)
    u20 = sub(u20, mul(c, sub(u21, c)))
    u21 = sub(u21, c2)
    v10 = sub(v10, mul(c, v11))
    v20 = sub(v20, mul(c, v21))

    z1 = sub(u11, u21)
    z2 = sub(u20, u10)
    z3 = add(mul(u11, z1), z2)
    w1 = sub(v11, v21)
    w0 = sub(v10, v20)
    r = add(mul(z2, z3), mul(sqr(z1), u10))    # resultant of the two u
    s1 = add(mul(z1, w0), mul(z2, w1))
    s0 = sub(mul(z3, w0), mul(u10, mul(z1, w1)))

    t = mul(r, s1)
    if t == 0:
        raise NonGenericAddition("inputs are not in generic position")
    i = inverse(t)
    i1 = mul(r, i)                  # 1/s1
    sl = mul(s1, mul(s1, i))        # s1/r
    w4 = mul(r, i1)                 # r/s1
    w5 = sqr(w4)
    s0 = mul(s0, i1)

    e = sub(s0, z1)
    g = sub(e, w5)
    U1 = add(s0, g)
    U0 = sub(mul(w4, add(add(v21, v21), mul(add(u11, u21), w4))),
             sub(mul(s0, sub(z1, e)), z3))

    d1 = sub(u21, U1)
    d0 = sub(u20, U0)
    k1 = sub(mul(d1, g), d0)
    k0 = sub(mul(d1, U0), mul(s0, d0))
    V1 = sub(mul(k1, sl), v21)
    V0 = sub(mul(k0, sl), v20)

    V0 = add(V0, mul(c, V1))
    U0 = add(U0, mul(c, add(U1, c)))
    U1 = add(U1, c2)
    return JacobianPoint(U1, U0, V1, V0)


def neg(P):
    """-P = <u, -v>."""
    return JacobianPoint(P.u1, P.u0, (-P.v1) % q, (-P.v0) % q)


def _f_mod_u(P):
    """Coefficients (r1, r0) of v^2 - f_C reduced modulo u."""
    u1, u0, v1, v0 = P
    # Reduce X^k modulo X^2 + u1 X + u0 iteratively: X^k = a_k X + b_k.
    r1 = r0 = 0
    ak, bk = 0, 1                   # X^0
    for fk in K.f:
        r1 += fk * ak
        r0 += fk * bk
        ak, bk = (bk - u1 * ak) % q, (-u0 * ak) % q
    w1 = 2 * v1 * v0 - v1 * v1 * u1
    w0 = v0 * v0 - v1 * v1 * u0
    return (w1 - r1) % q, (w0 - r0) % q


def is_on_jacobian(P):
    """True iff v^2 = f_C (mod u) and all coordinates are canonical."""
    if len(P) != 4 or any(not 0 <= x < q for x in P):
        return False
    return _f_mod_u(P) == (0, 0)


def compress(P):
    """32-byte encoding b0 || u0 || b128 || u1.  Costs 3M + 1S + 2a + 2s.

    Bit k of the string is bit (k mod 8) of byte k // 8.  b0 is the low bit
    of v1 and b128 the low bit of w = 4((u1 v0 - u0 v1) v1 - v0^2).
    """
    u1, u0, v1, v0 = P
    w = sub(mul(sub(mul(u1, v0), mul(u0, v1)), v1), sqr(v0))
    w = add(w, w)
    w = add(w, w)
    lo = (v1 & 1) | (u0 << 1)
    hi = (w & 1) | (u1 << 1)
    return lo.to_bytes(16, "little") + hi.to_bytes(16, "little")


def decompress(data):
    """Inverse of compress.

    Raises InvalidEncoding when the string is not the encoding of a point.
    The square-root check, the membership check and the re-encoding check
    are tallied as validation work, separate from the main cost.
    """
    if len(data) != 32:
        raise InvalidEncoding("compressed point needs 32 bytes, got %d" % len(data))
    lo = int.from_bytes(data[:16], "little")
    hi = int.from_bytes(data[16:], "little")
    b0, U0 = lo & 1, lo >> 1
    b128, U1 = hi & 1, hi >> 1
    if U0 >= q or U1 >= q:
        raise InvalidEncoding("non-canonical coordinate")
    f1, f2, f3, f4 = K.f1, K.f2, K.f3, K.f4

    T1 = sqr(U1)
    T2 = sub(U0, T1)
    T3 = add(U0, T2)
    T4 = mul(U0, add(mul(T3, f4), sub(sub(mul(U1, f3), f2), f2)))
    T3 = fneg(T3)
    T1 = sub(T3, U0)
    T4 = add(T4, mul(add(mul(T1, U0), f1), U1))
    T4 = add(T4, T4)
    T1 = sub(T1, U0)
    T1 = add(T1, T1)
    T5 = add(mul(sub(U0, add(f3, mul(U1, sub(U1, f4)))), U0), f1)
    T5 = sqr(T5)
    T5 = mul(add(T5, T5), T1)
    T5 = sub(sqr(T4), T5)
    root, T6 = sqrtinv(T5, T1, b128)
    with validation():
        if sqr(root) != T5:
            raise InvalidEncoding("no square root: not a point encoding")
    T4 = mul(sub(root, T4), T6)
    T5 = add(sub(fneg(mul(f4, T2)), sub(mul(add(T3, f3), U1), f2)), T4)
    T6 = add(T5, T5)
    T6 = powminhalf(add(T6, T6))
    V1 = mul(add(T5, T5), T6)
    flip = (V1 & 1) ^ b0
    V1 = select(flip, V1, fneg(V1))
    T6 = select(flip, T6, fneg(T6))
    T5 = mul(add(mul(U1, f4), sub(T2, f3)), U0)
    V0 = mul(add(add(mul(U1, T4), T5), f1), T6)

    P = JacobianPoint(U1, U0, V1, V0)
    with validation():
        if not is_on_jacobian(P) or compress(P) != bytes(data):
            raise InvalidEncoding("decoded values do not form the encoded point")
    return P
