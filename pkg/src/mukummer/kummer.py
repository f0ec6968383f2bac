"""Pseudo-arithmetic on the fast Kummer surface K_C.

Points are projective 4-tuples (x:y:z:t).  The surface only knows points up
to sign, so addition needs the difference of its inputs (differential
addition).  A point whose last three coordinates are nonzero can be sent in
"wrapped" form (x/y, x/z, x/t), which also saves multiplications in the
ladder step.
"""

from collections import namedtuple
from functools import lru_cache

from . import field as fq
from .constants import CONSTANTS as K
from .field import add, sub, mul, sqr, mulconst, inverse, q
from .opcount import paused

KummerPoint = namedtuple("KummerPoint", "x y z t")
WrappedPoint = namedtuple("WrappedPoint", "wy wz wt")


class ZeroCoordinate(ValueError):
    """A point with a zero y, z or t coordinate cannot be wrapped."""


# Callables invoked with every point returned by project, xadd and xdbladd;
# the test suite uses this to check surface membership of all outputs.
_output_hooks = []


def add_output_hook(fn):
    _output_hooks.append(fn)


def remove_output_hook(fn):
    _output_hooks.remove(fn)


def _emit(*points):
    for fn in _output_hooks:
        for P in points:
            fn(P)


# The image of the group identity <1, 0>.
IDENTITY = KummerPoint(*(fq.small_value(c) for c in K.thetas))


def hadamard(P):
    """(x+y+z+t : x+y-z-t : x-y+z-t : x-y-z+t).  Costs 4a + 4s."""
    x, y, z, t = P
    t1 = add(x, y)
    t2 = add(z, t)
    t3 = sub(x, y)
    t4 = sub(z, t)
    return KummerPoint(add(t1, t2), sub(t1, t2), add(t3, t4), sub(t3, t4))


def mul4(P, Q):
    """Coordinatewise product.  Costs 4M."""
    return KummerPoint(*(mul(x, y) for x, y in zip(P, Q)))


def sqr4(P):
    """Coordinatewise square.  Costs 4S."""
    return KummerPoint(*(sqr(x) for x in P))


def mulconst4(P, consts):
    """Coordinatewise product with four SmallConstants.  Costs 4m_c."""
    return KummerPoint(*(mulconst(x, c) for x, c in zip(P, consts)))


def project(P):
    """Map a Jacobian point <X^2 + u1 X + u0, v1 X + v0> to +-P on K_C.

    Costs 8M + 1S + 4m_c + 7a + 8s.  Only points with deg u = 2 are handled.
    """
    u1, u0, v1, v0 = P
    T1 = sub(K.mu, u0)
    T2 = sub(K.lam_nu, u0)
    T3 = sub(K.nu, u0)
    T4 = sub(K.lam_mu, u0)
    T5 = add(K.lam, u1)
    T7 = mul(u0, mul(add(T5, K.mu), T3))
    T5 = mul(u0, mul(add(T5, K.nu), T1))
    T6 = mul(u0, add(mul(add(K.mu, u1), T2), T2))
    T8 = mul(u0, add(mul(add(K.nu, u1), T4), T4))
    T1 = sqr(v0)
    T5 = sub(T5, T1)
    T6 = sub(T6, T1)
    T7 = sub(T7, T1)
    T8 = sub(T8, T1)
    R = mulconst4((T5, T6, T7, T8), K.thetas)
    _emit(R)
    return R


def xadd(P, Q, D):
    """+-(P+Q) from +-P, +-Q and the difference D = +-(P-Q).

    D must have nonzero coordinates.  Costs 14M + 4S + 4m_c + 12a + 12s.
    """
    V1 = mul4(hadamard(P), hadamard(Q))
    V1 = mulconst4(V1, K.inv_dual_thetas)
    V1 = sqr4(hadamard(V1))
    x, y, z, t = D
    C1 = mul(z, t)
    C2 = mul(x, y)
    V2 = mul4((C1, C1, C2, C2), (y, x, t, z))
    R = mul4(V1, V2)
    _emit(R)
    return R


def xwrap(P):
    """(x:y:z:t) -> (x/y, x/z, x/t) with a single inversion.  Costs 7M + 1I."""
    x, y, z, t = P
    V1 = mul(y, z)
    d = mul(V1, t)
    if d == 0:
        raise ZeroCoordinate("cannot wrap a point with a zero coordinate")
    V2 = mul(x, inverse(d))
    V3 = mul(V2, t)
    return WrappedPoint(mul(V3, z), mul(V3, y), mul(V1, V2))


def xunwrap(W):
    """(x/y, x/z, x/t) -> (x:y:z:t), up to a common factor.  Costs 4M."""
    u, v, w = W
    T1 = mul(v, w)
    T2 = mul(u, w)
    T3 = mul(u, v)
    return KummerPoint(mul(T3, w), T1, T2, T3)


def xdbladd(P, Q, W):
    """Return (+-[2]P, +-(P+Q)) given W = xwrap(+-(P-Q)).

    Costs 7M + 12S + 12m_c + 16a + 16s.
    """
    V1 = hadamard(P)
    V2 = hadamard(Q)
    V1, V2 = sqr4(V1), mul4(V1, V2)
    V1 = mulconst4(V1, K.inv_dual_thetas)
    V2 = mulconst4(V2, K.inv_dual_thetas)
    V1 = sqr4(hadamard(V1))
    V2 = sqr4(hadamard(V2))
    V1 = mulconst4(V1, K.inv_thetas)
    # The first coordinate of the wrapped difference is 1, so it needs no product.
    V2 = KummerPoint(V2.x, mul(V2.y, W.wy), mul(V2.z, W.wz), mul(V2.t, W.wt))
    _emit(V1, V2)
    return V1, V2


def on_kummer(P):
    """Check E*xyzt = ((x^2+y^2+z^2+t^2) - F(xt+yz) - G(xz+yt) - H(xy+zt))^2."""
    x, y, z, t = P
    k = (x * x + y * y + z * z + t * t
         - K.F * (x * t + y * z) - K.G * (x * z + y * t) - K.H * (x * y + z * t)) % q
    return (K.E * x * y * z * t - k * k) % q == 0


def is_zero(P):
    return all(c % q == 0 for c in P)


def projective_equal(P, Q):
    """Equality in projective space by cross-multiplication."""
    if is_zero(P) or is_zero(Q):
        return False
    n = len(P)
    return all((P[i] * Q[j] - P[j] * Q[i]) % q == 0
               for i in range(n) for j in range(i + 1, n))


def encode_wrapped(W):
    """48 bytes: the three field elements of the wrapped form, in order."""
    return b"".join(fq.encode(c) for c in W)


def decode_wrapped(b):
    if len(b) != 48:
        raise fq.MalformedEncoding("wrapped point needs 48 bytes, got %d" % len(b))
    return WrappedPoint(*(fq.decode(b[i:i + 16]) for i in (0, 16, 32)))


@lru_cache(maxsize=None)
def generator_point():
    """project(generator), computed once and never counted."""
    from .jacobian import JacobianPoint
    with paused():
        return project(JacobianPoint(*K.generator))


@lru_cache(maxsize=None)
def generator_wrapped():
    """xwrap(project(generator)), computed once and never counted."""
    P = generator_point()
    with paused():
        return xwrap(P)
