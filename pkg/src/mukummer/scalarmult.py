"""Montgomery ladder on the Kummer surface and full scalar multiplication."""

from .field import MASK128
from .kummer import IDENTITY, KummerPoint, project, xdbladd, xunwrap, xwrap
from .opcount import event
from .recovery import recover

BITS = 251


def cswap(bit, U, V):
    """(U, V) if bit is 0, (V, U) if bit is 1, by masking rather than branching."""
    event("cswap")
    mask = -bit & MASK128
    xs, ys = [], []
    for u, v in zip(U, V):
        d = (u ^ v) & mask
        xs.append(u ^ d)
        ys.append(v ^ d)
    return KummerPoint(*xs), KummerPoint(*ys)


def crypto_scalarmult(m, W):
    """Return (+-[m]P, +-[m+1]P) for W the wrapped form of +-P.

    Always runs 251 iterations regardless of m (which must be below 2^251).
    Costs (4 + 7*251)M + 12*251 S + 12*251 m_c + 16*251 a + 16*251 s.
    """
    if not 0 <= m < 1 << BITS:
        raise ValueError("scalar must lie in [0, 2^251)")
    V1 = IDENTITY
    V2 = xunwrap(W)
    for i in range(BITS - 1, -1, -1):
        bit = (m >> i) & 1
        V1, V2 = cswap(bit, V1, V2)
        V1, V2 = xdbladd(V1, V2, W)
        V1, V2 = cswap(bit, V1, V2)
    return V1, V2


def jacobian_scalarmult(m, P, W):
    """[m]P on the Jacobian, for W = xwrap(project(P)).

    Raises RecoveryDegenerate when m is 0 modulo the group order.
    Costs (7*251 + 146)M + (12*251 + 12)S + (12*251 + 4)m_c
    + (16*251 + 70)a + (16*251 + 22)s + 3neg + 1I.
    """
    V1, V2 = crypto_scalarmult(m, W)
    xP = xunwrap(W)
    return recover(P, xP, V1, V2)


def jacobian_scalarmult_pure(m, P):
    """[m]P for an arbitrary P, projecting and wrapping it first.

    Raises ZeroCoordinate if the image of P cannot be wrapped.
    """
    return jacobian_scalarmult(m, P, xwrap(project(P)))
