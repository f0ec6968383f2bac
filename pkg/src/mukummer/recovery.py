"""Recovery of a full Jacobian point from Kummer ladder output.

The ladder only yields +-[m]P and +-[m+1]P on the Kummer surface.  Knowing
P itself pins down the sign.  The computation is easiest on the classical
(Flynn) model of the Kummer surface, which is a linear image of the fast
model, so the inputs are first mapped there.
"""

from collections import namedtuple

from .constants import CONSTANTS as K
from .field import add, sub, neg, mul, sqr, inverse
from .jacobian import JacobianPoint, neg as jneg
from .kummer import IDENTITY, projective_equal, xadd

FlynnPoint = namedtuple("FlynnPoint", "x y z t")


class RecoveryDegenerate(ArithmeticError):
    """The inputs are in special position and recovery cannot proceed."""


def _row(P, coeffs, first_is_one):
    x, y, z, t = P
    _, cy, cz, ct = coeffs
    acc = x if first_is_one else mul(coeffs[0], x)
    acc = add(acc, mul(cy, y))
    acc = add(acc, mul(cz, z))
    return add(acc, mul(ct, t))


def fast2gen_partial(P):
    """First three coordinates of the Flynn image of P.  Costs 11M + 9a."""
    C = K.L_norm
    return FlynnPoint(_row(P, C[0], True), _row(P, C[1], False), _row(P, C[2], False), None)


def fast2gen_full(P):
    """Flynn image of P, scaled so the x-coefficient of x~ is 1.  Costs 15M + 12a."""
    C = K.L_norm
    return FlynnPoint(_row(P, C[0], True), _row(P, C[1], False),
                      _row(P, C[2], False), _row(P, C[3], False))


def recover_general(P, gP, gQ, gS, gD):
    """Q from P and the Flynn images of +-P, +-Q, +-(P+Q), +-(P-Q).

    gQ must be full; the t-coordinate of the others is not used.
    Costs 76M + 8S + 19a + 10s + 3neg + 1I.
    """
    v1, v0 = P.v1, P.v0
    xP, yP, zP = gP.x, gP.y, gP.z
    xQ, yQ, zQ, tQ = gQ
    # In the formulas below the sum and difference enter in these roles.
    xo, yo, zo = gD.x, gD.y, gD.z
    xm, ym, zm = gS.x, gS.y, gS.z
    f1, f2, f3, f4 = K.f1, K.f2, K.f3, K.f4

    Z1 = sub(mul(yP, xQ), mul(xP, yQ))
    Z2 = sub(mul(xP, zQ), mul(zP, xQ))
    T1 = mul(Z1, zP)
    mZ3 = add(mul(Z2, yP), T1)
    D = add(mul(sqr(Z2), xP), mul(mZ3, Z1))
    T2 = mul(Z1, Z2)
    T3 = mul(xP, xQ)

    E = mul(T3, add(mul(T3, sub(mul(f2, sqr(Z2)), mul(f1, T2))), mul(tQ, D)))
    E = add(E, mul(mul(mZ3, sqr(xQ)), add(mul(f3, mul(Z2, xP)), mul(f4, mZ3))))
    E = add(E, mul(mul(mZ3, xQ), sub(mul(mZ3, yQ), mul(mul(Z2, xP), zQ))))

    X1 = mul(xP, sub(mul(Z2, v1), mul(Z1, v0)))
    T4 = add(mul(Z1, yP), mul(Z2, xP))
    X2 = add(mul(T1, v1), mul(T4, v0))
    C5 = sub(sqr(Z1), mul(T4, xQ))
    C6 = add(mul(T1, xQ), T2)

    T5 = sub(mul(zo, xm), mul(xo, zm))
    X3 = sub(mul(X1, T5), mul(X2, sub(mul(xo, ym), mul(yo, xm))))
    X5 = mul(X3, C5)
    X6 = mul(X3, C6)
    X4 = mul(T3, add(mul(X1, sub(mul(zo, ym), mul(yo, zm))), mul(T5, X2)))
    X7 = add(X5, mul(Z1, X4))
    X8 = add(X6, mul(Z2, X4))
    T6 = mul(xo, xm)

    E = neg(mul(mul(T6, T3), add(mul(E, sqr(xP)), sqr(mul(X1, T3)))))
    X9 = mul(E, X7)
    X10 = mul(E, X8)

    F = add(mul(X2, add(mul(xo, ym), mul(yo, xm))),
            mul(X1, add(mul(zo, xm), mul(xo, zm))))
    F = add(mul(X1, F), _double(mul(sqr(X2), T6)))
    F = mul(mul(mul(mul(mul(F, D), T6), T3), sqr(T3)), xP)
    F = neg(_double(F))

    U1 = neg(mul(F, yQ))
    U0 = mul(F, zQ)
    d = mul(F, xQ)
    if d == 0:
        raise RecoveryDegenerate("inputs are in special position")
    Fi = inverse(d)
    return JacobianPoint(mul(Fi, U1), mul(Fi, U0), mul(Fi, X9), mul(Fi, X10))


def _double(x):
    return add(x, x)


def recover(P, xP, xQ, xS):
    """Q from P, xP = +-P, xQ = +-Q and xS = +-(P+Q) on the fast Kummer.

    Costs 138M + 12S + 4m_c + 70a + 22s + 3neg + 1I.

    When Q = +-P the general formulas degenerate; the sign is then read off
    xS, which is the identity exactly when Q = -P.  Q = 0 raises.
    """
    gP = fast2gen_partial(xP)
    gQ = fast2gen_full(xQ)
    gS = fast2gen_partial(xS)
    xD = xadd(xP, xQ, xS)
    gD = fast2gen_partial(xD)
    try:
        return recover_general(P, gP, gQ, gS, gD)
    except RecoveryDegenerate:
        if not projective_equal(xQ, xP):
            raise
        return jneg(P) if projective_equal(xS, IDENTITY) else P
