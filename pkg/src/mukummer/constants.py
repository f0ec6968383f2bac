"""Curve, surface and group constants.

Everything is derived from the four squared theta constants
(a, b, c, d) = (-11, 22, 19, 3) and checked against the published hex
values, so a transcription error in either place is caught at import time.
"""

from dataclasses import dataclass

from .field import q, small, small_value


class DerivationError(RuntimeError):
    """A derived constant disagrees with its published value."""


def _inv(x):
    return pow(x, q - 2, q)


def _sqrt(x):
    r = pow(x, (q + 1) // 4, q)
    if r * r % q != x % q:
        raise DerivationError("expected a square while deriving constants")
    return r


# Published values the derivation must reproduce.
EXPECTED = {
    "lam": 0x15555555555555555555555555555552,
    "mu": 0x73E334FBB315130E05A505C31919A746,
    "nu": 0x552AB1B63BF799716B5806482D2D21F3,
    "f1": 0x1EDD6EE48E0C2F16F537CD791E4A8D6E,
    "f2": 0x73E799E36D9FCC210C9CD1B164C39A35,
    "f3": 0x4B9E333F48B6069CC47DC236188DF6E8,
    "f4": 0x219CC3F8BB9DFE2B39AD9E9F6463E172,
    "dual_thetas": (33, -11, -17, -49),
    "inv_thetas_proj": (114, -57, -66, -418),
    "inv_dual_thetas_proj": (-833, 2499, 1617, 561),
}

THETAS = (-11, 22, 19, 3)

# Group order and the base point of the signature scheme.
N = (1 << 250) - 0x334D69820C75294D2C27FC9F9A154FF47730B4B840C05BD
GENERATOR = (
    0x7D5D9C3307E959BF27B8C76211D35E8A,  # u1
    0x2703150F9C594E0CA7E8302F93079CE8,  # u0
    0x444569AF177A9C1C721736D8F288C942,  # v1
    0x7F26CFB225F42417316836CFF8AEFB11,  # v0
)


@dataclass(frozen=True)
class CurveConstants:
    thetas: tuple            # SmallConstants (a, b, c, d)
    dual_thetas: tuple       # SmallConstants (A, B, C, D)
    inv_thetas: tuple        # SmallConstants proportional to (1/a : 1/b : 1/c : 1/d)
    inv_dual_thetas: tuple   # SmallConstants proportional to (1/A : 1/B : 1/C : 1/D)
    lam: int
    mu: int
    nu: int
    lam_mu: int
    lam_nu: int
    f: tuple                 # (f0, f1, f2, f3, f4, f5) with f0 = 0, f5 = 1
    E: int
    F: int
    G: int
    H: int
    L: tuple                 # the 4x4 Kummer-to-Flynn matrix, rows as displayed
    L_norm: tuple            # L_norm[j][i] = L[i][j] / L[0][0]: output j, input i
    add_shift: int           # f4 / 5, moves the curve to a model with no X^4 term
    N: int
    generator: tuple         # (u1, u0, v1, v0)

    @property
    def f1(self):
        return self.f[1]

    @property
    def f2(self):
        return self.f[2]

    @property
    def f3(self):
        return self.f[3]

    @property
    def f4(self):
        return self.f[4]


def _polymul(p1, p2):
    r = [0] * (len(p1) + len(p2) - 1)
    for i, x in enumerate(p1):
        for j, y in enumerate(p2):
            r[i + j] = (r[i + j] + x * y) % q
    return r


def _proportional(xs, ys):
    """True if the integer tuples xs and ys agree up to a common field scalar."""
    xs = [x % q for x in xs]
    ys = [y % q for y in ys]
    return all((xs[i] * ys[j] - xs[j] * ys[i]) % q == 0
               for i in range(4) for j in range(4))


def _check(name, got, want):
    if got != want:
        raise DerivationError("derived %s = %r does not match expected %r"
                              % (name, got, want))


def derive_constants():
    """Derive all constants from (a, b, c, d) and check them."""
    ta, tb, tc, td = THETAS
    A, B, C, D = ta + tb + tc + td, ta + tb - tc - td, ta - tb + tc - td, ta - tb - tc + td
    _check("dual_thetas", (A, B, C, D), EXPECTED["dual_thetas"])

    # Projective inverses must be small: check proportionality and that each
    # product with its theta constant is the same integer.
    it = EXPECTED["inv_thetas_proj"]
    if len({x * y for x, y in zip(THETAS, it)}) != 1:
        raise DerivationError("inv_thetas_proj is not proportional to 1/(a,b,c,d)")
    idt = EXPECTED["inv_dual_thetas_proj"]
    if len({x * y for x, y in zip((A, B, C, D), idt)}) != 1:
        raise DerivationError("inv_dual_thetas_proj is not proportional to 1/(A,B,C,D)")

    a, b, c, d = (x % q for x in THETAS)
    Aq, Bq, Cq, Dq = (x % q for x in (A, B, C, D))

    alpha = _sqrt(Cq * Dq * _inv(Aq * Bq) % q)
    if alpha & 1:
        alpha = q - alpha
    ef = (1 + alpha) * _inv(1 - alpha) % q
    lam = a * c * _inv(b * d) % q
    mu = c * ef * _inv(d) % q
    nu = a * ef * _inv(b) % q
    _check("lam", lam, EXPECTED["lam"])
    _check("mu", mu, EXPECTED["mu"])
    _check("nu", nu, EXPECTED["nu"])

    f = [0, 1]
    for root in (1, lam, mu, nu):
        f = _polymul(f, [(-root) % q, 1])
    for i in range(1, 5):
        _check("f%d" % i, f[i], EXPECTED["f%d" % i])
    if f[0] != 0 or f[5] != 1:
        raise DerivationError("f_C must have f0 = 0 and f5 = 1")

    F = (a * a - b * b - c * c + d * d) * _inv(a * d - b * c) % q
    G = (a * a - b * b + c * c - d * d) * _inv(a * c - b * d) % q
    H = (a * a + b * b - c * c - d * d) * _inv(a * b - c * d) % q
    E = 4 * a * b * c * d * pow(Aq * Bq * Cq * Dq
                                * _inv((a * d - b * c) * (a * c - b * d) * (a * b - c * d)),
                                2, q) % q

    ai, bi, ci, di = _inv(a), _inv(b), _inv(c), _inv(d)
    mn = mu * nu % q
    L = (
        (ai * (nu - lam), ai * (mn - lam), ai * lam * nu * (mu - 1), ai * lam * nu * (mn - lam)),
        (bi * (mu - 1), bi * (mn - lam), bi * mu * (nu - lam), bi * mu * (mn - lam)),
        (ci * (lam - mu), ci * (lam - mn), ci * lam * mu * (1 - nu), ci * lam * mu * (lam - mn)),
        (di * (1 - nu), di * (lam - mn), di * nu * (lam - mu), di * nu * (lam - mn)),
    )
    L = tuple(tuple(x % q for x in row) for row in L)
    l11 = _inv(L[0][0])
    # A Kummer point is a row vector multiplied on the right by L, so output
    # coordinate j takes input i with coefficient L[i][j].
    L_norm = tuple(tuple(L[i][j] * l11 % q for i in range(4)) for j in range(4))

    consts = CurveConstants(
        thetas=tuple(small(x) for x in THETAS),
        dual_thetas=tuple(small(x) for x in (A, B, C, D)),
        inv_thetas=tuple(small(x) for x in it),
        inv_dual_thetas=tuple(small(x) for x in idt),
        lam=lam, mu=mu, nu=nu,
        lam_mu=lam * mu % q, lam_nu=lam * nu % q,
        f=tuple(f),
        E=E, F=F, G=G, H=H,
        L=L, L_norm=L_norm,
        add_shift=f[4] * _inv(5) % q,
        N=N,
        generator=GENERATOR,
    )
    _check_consistency(consts)
    return consts


def _check_consistency(k):
    # Hadamard duality: H(a,b,c,d) = (A,B,C,D) and H(A,B,C,D) = 4(a,b,c,d).
    def had(x, y, z, t):
        return (x + y + z + t, x + y - z - t, x - y + z - t, x - y - z + t)
    th = tuple(small_value(c) for c in k.thetas)
    du = tuple(small_value(c) for c in k.dual_thetas)
    if not _proportional(had(*th), du) or not _proportional(had(*du), th):
        raise DerivationError("Hadamard duality of theta constants fails")
    if not _proportional([small_value(c) for c in k.inv_thetas],
                         [_inv(x) for x in th]):
        raise DerivationError("inv_thetas is not projectively 1/(a:b:c:d)")
    if not _proportional([small_value(c) for c in k.inv_dual_thetas],
                         [_inv(x) for x in du]):
        raise DerivationError("inv_dual_thetas is not projectively 1/(A:B:C:D)")


def validate_generator(k=None, point=None):
    """True iff the base point is on the Jacobian and [N] kills its image.

    The second check runs the Kummer ladder on the wrapped image of the
    point and compares the first output with the identity (a:b:c:d).
    """
    from . import jacobian, kummer, scalarmult
    k = k or CONSTANTS
    P = jacobian.JacobianPoint(*(point or k.generator))
    if not jacobian.is_on_jacobian(P):
        return False
    try:
        W = kummer.xwrap(kummer.project(P))
    except kummer.ZeroCoordinate:
        return False
    X0, _ = scalarmult.crypto_scalarmult(k.N, W)
    return kummer.projective_equal(X0, kummer.IDENTITY)


def dump(k=None):
    """Lines of 'name = hex' for every constant, for auditing."""
    k = k or CONSTANTS
    out = []
    names = ("a", "b", "c", "d")
    for n, c in zip(names, k.thetas):
        out.append("%s = %d" % (n, c.sign * c.magnitude))
    for n, c in zip(("A", "B", "C", "D"), k.dual_thetas):
        out.append("%s = %d" % (n, c.sign * c.magnitude))
    out.append("inv_thetas_proj = (%s)" % ", ".join(str(c.sign * c.magnitude) for c in k.inv_thetas))
    out.append("inv_dual_thetas_proj = (%s)"
               % ", ".join(str(c.sign * c.magnitude) for c in k.inv_dual_thetas))
    for n in ("lam", "mu", "nu", "lam_mu", "lam_nu"):
        out.append("%s = 0x%032X" % (n, getattr(k, n)))
    for i in range(1, 5):
        out.append("f%d = 0x%032X" % (i, k.f[i]))
    for n in ("E", "F", "G", "H"):
        out.append("%s = 0x%032X" % (n, getattr(k, n)))
    for i, row in enumerate(k.L_norm):
        for j, x in enumerate(row):
            out.append("L_norm[%d][%d] = 0x%032X" % (i, j, x))
    out.append("add_shift = 0x%032X" % k.add_shift)
    out.append("N = 0x%X" % k.N)
    for n, x in zip(("u1", "u0", "v1", "v0"), k.generator):
        out.append("generator.%s = 0x%032X" % (n, x))
    return out


CONSTANTS = derive_constants()
