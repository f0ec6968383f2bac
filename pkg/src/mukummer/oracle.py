"""Slow reference arithmetic for tests and test-vector generation.

Nothing here imports the rest of the package: the field is plain modular
arithmetic on Python ints, the curve polynomial is rebuilt from the Rosenhain
values, and the group law is textbook Cantor composition and reduction on
polynomials.  It handles every divisor class, including the identity and
classes with deg u < 2.

Polynomials are lists of coefficients, lowest degree first, with no
trailing zeros.  A divisor class is a pair (u, v) with u monic.
"""

import hashlib
import json
import sys

P = (1 << 127) - 1
LAM = 0x15555555555555555555555555555552
MU = 0x73E334FBB315130E05A505C31919A746
NU = 0x552AB1B63BF799716B5806482D2D21F3
ORDER = (1 << 250) - 0x334D69820C75294D2C27FC9F9A154FF47730B4B840C05BD
GEN_U1 = 0x7D5D9C3307E959BF27B8C76211D35E8A
GEN_U0 = 0x2703150F9C594E0CA7E8302F93079CE8
GEN_V1 = 0x444569AF177A9C1C721736D8F288C942
GEN_V0 = 0x7F26CFB225F42417316836CFF8AEFB11
THETAS = (-11, 22, 19, 3)


def inv(x):
    x %= P
    if x == 0:
        raise ZeroDivisionError("inverse of zero")
    return pow(x, P - 2, P)


def trim(p):
    p = [x % P for x in p]
    while p and p[-1] == 0:
        p.pop()
    return p


def padd(x, y):
    n = max(len(x), len(y))
    return trim([(x[i] if i < len(x) else 0) + (y[i] if i < len(y) else 0) for i in range(n)])


def pneg(x):
    return trim([-c for c in x])


def psub(x, y):
    return padd(x, pneg(y))


def pmul(x, y):
    if not x or not y:
        return []
    r = [0] * (len(x) + len(y) - 1)
    for i, a in enumerate(x):
        for j, b in enumerate(y):
            r[i + j] += a * b
    return trim(r)


def pdivmod(n, d):
    n, d = trim(n), trim(d)
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    quo = [0] * max(len(n) - len(d) + 1, 1)
    lead = inv(d[-1])
    while n and len(n) >= len(d):
        k = len(n) - len(d)
        c = n[-1] * lead % P
        quo[k] = c
        n = psub(n, [0] * k + [c * t for t in d])
    return trim(quo), n


def pmod(x, m):
    return pdivmod(x, m)[1]


def monic(p):
    p = trim(p)
    lead = inv(p[-1])
    return trim([c * lead for c in p])


def xgcd(x, y):
    """(g, s, t) with s x + t y = g and g monic."""
    r0, r1 = trim(x), trim(y)
    s0, s1, t0, t1 = [1], [], [], [1]
    while r1:
        qt, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(qt, s1))
        t0, t1 = t1, psub(t0, pmul(qt, t1))
    lead = inv(r0[-1])
    return trim([c * lead for c in r0]), trim([c * lead for c in s0]), trim([c * lead for c in t0])


def curve_poly():
    """f(X) = X (X - 1)(X - lam)(X - mu)(X - nu)."""
    f = [0, 1]
    for root in (1, LAM, MU, NU):
        f = pmul(f, [-root, 1])
    return f


F = curve_poly()
IDENTITY = ([1], [])
GENERATOR = ([GEN_U0, GEN_U1, 1], [GEN_V0, GEN_V1])


def on_curve_class(D):
    u, v = D
    return pmod(psub(pmul(v, v), F), u) == [] and len(u) <= 3 and len(v) < max(len(u), 1)


def oracle_add(D1, D2):
    """Cantor's algorithm: composition followed by reduction."""
    (u1, v1), (u2, v2) = D1, D2
    d0, e1, e2 = xgcd(u1, u2)
    d, c1, c2 = xgcd(d0, padd(v1, v2))
    s1, s2, s3 = pmul(c1, e1), pmul(c1, e2), c2
    u = pdivmod(pmul(u1, u2), pmul(d, d))[0]
    w = padd(padd(pmul(pmul(s1, u1), v2), pmul(pmul(s2, u2), v1)),
             pmul(s3, padd(pmul(v1, v2), F)))
    v = pmod(pdivmod(w, d)[0], u)
    while len(u) > 3:
        u = monic(pdivmod(psub(F, pmul(v, v)), u)[0])
        v = pmod(pneg(v), u)
    return monic(u), v


def oracle_neg(D):
    u, v = D
    return u, pneg(v)


def oracle_scalarmult(m, D):
    """Binary double-and-add, most significant bit first."""
    if m < 0:
        return oracle_scalarmult(-m, oracle_neg(D))
    R = IDENTITY
    for bit in bin(m)[2:]:
        R = oracle_add(R, R)
        if bit == "1":
            R = oracle_add(R, D)
    return R


def to_tuple(D):
    """(u1, u0, v1, v0) for a class with deg u = 2."""
    u, v = D
    if len(u) != 3:
        raise ValueError("class does not have deg u = 2")
    v = v + [0] * (2 - len(v))
    return (u[1], u[0], v[1], v[0])


def from_tuple(t):
    u1, u0, v1, v0 = t
    return trim([u0, u1, 1]), trim([v0, v1])


def compress_tuple(t):
    u1, u0, v1, v0 = t
    w = 4 * ((u1 * v0 - u0 * v1) * v1 - v0 * v0) % P
    lo = (v1 & 1) | (u0 << 1)
    hi = (w & 1) | (u1 << 1)
    return lo.to_bytes(16, "little") + hi.to_bytes(16, "little")


def project_class(D):
    """Fast-Kummer image of a class, written directly from the surface map.

    For <X^2 + u1 X + u0, v1 X + v0> the coordinates are
    a(u0 (mu - u0)(lam + nu + u1) - v0^2),
    b(u0 (lam nu - u0)(1 + mu + u1) - v0^2),
    c(u0 (nu - u0)(lam + mu + u1) - v0^2),
    d(u0 (lam mu - u0)(1 + nu + u1) - v0^2).
    The identity maps to (a : b : c : d).
    """
    a, b, c, d = (x % P for x in THETAS)
    if D == IDENTITY:
        return (a, b, c, d)
    u1, u0, _, v0 = to_tuple(D)
    s = v0 * v0
    return tuple(x % P for x in (
        a * (u0 * (MU - u0) * (LAM + NU + u1) - s),
        b * (u0 * (LAM * NU - u0) * (1 + MU + u1) - s),
        c * (u0 * (NU - u0) * (LAM + MU + u1) - s),
        d * (u0 * (LAM * MU - u0) * (1 + NU + u1) - s),
    ))


def wrap_tuple(X):
    x, y, z, t = X
    return (x * inv(y) % P, x * inv(z) % P, x * inv(t) % P)


def encode_wrapped(W):
    return b"".join(c.to_bytes(16, "little") for c in W)


def shake512(data):
    return hashlib.shake_128(data).digest(64)


def ref_keygen(d):
    d1 = int.from_bytes(shake512(d)[:32], "little") % ORDER
    return compress_tuple(to_tuple(oracle_scalarmult(16 * d1, GENERATOR)))


def ref_sign(msg, d, pk):
    h = shake512(d)
    d1 = int.from_bytes(h[:32], "little") % ORDER
    r = int.from_bytes(shake512(h[32:] + msg), "little") % ORDER
    R = compress_tuple(to_tuple(oracle_scalarmult(r, GENERATOR)))
    h128 = shake512(R + pk + msg)[:16]
    s = (r - 16 * int.from_bytes(h128, "little") * d1) % ORDER
    return h128 + s.to_bytes(32, "little")


def ref_dh(d, m_of_peer=None):
    """Wrapped image of [m]([k]P) where the peer value is +-[k]P for k = m_of_peer."""
    m = int.from_bytes(d, "little") % (1 << 251) % ORDER
    base = GENERATOR if m_of_peer is None else oracle_scalarmult(m_of_peer, GENERATOR)
    return encode_wrapped(wrap_tuple(project_class(oracle_scalarmult(m, base))))


def vectors():
    """Deterministic test vectors computed with this module alone."""
    zero = bytes(32)
    out = []
    pk = ref_keygen(zero)
    out.append({"op": "keygen", "inputs": {"sk": zero.hex()}, "expected": pk.hex()})
    out.append({"op": "sign", "inputs": {"sk": zero.hex(), "pk": pk.hex(), "msg": b"abc".hex()},
                "expected": ref_sign(b"abc", zero, pk).hex()})
    out.append({"op": "dh", "inputs": {"sk": zero.hex(), "peer": "generator"},
                "expected": ref_dh(zero).hex()})
    seed = shake512(b"dh vector")[:32]
    out.append({"op": "dh", "inputs": {"sk": seed.hex(), "peer": "generator"},
                "expected": ref_dh(seed).hex()})
    out.append({"op": "compress", "inputs": {"point": "generator"},
                "expected": compress_tuple(to_tuple(GENERATOR)).hex()})
    for m in (2, 3, 5, 16, 255, ORDER - 2):
        q = to_tuple(oracle_scalarmult(m, GENERATOR))
        out.append({"op": "scalarmult", "inputs": {"m": "%x" % m, "point": "generator"},
                    "expected": "".join("%032x" % c for c in q)})
    return out


def emit(stream=None):
    """Write the vectors as JSON lines."""
    stream = stream or sys.stdout
    for v in vectors():
        stream.write(json.dumps(v, sort_keys=True) + "\n")


if __name__ == "__main__":
    emit()
