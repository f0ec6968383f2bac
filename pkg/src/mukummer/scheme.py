"""Signatures and Diffie-Hellman key exchange.

Signatures are Schnorr-style with a deterministic nonce and a challenge
truncated to 128 bits, giving 48-byte signatures (h128 || s).  Key exchange
works entirely on the Kummer surface and exchanges 48-byte wrapped points.
"""

import hashlib

from .constants import CONSTANTS as K
from .field import MalformedEncoding
from .jacobian import (InvalidEncoding, JacobianPoint, NonGenericAddition,
                       add_points, compress, decompress)
from .kummer import (ZeroCoordinate, decode_wrapped, encode_wrapped,
                     generator_wrapped, xwrap)
from .recovery import RecoveryDegenerate
from .scalarmult import crypto_scalarmult, jacobian_scalarmult, jacobian_scalarmult_pure

N = K.N
SECRET_KEY_BYTES = 32
PUBLIC_KEY_BYTES = 32
SIGNATURE_BYTES = 48
DH_BYTES = 48


def hash512(msg):
    """SHAKE128 squeezed to 64 bytes."""
    return hashlib.shake_128(bytes(msg)).digest(64)


def reduce_mod_N(wide):
    """Little-endian byte string (up to 64 bytes) reduced modulo N."""
    if len(wide) > 64:
        raise ValueError("at most 64 bytes can be reduced")
    return int.from_bytes(wide, "little") % N


def _generator():
    return JacobianPoint(*K.generator)


def _check_secret(d):
    if len(d) != SECRET_KEY_BYTES:
        raise ValueError("secret key must be %d bytes" % SECRET_KEY_BYTES)


def _expand(d):
    """(d' mod N, d'') from the hash of the secret key."""
    h = hash512(d)
    return reduce_mod_N(h[:32]), h[32:]


def _mul_base(m):
    return jacobian_scalarmult(m, _generator(), generator_wrapped())


def keygen(d):
    """Public key: the compressed form of [16 d']P."""
    _check_secret(d)
    d1, _ = _expand(d)
    return compress(_mul_base(16 * d1 % N))


def sign(msg, d, pk):
    """48-byte signature h128 || s with s = r - 16 h128 d' (mod N)."""
    _check_secret(d)
    d1, d2 = _expand(d)
    r = reduce_mod_N(hash512(d2 + bytes(msg)))
    R = compress(_mul_base(r))
    h128 = hash512(R + bytes(pk) + bytes(msg))[:16]
    s = (r - 16 * int.from_bytes(h128, "little") * d1) % N
    return h128 + s.to_bytes(32, "little")


def verify(msg, sig, pk):
    """True iff sig is a valid signature on msg under pk.  Never raises."""
    if len(sig) != SIGNATURE_BYTES or len(pk) != PUBLIC_KEY_BYTES:
        return False
    h128 = bytes(sig[:16])
    s = int.from_bytes(sig[16:], "little")
    if s >= N:
        return False
    try:
        Q = decompress(bytes(pk))
        T = add_points(_mul_base(s),
                       jacobian_scalarmult_pure(int.from_bytes(h128, "little"), Q))
        g = hash512(compress(T) + bytes(pk) + bytes(msg))
    except (InvalidEncoding, NonGenericAddition, RecoveryDegenerate, ZeroCoordinate):
        return False
    return g[:16] == h128


def dh_scalar(d):
    """Ladder scalar for a DH secret: the key read little-endian, cut to 251 bits, mod N."""
    _check_secret(d)
    return (int.from_bytes(d, "little") % (1 << 251)) % N


def dh_exchange(d, peer):
    """48-byte wrapped form of +-[m]W for the 48-byte wrapped peer value W.

    Raises MalformedEncoding for non-canonical input and ZeroCoordinate when
    the result cannot be wrapped.
    """
    W = decode_wrapped(bytes(peer))
    X0, _ = crypto_scalarmult(dh_scalar(d), W)
    return encode_wrapped(xwrap(X0))


def dh_public(d):
    """DH public value: the exchange against the wrapped generator image."""
    return dh_exchange(d, generator_encoding())


def generator_encoding():
    return encode_wrapped(generator_wrapped())


__all__ = [
    "hash512", "reduce_mod_N", "keygen", "sign", "verify", "dh_exchange",
    "dh_public", "dh_scalar", "generator_encoding", "MalformedEncoding",
]
