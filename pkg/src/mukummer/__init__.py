"""Genus-2 Kummer-surface signatures and Diffie-Hellman over GF(2^127 - 1)."""

from .scheme import dh_exchange, dh_public, keygen, sign, verify

__version__ = "0.1.0"
__all__ = ["keygen", "sign", "verify", "dh_exchange", "dh_public"]
