"""Command-line front end.

Keys, signatures and DH values are stored as hex text files (whitespace is
ignored).  Messages are read as raw bytes.  Exit codes: 0 success or accept,
1 reject or failure, 2 usage error or malformed input.
"""

import argparse
import os
import sys

from . import bench, constants, scheme
from .field import MalformedEncoding
from .jacobian import InvalidEncoding, decompress
from .kummer import ZeroCoordinate

EXIT_OK, EXIT_REJECT, EXIT_MALFORMED = 0, 1, 2


class Malformed(Exception):
    pass


def read_hex(path, length):
    try:
        with open(path) as fh:
            text = "".join(fh.read().split())
    except OSError as e:
        raise Malformed("cannot read %s: %s" % (path, e.strerror))
    try:
        data = bytes.fromhex(text)
    except ValueError:
        raise Malformed("%s does not contain valid hex" % path)
    if len(data) != length:
        raise Malformed("%s holds %d bytes, expected %d" % (path, len(data), length))
    return data


def read_raw(path):
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as e:
        raise Malformed("cannot read %s: %s" % (path, e.strerror))


def write_hex(path, data):
    with open(path, "w") as fh:
        fh.write(data.hex() + "\n")


def cmd_keygen(args):
    if args.seed is not None:
        try:
            sk = bytes.fromhex(args.seed)
        except ValueError:
            raise Malformed("seed is not valid hex")
        if len(sk) != scheme.SECRET_KEY_BYTES:
            raise Malformed("seed must be %d bytes" % scheme.SECRET_KEY_BYTES)
    else:
        sk = os.urandom(scheme.SECRET_KEY_BYTES)
    write_hex(args.sk, sk)
    write_hex(args.pk, scheme.keygen(sk))
    return EXIT_OK


def cmd_sign(args):
    sk = read_hex(args.sk, scheme.SECRET_KEY_BYTES)
    pk = read_hex(args.pk, scheme.PUBLIC_KEY_BYTES)
    write_hex(args.sig, scheme.sign(read_raw(args.msg), sk, pk))
    return EXIT_OK


def cmd_verify(args):
    pk = read_hex(args.pk, scheme.PUBLIC_KEY_BYTES)
    sig = read_hex(args.sig, scheme.SIGNATURE_BYTES)
    msg = read_raw(args.msg)
    decompress(pk)      # an undecodable key is malformed input, not a reject
    if scheme.verify(msg, sig, pk):
        print("accept")
        return EXIT_OK
    print("reject")
    return EXIT_REJECT


def cmd_dh(args):
    sk = read_hex(args.sk, scheme.SECRET_KEY_BYTES)
    if args.peer == "generator":
        peer = scheme.generator_encoding()
    else:
        peer = read_hex(args.peer, scheme.DH_BYTES)
    try:
        out = scheme.dh_exchange(sk, peer)
    except (MalformedEncoding, ZeroCoordinate) as e:
        raise Malformed("bad peer value: %s" % e)
    write_hex(args.out, out)
    return EXIT_OK


def cmd_bench(args):
    lines, ok = bench.report()
    print("name,M,S,m_c,a,s,neg,I status")
    for line in lines:
        print(line)
    return EXIT_OK if ok else EXIT_REJECT


def cmd_constants(args):
    if not args.dump:
        print("nothing to do; use --dump", file=sys.stderr)
        return EXIT_MALFORMED
    for line in constants.dump():
        print(line)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="mukummer", description="Genus-2 Kummer signatures and key exchange")
    sub = p.add_subparsers(dest="command", required=True)

    k = sub.add_parser("keygen", help="generate a secret and public key")
    k.add_argument("--sk", required=True, help="output file for the secret key")
    k.add_argument("--pk", required=True, help="output file for the public key")
    k.add_argument("--seed", help="32-byte secret key in hex (deterministic)")
    k.set_defaults(func=cmd_keygen)

    s = sub.add_parser("sign", help="sign a message")
    s.add_argument("--sk", required=True)
    s.add_argument("--pk", required=True)
    s.add_argument("--msg", required=True, help="message file (raw bytes)")
    s.add_argument("--sig", required=True, help="output file for the signature")
    s.set_defaults(func=cmd_sign)

    v = sub.add_parser("verify", help="verify a signature")
    v.add_argument("--pk", required=True)
    v.add_argument("--msg", required=True)
    v.add_argument("--sig", required=True)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dh", help="Diffie-Hellman public value or shared secret")
    d.add_argument("--sk", required=True)
    d.add_argument("--peer", required=True, help='peer value file, or "generator"')
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_dh)

    b = sub.add_parser("bench", help="operation counts against the published costs")
    b.set_defaults(func=cmd_bench)

    c = sub.add_parser("constants", help="print curve constants")
    c.add_argument("--dump", action="store_true")
    c.set_defaults(func=cmd_constants)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Malformed, InvalidEncoding) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_MALFORMED
    except OSError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_REJECT


if __name__ == "__main__":
    sys.exit(main())
