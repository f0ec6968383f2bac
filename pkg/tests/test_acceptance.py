"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import os
import random
import time

import pytest

from conftest import random_jacobian_point
from mukummer import bench, jacobian as J, kummer as Ku, oracle, scheme as S
from mukummer.constants import CONSTANTS as K, derive_constants
from mukummer.opcount import record, trace
from mukummer.scalarmult import crypto_scalarmult, jacobian_scalarmult

BETA = 251

# Published per-routine costs (M, S, m_c, a, s, neg, I).
TABLE = {
    "ADD": (28, 2, 0, 11, 24, 0, 1),
    "Project": (8, 1, 4, 7, 8, 0, 0),
    "xWRAP": (7, 0, 0, 0, 0, 0, 1),
    "xUNWRAP": (4, 0, 0, 0, 0, 0, 0),
    "xADD": (14, 4, 4, 12, 12, 0, 0),
    "xDBLADD": (7, 12, 12, 16, 16, 0, 0),
    "recoverGeneral": (77, 8, 0, 19, 10, 3, 1),
    "fast2genPartial": (11, 0, 0, 9, 0, 0, 0),
    "fast2genFull": (15, 0, 0, 12, 0, 0, 0),
    "compress": (3, 1, 0, 2, 2, 0, 0),
    "decompress": (46, 255, 0, 17, 12, 6, 0),
}

ZERO = bytes(32)
FROZEN_PK = "5f88efd3e77f5fdad6e00b205c99ce4c1f09c78a4f0c8965d73ed87e9c3ffd0f"
FROZEN_SIG_ABC = ("104b9eddf53ca03ed9b567016e5c1db4"
                  "15ff5e5fd3c786d5f1886e1352eb2ca1e7ced47521612b930dc88efc532cd502")
FROZEN_DH = ("ffffffffffffffffffffffffffffff3faea1bc86f21aca6b28afa1bc86f21a4a"
             "51555555555555555555555555555555")


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print("\nACCEPTANCE %-2d %s  %s" % (n, "PASS" if ok else "FAIL", detail))
    return emit


def test_c01_operation_counts_match_table(report):
    t0 = time.perf_counter()
    got = bench.measure()
    elapsed = time.perf_counter() - t0
    bad = {name: got[name].as_tuple() for name, want in TABLE.items() if got[name].as_tuple() != want}
    ok = not bad and elapsed < 1.0
    report(1, ok, "11 routines, exact (M,S,m_c,a,s,neg,I); mismatches=%s; %.2fs" % (
        {k: (v, TABLE[k]) for k, v in bad.items()} or "none", elapsed))
    assert not bad
    assert elapsed < 1.0


def test_c02_ladder_cost_formula(report):
    t0 = time.perf_counter()
    _, t = record(crypto_scalarmult, random.Random(1).randrange(1 << 251), Ku.generator_wrapped())
    elapsed = time.perf_counter() - t0
    want = (4 + 7 * BETA, 12 * BETA, 12 * BETA, 16 * BETA, 16 * BETA, 0, 0)
    ok = t.as_tuple() == want and elapsed < 1.0
    report(2, ok, "ladder tally %s, expected %s; %.2fs" % (t.as_tuple(), want, elapsed))
    assert t.as_tuple() == want
    assert elapsed < 1.0


def test_c03_constants_reproduced(report):
    t0 = time.perf_counter()
    k = derive_constants()
    elapsed = time.perf_counter() - t0
    sv = lambda cs: tuple(c.sign * c.magnitude for c in cs)
    checks = [
        k.lam == 0x15555555555555555555555555555552,
        k.mu == 0x73E334FBB315130E05A505C31919A746,
        k.nu == 0x552AB1B63BF799716B5806482D2D21F3,
        k.f1 == 0x1EDD6EE48E0C2F16F537CD791E4A8D6E,
        k.f2 == 0x73E799E36D9FCC210C9CD1B164C39A35,
        k.f3 == 0x4B9E333F48B6069CC47DC236188DF6E8,
        k.f4 == 0x219CC3F8BB9DFE2B39AD9E9F6463E172,
        sv(k.dual_thetas) == (33, -11, -17, -49),
        sv(k.inv_thetas) == (114, -57, -66, -418),
        sv(k.inv_dual_thetas) == (-833, 2499, 1617, 561),
    ]
    ok = all(checks) and elapsed < 1.0
    report(3, ok, "%d/%d constants bit-exact; %.2fs" % (sum(checks), len(checks), elapsed))
    assert all(checks)
    assert elapsed < 1.0


def test_c04_oracle_equivalence(report, gen):
    t0 = time.perf_counter()
    W = Ku.generator_wrapped()
    bad = []
    D = oracle.GENERATOR
    for m in range(2, 65):
        D = oracle.oracle_add(D, oracle.GENERATOR)
        if jacobian_scalarmult(m, gen, W) != J.JacobianPoint(*oracle.to_tuple(D)):
            bad.append(m)
    rng = random.Random(404)
    for _ in range(50):
        m = rng.randrange(2, K.N - 1)
        want = J.JacobianPoint(*oracle.to_tuple(oracle.oracle_scalarmult(m, oracle.GENERATOR)))
        if jacobian_scalarmult(m, gen, W) != want:
            bad.append(m)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 60
    report(4, ok, "113 scalars, exact Mumford equality; failures=%d; %.1fs" % (len(bad), elapsed))
    assert not bad
    assert elapsed < 60


def test_c05_generator_order(report, gen):
    t0 = time.perf_counter()
    W = Ku.generator_wrapped()
    X0, _ = crypto_scalarmult(K.N, W)
    a = Ku.projective_equal(X0, Ku.IDENTITY)
    b = jacobian_scalarmult(K.N - 1, gen, W) == J.neg(gen)
    elapsed = time.perf_counter() - t0
    ok = a and b and elapsed < 5
    report(5, ok, "ladder(N) is identity: %s; [N-1]P = -P: %s; %.2fs" % (a, b, elapsed))
    assert a and b
    assert elapsed < 5


def test_c06_compression(report):
    t0 = time.perf_counter()
    rng = random.Random(606)
    roundtrip_bad = 0
    for _ in range(1000):
        P = random_jacobian_point(rng)
        if J.decompress(J.compress(P)) != P:
            roundtrip_bad += 1
    valid = crashed = 0
    for _ in range(10000):
        b = rng.randbytes(32)
        try:
            P = J.decompress(b)
            if not J.is_on_jacobian(P):
                crashed += 1
            valid += 1
        except J.InvalidEncoding:
            pass
        except Exception:
            crashed += 1
    elapsed = time.perf_counter() - t0
    ok = roundtrip_bad == 0 and crashed == 0 and elapsed < 60
    report(6, ok, "1000 round trips bad=%d; 10000 fuzz valid=%d crashes=%d; %.1fs" % (
        roundtrip_bad, valid, crashed, elapsed))
    assert roundtrip_bad == 0 and crashed == 0
    assert elapsed < 60


def _flip(b, i):
    b = bytearray(b)
    b[i // 8] ^= 1 << (i % 8)
    return bytes(b)


def test_c07_signatures(report):
    t0 = time.perf_counter()
    rng = random.Random(707)
    rejected_valid = 0
    tamper_accepted = 0
    triples = []
    for i in range(100):
        d = rng.randbytes(32)
        msg = rng.randbytes(rng.randrange(0, 64))
        pk = S.keygen(d)
        sig = S.sign(msg, d, pk)
        if not S.verify(msg, sig, pk):
            rejected_valid += 1
        triples.append((msg, sig, pk))
    for i, (msg, sig, pk) in enumerate(triples):
        where = i % 3
        if where == 0:
            msg = _flip(msg + b"\x00", rng.randrange(8 * (len(msg) + 1)))
        elif where == 1:
            sig = _flip(sig, rng.randrange(384))
        else:
            pk = _flip(pk, rng.randrange(256))
        if S.verify(msg, sig, pk):
            tamper_accepted += 1
    pk0 = S.keygen(ZERO)
    frozen = pk0.hex() == FROZEN_PK and S.sign(b"abc", ZERO, pk0).hex() == FROZEN_SIG_ABC
    elapsed = time.perf_counter() - t0
    ok = rejected_valid == 0 and tamper_accepted == 0 and frozen and elapsed < 120
    report(7, ok, "100 round trips rejected=%d; 100 tampers accepted=%d; frozen vectors %s; %.1fs" % (
        rejected_valid, tamper_accepted, "match" if frozen else "DIFFER", elapsed))
    assert rejected_valid == 0 and tamper_accepted == 0 and frozen
    assert elapsed < 120


def test_c08_diffie_hellman(report):
    t0 = time.perf_counter()
    rng = random.Random(808)
    disagree = 0
    for _ in range(100):
        a, b = rng.randbytes(32), rng.randbytes(32)
        if S.dh_exchange(a, S.dh_public(b)) != S.dh_exchange(b, S.dh_public(a)):
            disagree += 1
    pk0 = S.keygen(ZERO)
    frozen = (pk0.hex() == FROZEN_PK and S.sign(b"abc", ZERO, pk0).hex() == FROZEN_SIG_ABC
              and S.dh_public(ZERO).hex() == FROZEN_DH)
    elapsed = time.perf_counter() - t0
    ok = disagree == 0 and frozen and elapsed < 120
    report(8, ok, "100 key pairs disagreements=%d; frozen keygen/sign/dh %s; %.1fs" % (
        disagree, "match" if frozen else "DIFFER", elapsed))
    assert disagree == 0 and frozen
    assert elapsed < 120


def test_c09_constant_time_trace(report):
    t0 = time.perf_counter()
    rng = random.Random(909)
    W = Ku.generator_wrapped()
    ladder_traces = [trace(crypto_scalarmult, rng.randrange(1 << 251), W)[1] for _ in range(20)]
    same_ladder = all(tr == ladder_traces[0] for tr in ladder_traces)
    iterations = ladder_traces[0].count("cswap") // 2
    pk = S.keygen(ZERO)
    sign_traces = [trace(S.sign, b"fixed message", rng.randbytes(32), pk)[1] for _ in range(20)]
    same_sign = all(tr == sign_traces[0] for tr in sign_traces)
    elapsed = time.perf_counter() - t0
    ok = same_ladder and same_sign and iterations == BETA and elapsed < 10
    report(9, ok, "ladder traces identical: %s (%d iterations, %d events); sign traces identical: %s; %.1fs" % (
        same_ladder, iterations, len(ladder_traces[0]), same_sign, elapsed))
    assert same_ladder and same_sign and iterations == BETA
    assert elapsed < 10


def test_c10_surface_membership(report, watch, gen):
    # Make sure all three producers have run even if this test runs alone.
    P = Ku.project(gen)
    Ku.xadd(P, P, Ku.IDENTITY)
    crypto_scalarmult(12345, Ku.xwrap(P))
    ok = watch.checked > 0 and not watch.bad
    report(10, ok, "%d points from project/xadd/xdbladd checked, %d off the surface" % (
        watch.checked, len(watch.bad)))
    assert watch.checked > 0
    assert not watch.bad
