import pytest

from conftest import oracle_mul
from mukummer import jacobian as J, kummer as Ku
from mukummer.constants import CONSTANTS as K
from mukummer.recovery import RecoveryDegenerate
from mukummer.scalarmult import cswap, crypto_scalarmult, jacobian_scalarmult, jacobian_scalarmult_pure


def test_cswap():
    U, V = Ku.KummerPoint(1, 2, 3, 4), Ku.KummerPoint(5, 6, 7, 8)
    assert cswap(0, U, V) == (U, V)
    assert cswap(1, U, V) == (V, U)
    for b in (0, 1):
        assert cswap(b, *cswap(b, U, V)) == (U, V)


def test_ladder_small_scalars(gen):
    W = Ku.generator_wrapped()
    X0, X1 = crypto_scalarmult(0, W)
    assert Ku.projective_equal(X0, Ku.IDENTITY)
    assert Ku.projective_equal(X1, Ku.project(gen))
    X0, X1 = crypto_scalarmult(1, W)
    assert Ku.projective_equal(X0, Ku.project(gen))
    assert Ku.projective_equal(X1, Ku.project(oracle_mul(2)))


def test_ladder_order(gen):
    X0, _ = crypto_scalarmult(K.N, Ku.generator_wrapped())
    assert Ku.projective_equal(X0, Ku.IDENTITY)


def test_ladder_prefix_invariant(gen, rng):
    m = rng.randrange(1 << 250)
    for shift in (240, 200, 120):
        k = m >> shift
        X0, X1 = crypto_scalarmult(k, Ku.generator_wrapped())
        assert Ku.projective_equal(X0, Ku.project(oracle_mul(k)))
        assert Ku.projective_equal(X1, Ku.project(oracle_mul(k + 1)))


def test_ladder_rejects_oversized_scalar():
    with pytest.raises(ValueError):
        crypto_scalarmult(1 << 251, Ku.generator_wrapped())


def test_jacobian_scalarmult_examples(gen):
    W = Ku.generator_wrapped()
    assert jacobian_scalarmult(2, gen, W) == oracle_mul(2)
    assert jacobian_scalarmult(K.N - 1, gen, W) == J.neg(gen)
    assert jacobian_scalarmult(K.N + 1, gen, W) == gen
    with pytest.raises(RecoveryDegenerate):
        jacobian_scalarmult(0, gen, W)


def test_jacobian_scalarmult_random(gen, rng):
    W = Ku.generator_wrapped()
    for _ in range(5):
        m = rng.randrange(2, K.N - 1)
        R = jacobian_scalarmult(m, gen, W)
        assert R == oracle_mul(m)
        assert J.is_on_jacobian(R)


def test_pure_variant(rng):
    from conftest import random_jacobian_point
    P = random_jacobian_point(rng)
    assert jacobian_scalarmult_pure(3, P) == oracle_mul(3, P)
