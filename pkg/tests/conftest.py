import random

import pytest

from mukummer import kummer, oracle
from mukummer.constants import CONSTANTS
from mukummer.field import q
from mukummer.jacobian import JacobianPoint


class SurfaceWatch:
    """Checks every Kummer point produced anywhere in the test session."""

    def __init__(self):
        self.checked = 0
        self.bad = []

    def __call__(self, P):
        self.checked += 1
        if not kummer.on_kummer(P) and len(self.bad) < 10:
            self.bad.append(P)


WATCH = SurfaceWatch()


def pytest_sessionstart(session):
    kummer.add_output_hook(WATCH)


def pytest_collection_modifyitems(session, config, items):
    # The surface-membership criterion summarises the whole run, so it goes last.
    last = [it for it in items if "surface_membership" in it.name]
    rest = [it for it in items if it not in last]
    items[:] = rest + last


@pytest.fixture
def watch():
    return WATCH


@pytest.fixture
def rng():
    return random.Random(20161)


@pytest.fixture(scope="session")
def gen():
    return JacobianPoint(*CONSTANTS.generator)


def sqrt_mod(x):
    r = pow(x, (q + 1) // 4, q)
    return r if r * r % q == x % q else None


def random_jacobian_point(rng):
    """A random class <(X - x1)(X - x2), v> from two random affine curve points.

    Not restricted to the subgroup generated by the base point.
    """
    f = oracle.F
    pts = []
    while len(pts) < 2:
        x = rng.randrange(q)
        y = sqrt_mod(sum(c * pow(x, i, q) for i, c in enumerate(f)) % q)
        if y is None or any(x == px for px, _ in pts):
            continue
        pts.append((x, y if rng.random() < 0.5 else (-y) % q))
    (x1, y1), (x2, y2) = pts
    v1 = (y1 - y2) * pow(x1 - x2, q - 2, q) % q
    v0 = (y1 - v1 * x1) % q
    return JacobianPoint((-(x1 + x2)) % q, x1 * x2 % q, v1, v0)


def oracle_mul(m, P=None):
    D = oracle.GENERATOR if P is None else oracle.from_tuple(P)
    return JacobianPoint(*oracle.to_tuple(oracle.oracle_scalarmult(m, D)))
