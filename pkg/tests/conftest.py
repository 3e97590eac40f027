"""Shared fixtures and seeded generators for the test suite."""

import pytest
from hypothesis import settings

from agrees import GF32003, QQ, IdealHandle, MonoIdeal2, RingCtx

settings.register_profile("deterministic", derandomize=True, deadline=None)
settings.load_profile("deterministic")


@pytest.fixture
def R2():
    return RingCtx(("x", "y"))


@pytest.fixture
def R2q():
    return RingCtx(("x", "y"), QQ)


@pytest.fixture
def R3():
    return RingCtx(("x", "y", "z"))


def random_poly(ring, rng, max_deg=4, max_terms=5):
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in range(ring.nvars))
        terms.append((ring.field.random(rng), e))
    return ring.poly(terms)


def random_nonzero_poly(ring, rng, **kw):
    while True:
        p = random_poly(ring, rng, **kw)
        if not p.is_zero:
            return p


def random_ideal(ring, rng, max_gens=3, **kw):
    n = rng.randint(1, max_gens)
    return IdealHandle(ring, [random_nonzero_poly(ring, rng, **kw) for _ in range(n)])


def random_mono(rng, bound=6):
    """Proper m-primary monomial ideal with exponents up to the bound."""
    pts = {(rng.randint(1, bound), 0), (0, rng.randint(1, bound))}
    for _ in range(rng.randint(1, 4)):
        p = (rng.randint(0, bound), rng.randint(0, bound))
        if p != (0, 0):
            pts.add(p)
    return MonoIdeal2(sorted(pts))


def lift_mono(ring, M):
    return IdealHandle(ring, [ring.monomial(e) for e in M.gens])
