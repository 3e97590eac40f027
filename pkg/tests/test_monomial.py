"""Staircase combinatorics: antichains, Newton polygons, integral closure."""

from random import Random

import pytest

from agrees import MonoIdeal2, RingCtx
from agrees.monomial import (
    closure_oracle,
    integral_closure,
    is_integrally_closed,
    mono_colon,
    mono_intersect,
    mono_minimalize,
    mono_power,
    mono_product,
    newton_polygon,
)

from conftest import random_mono


def M(*pts):
    return MonoIdeal2(list(pts))


# --- antichain canonicalization -------------------------------------------------


def test_minimalize_drops_redundant_points():
    I = M((2, 0), (3, 1), (0, 2), (5, 5))
    assert I.gens == ((0, 2), (2, 0))
    assert mono_minimalize([(1, 1), (1, 2), (2, 1)]).gens == ((1, 1),)


def test_zero_ideal_marker():
    Z = MonoIdeal2([])
    assert Z.is_zero
    assert not Z.contains((0, 0))
    assert not Z.is_m_primary()
    P = M((1, 1))
    assert P.intersect(Z).is_zero
    assert (P * Z).is_zero
    with pytest.raises(ValueError, match="colon by zero ideal"):
        P.colon(Z)
    # colon of the zero ideal by anything proper stays zero
    assert Z.colon(P).is_zero


def test_from_polys_requires_monomials():
    ring = RingCtx(("x", "y"))
    x, y = ring.gens()
    assert MonoIdeal2.from_polys([x**2, y]).gens == ((0, 1), (2, 0))
    with pytest.raises(ValueError, match="monomial ideal required"):
        MonoIdeal2.from_polys([x + y])


def test_contains_and_colength():
    I = M((2, 0), (1, 1), (0, 3))
    assert I.contains((2, 5)) and I.contains((1, 1))
    assert not I.contains((1, 0)) and not I.contains((0, 2))
    assert I.colength() == 2 + 1 + 1  # (0,0),(1,0),(0,1),(0,2)
    with pytest.raises(ValueError, match="infinite colength"):
        M((1, 1)).colength()


def test_operations_small_examples():
    a = M((2, 0), (0, 1))
    b = M((1, 0), (0, 2))
    assert (a * b).gens == ((0, 3), (1, 1), (3, 0))
    assert a.intersect(b).gens == ((0, 2), (1, 1), (2, 0))
    assert mono_colon(M((2, 0), (0, 2)), M((1, 0), (0, 1))).gens == (
        (0, 2),
        (1, 1),
        (2, 0),
    )
    assert mono_power(M((1, 0), (0, 1)), 3).gens == ((0, 3), (1, 2), (2, 1), (3, 0))
    assert mono_product(a, b).gens == (a * b).gens
    assert mono_intersect(a, b).gens == a.intersect(b).gens


def test_colon_is_residual():
    rng = Random(13)
    for _ in range(60):
        A, B = random_mono(rng), random_mono(rng)
        C = A.colon(B)
        # (A:B)*B inside A, and A inside A:B
        assert A.contains_ideal(C * B)
        assert C.contains_ideal(A)


# --- Newton polygon ---------------------------------------------------------------


def test_newton_vertices_example():
    I = M((3, 0), (1, 1), (0, 2))
    assert I.newton_vertices() == [(3, 0), (1, 1), (0, 2)]
    # interior staircase points do not become vertices
    J = M((3, 0), (2, 1), (1, 2), (0, 3))
    assert J.newton_vertices() == [(3, 0), (0, 3)]
    assert newton_polygon(J) == [(3, 0), (0, 3)]


def test_newton_requires_m_primary():
    with pytest.raises(ValueError, match="not m-primary"):
        M((1, 1)).newton_vertices()
    with pytest.raises(ValueError, match="not m-primary"):
        integral_closure(M((2, 0)))


def test_newton_contains():
    I = M((3, 0), (0, 3))
    assert I.newton_contains((2, 1)) and I.newton_contains((1, 2))
    assert not I.newton_contains((1, 1))
    assert I.newton_contains((5, 0))


def test_closure_example():
    I = M((4, 0), (0, 4))
    assert I.closure().gens == ((0, 4), (1, 3), (2, 2), (3, 1), (4, 0))
    J = M((2, 0), (0, 2))
    assert J.closure().gens == ((0, 2), (1, 1), (2, 0))
    assert is_integrally_closed(M((2, 0), (1, 1), (0, 2)))
    assert not is_integrally_closed(J)


# --- closure operator laws ----------------------------------------------------------


def test_closure_is_a_closure_operator():
    rng = Random(19)
    for _ in range(60):
        I = random_mono(rng)
        C = I.closure()
        assert C.contains_ideal(I)  # extensive
        assert C.closure().gens == C.gens  # idempotent
        K = I * M((1, 0), (0, 1))  # smaller ideal
        assert C.contains_ideal(K.closure())  # monotone on K subset of I


def test_product_of_closed_is_closed_hundred_pairs():
    rng = Random(2)
    for _ in range(100):
        A = random_mono(rng).closure()
        B = random_mono(rng).closure()
        assert (A * B).is_integrally_closed()


def test_powers_of_closed_are_closed():
    rng = Random(37)
    for _ in range(20):
        A = random_mono(rng).closure()
        for k in (2, 3):
            assert A.power(k).is_integrally_closed()


def test_closure_oracle_equivalence_fifty_ideals():
    rng = Random(3)
    for _ in range(50):
        I = random_mono(rng)
        C = I.closure()
        ma, mb = I.max_exponents()
        for a in range(ma + 1):
            for b in range(mb + 1):
                assert C.contains((a, b)) == I.closure_oracle((a, b))
                assert C.contains((a, b)) == closure_oracle(I, (a, b))


def test_closure_oracle_validation():
    I = M((2, 0), (0, 2))
    with pytest.raises(ValueError, match="k_max must be at least 1"):
        I.closure_oracle((1, 1), 0)
    assert I.closure_oracle((1, 1), 4)
    assert not MonoIdeal2([]).closure_oracle((1, 1))


def test_is_m_primary_detection():
    assert M((2, 0), (0, 2)).is_m_primary()
    assert not M((2, 0)).is_m_primary()
    assert not M((1, 1)).is_m_primary()
    assert M((0, 0)).is_unit
