"""Reductions, joint reductions, and Rees presentation ideals."""

from random import Random

import pytest

from agrees import (
    IdealHandle,
    SearchFailure,
    canonical_colon,
    find_joint_reduction,
    find_parameter_reduction,
    ideal_equal,
    is_reduction,
    joint_reduction_verify,
    reduction_number,
    rees_base_contraction,
    rees_ideal,
    rees_substitution_check,
)
from agrees.core import format_poly

from conftest import lift_mono, random_mono


def _m_power(ring, k):
    x, y = ring.gens()
    return IdealHandle(ring, [x ** (k - i) * y**i for i in range(k + 1)])


# --- reductions -------------------------------------------------------------------


def test_parameter_pair_is_reduction_of_m2(R2):
    x, y = R2.gens()
    m2 = _m_power(R2, 2)
    assert is_reduction((x**2, y**2), m2)
    # too small: the Newton polygon of (x^4,y^4) misses x^2*y^2
    assert not is_reduction((x**4, y**4), m2)


def test_is_reduction_requires_membership(R2):
    x, y = R2.gens()
    with pytest.raises(ValueError, match="must lie in the ideal"):
        is_reduction((x, y), _m_power(R2, 2))


def test_reduction_number_values(R2):
    x, y = R2.gens()
    m2 = _m_power(R2, 2)
    assert reduction_number(IdealHandle(R2, [x**2, y**2]), m2) == 1
    assert reduction_number(m2, m2) == 0
    I = IdealHandle(R2, [x**3, x**2 * y, y**2])
    assert reduction_number(IdealHandle(R2, [x**3, y**2]), I) == 1


def test_reduction_number_three_variables(R3):
    x, y, z = R3.gens()
    I = IdealHandle(R3, [x * x * y, y * y * z, z * z * x, x * y * z])
    Q = IdealHandle(R3, [x * x * y, y * y * z, z * z * x])
    assert reduction_number(Q, I) == 2


def test_reduction_number_errors(R2):
    x, y = R2.gens()
    m2 = _m_power(R2, 2)
    with pytest.raises(ValueError, match="cap must be at least 1"):
        reduction_number(m2, m2, cap=0)
    with pytest.raises(ValueError, match="Q is not contained in I"):
        reduction_number(IdealHandle(R2, [x, y]), m2)
    with pytest.raises(ValueError, match="exceeds cap"):
        reduction_number(IdealHandle(R2, [x**4, y**4]), m2, cap=2)


def test_find_parameter_reduction_deterministic(R2):
    m2 = _m_power(R2, 2)
    first = find_parameter_reduction(m2, seed=5)
    second = find_parameter_reduction(m2, seed=5)
    assert format_poly(first.a) == format_poly(second.a)
    assert format_poly(first.b) == format_poly(second.b)
    assert first.trial == second.trial == 0
    assert first.r == 1
    assert is_reduction((first.a, first.b), m2)


def test_find_parameter_reduction_r_zero_for_two_generators(R2):
    # two generic combos of two generators regenerate the ideal exactly
    x, y = R2.gens()
    pair = find_parameter_reduction(IdealHandle(R2, [x**2, y**2]), seed=0)
    assert pair.r == 0


def test_find_parameter_reduction_random_closed_ideals(R2):
    rng = Random(11)
    for _ in range(8):
        I = lift_mono(R2, random_mono(rng).closure())
        pair = find_parameter_reduction(I, seed=3)
        assert is_reduction((pair.a, pair.b), I)


def test_find_parameter_reduction_errors(R2):
    x, y = R2.gens()
    with pytest.raises(ValueError, match="m-primary input required"):
        find_parameter_reduction(IdealHandle(R2, [x**2, x * y]))
    with pytest.raises(SearchFailure, match="no reduction found in 0 trials"):
        find_parameter_reduction(_m_power(R2, 2), trials=0)


def test_canonical_colon_of_m2(R2):
    x, y = R2.gens()
    J = canonical_colon(IdealHandle(R2, [x**2, y**2]), _m_power(R2, 2))
    assert ideal_equal(J, IdealHandle(R2, [x, y]))


def test_canonical_colon_errors(R2):
    x, y = R2.gens()
    m2 = _m_power(R2, 2)
    with pytest.raises(ValueError, match="parameter pair"):
        canonical_colon(m2, m2)
    with pytest.raises(ValueError, match="not a reduction"):
        canonical_colon(IdealHandle(R2, [x**4, y**4]), m2)


# --- joint reductions --------------------------------------------------------------


def test_joint_reduction_of_closed_pair(R2):
    m2, m3 = _m_power(R2, 2), _m_power(R2, 3)
    jr = find_joint_reduction(m2, m3, seed=1)
    assert jr.trial == 0
    assert joint_reduction_verify(jr.a, m2, jr.b, m3)
    again = find_joint_reduction(m2, m3, seed=1)
    assert format_poly(jr.a) == format_poly(again.a)
    assert format_poly(jr.b) == format_poly(again.b)


def test_joint_reduction_needs_closed_ideals(R2):
    # (x^3,y^3) is not integrally closed: the degree-5 part of a*J + b*I
    # spans at most 5 of the 6 quintic monomials, so equality on the nose
    # fails for every choice of a, b
    x, y = R2.gens()
    m2 = _m_power(R2, 2)
    J = IdealHandle(R2, [x**3, y**3])
    with pytest.raises(SearchFailure, match="not found in 8 trials"):
        find_joint_reduction(m2, J, seed=0, trials=8)


def test_joint_reduction_verify_membership_errors(R2):
    x, y = R2.gens()
    m2, m3 = _m_power(R2, 2), _m_power(R2, 3)
    with pytest.raises(ValueError, match="a is not in I"):
        joint_reduction_verify(x, m2, x**3, m3)
    with pytest.raises(ValueError, match="b is not in J"):
        joint_reduction_verify(x**2, m2, y**2, m3)


def test_find_joint_reduction_random_closed_pairs(R2):
    rng = Random(7)
    for _ in range(6):
        I = lift_mono(R2, random_mono(rng).closure())
        J = lift_mono(R2, random_mono(rng).closure())
        jr = find_joint_reduction(I, J, seed=2)
        assert joint_reduction_verify(jr.a, I, jr.b, J)


# --- Rees presentation ---------------------------------------------------------------


def test_rees_ideal_of_maximal_ideal(R2):
    x, y = R2.gens()
    pres = rees_ideal(IdealHandle(R2, [x, y]))
    assert pres.tvars == ("T1", "T2")
    assert [format_poly(f) for f in pres.images] == ["x", "y"]
    assert [format_poly(g) for g in pres.K.gens] == ["y*T1 - x*T2"]


def test_rees_ideal_of_m_squared(R2):
    pres = rees_ideal(_m_power(R2, 2))
    assert [format_poly(f) for f in pres.images] == ["x^2", "x*y", "y^2"]
    assert [format_poly(g) for g in pres.K.gens] == [
        "T2^2 - T1*T3",
        "y*T2 - x*T3",
        "y*T1 - x*T2",
    ]


def test_rees_ideal_respects_explicit_generator_order(R2):
    x, y = R2.gens()
    gens = [x**2, y**2, x * y]
    pres = rees_ideal(IdealHandle(R2, gens), gens=gens)
    assert [format_poly(f) for f in pres.images] == ["x^2", "y^2", "x*y"]
    assert [format_poly(g) for g in pres.K.gens] == [
        "T1*T2 - T3^2",
        "x*T2 - y*T3",
        "y*T1 - x*T3",
    ]
    assert pres.gen_map[0][0] == "T1"


def test_rees_substitution_and_contraction(R2):
    rng = Random(23)
    for _ in range(5):
        I = lift_mono(R2, random_mono(rng))
        pres = rees_ideal(I)
        assert rees_substitution_check(pres)
        assert rees_base_contraction(pres).gens == ()


def test_rees_ideal_custom_tvar_names(R2):
    x, y = R2.gens()
    pres = rees_ideal(IdealHandle(R2, [x, y]), tvar_names=("S", "U"))
    assert pres.tvars == ("S", "U")
    assert [format_poly(g) for g in pres.K.gens] == ["y*S - x*U"]


def test_rees_ideal_input_validation(R2):
    x, y = R2.gens()
    with pytest.raises(ValueError, match="at least one nonzero generator"):
        rees_ideal(IdealHandle(R2, [R2.zero()]))
    with pytest.raises(ValueError, match="fresh T-name"):
        rees_ideal(IdealHandle(R2, [x, y]), tvar_names=("x", "T2"))
    with pytest.raises(ValueError, match="fresh T-name"):
        rees_ideal(IdealHandle(R2, [x, y]), tvar_names=("T1",))
