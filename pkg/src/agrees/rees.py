"""Reductions, reduction numbers, joint reductions, Rees presentation ideals.

Randomized searches draw nonzero coefficients from an explicit seed and
return the lowest-index success; every accepted pair is re-verified
deterministically before being returned.  The presentation ideal
K = Ker(k[x,y][T1..Tn] -> R[It]) comes from eliminating t in (Ti - t*fi).
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .core import BlockOrder, Grevlex, Poly, RingCtx
from .groebner import (
    IdealHandle,
    ideal_colon,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_m_primary,
    is_member,
    local_equal,
    m_primary_part,
    reduced_generators,
    scale_ideal,
)


class SearchFailure(RuntimeError):
    """A randomized search exhausted its trial budget."""


def _nonzero_gens(I: IdealHandle) -> list:
    return [g for g in I.gens if not g.is_zero]


def _with_modulus(I: IdealHandle, modulus: Poly | None) -> IdealHandle:
    if modulus is None:
        return I
    return IdealHandle(I.ring, I.gens + (modulus,))


def random_combo(gens, rng: Random) -> Poly:
    """Random combination with nonzero field coefficients on every generator."""
    ring = gens[0].ring
    out = ring.zero()
    for g in gens:
        out = out + g.scale(ring.field.random_nonzero(rng))
    return out


# ---------------------------------------------------------------------------
# reductions


def is_reduction(Q, I: IdealHandle, modulus: Poly | None = None) -> bool:
    """Whether the pair Q=(a,b) satisfies I^2 = Q*I (reduction number <= 1).

    The equality is the local one at the origin: random combinations a, b
    vanish at extra points, so the global ideals differ by components away
    from the maximal ideal that are irrelevant to the reduction property.
    """
    a, b = Q
    target = _with_modulus(I, modulus)
    if not is_member(a, target) or not is_member(b, target):
        raise ValueError("reduction generators must lie in the ideal")
    lhs = ideal_power(I, 2)
    rhs = ideal_product(IdealHandle(I.ring, [a, b]), I)
    if modulus is not None:
        lhs = _with_modulus(lhs, modulus)
        rhs = _with_modulus(rhs, modulus)
    return local_equal(lhs, rhs)


def reduction_number(
    Q: IdealHandle, I: IdealHandle, cap: int = 10, modulus: Poly | None = None
) -> int:
    """Least r <= cap with I^(r+1) = Q * I^r."""
    if cap < 1:
        raise ValueError("cap must be at least 1")
    target = _with_modulus(I, modulus)
    for g in _nonzero_gens(Q):
        if not is_member(g, target):
            raise ValueError("Q is not contained in I")
    power = ideal_power(I, 0)
    for r in range(cap + 1):
        nxt = ideal_product(power, I)
        lhs, rhs = nxt, ideal_product(Q, power)
        if modulus is not None:
            lhs = _with_modulus(lhs, modulus)
            rhs = _with_modulus(rhs, modulus)
        if local_equal(lhs, rhs):
            return r
        power = nxt
    raise ValueError("exceeds cap")


@dataclass(frozen=True)
class ReductionPair:
    """Accepted parameter pair (a,b) for I, with its reduction number."""

    a: Poly
    b: Poly
    ideal: IdealHandle
    r: int
    trial: int


def find_parameter_reduction(
    I: IdealHandle, seed: int = 0, trials: int = 32
) -> ReductionPair:
    """Seeded search for (a,b) with I^2 = (a,b)I; lowest-index success wins."""
    if not is_m_primary(I):
        raise ValueError("m-primary input required")
    gens = reduced_generators(I)
    rng = Random(seed)
    for t in range(trials):
        a = random_combo(gens, rng)
        b = random_combo(gens, rng)
        if a.is_zero or b.is_zero:
            continue
        if not is_reduction((a, b), I):
            continue
        # deterministic recheck on fresh handles before returning
        fresh = IdealHandle(I.ring, I.gens)
        assert is_reduction((a, b), fresh)
        Q = IdealHandle(I.ring, [a, b])
        r = 0 if local_equal(I, Q) else 1
        return ReductionPair(a=a, b=b, ideal=I, r=r, trial=t)
    raise SearchFailure(f"no reduction found in {trials} trials")


def canonical_colon(Q: IdealHandle, I: IdealHandle) -> IdealHandle:
    """J = Q : I for a verified reduction Q of I (the canonical-module surrogate).

    Colons against the m-primary part of Q so that J is the contraction of
    the local colon even when (a, b) has zeros away from the origin.
    """
    qgens = _nonzero_gens(Q)
    if len(qgens) != 2:
        raise ValueError("reduction must be a parameter pair")
    if not is_reduction((qgens[0], qgens[1]), I):
        raise ValueError("Q is not a reduction of I")
    return ideal_colon(m_primary_part(Q), I)


# ---------------------------------------------------------------------------
# joint reductions


def joint_reduction_verify(
    a: Poly, I: IdealHandle, b: Poly, J: IdealHandle, modulus: Poly | None = None
) -> bool:
    """Whether I*J = a*J + I*b, as localizations at the origin."""
    if not is_member(a, _with_modulus(I, modulus)):
        raise ValueError("a is not in I")
    if not is_member(b, _with_modulus(J, modulus)):
        raise ValueError("b is not in J")
    lhs = ideal_product(I, J)
    rhs = ideal_sum(scale_ideal(a, J), scale_ideal(b, I))
    if modulus is not None:
        lhs = _with_modulus(lhs, modulus)
        rhs = _with_modulus(rhs, modulus)
    return local_equal(lhs, rhs)


@dataclass(frozen=True)
class JointReduction:
    a: Poly
    b: Poly
    trial: int


def find_joint_reduction(
    I: IdealHandle, J: IdealHandle, seed: int = 0, trials: int = 32
) -> JointReduction:
    """Seeded search for a joint reduction (a in I, b in J) of the pair."""
    if not is_m_primary(I) or not is_m_primary(J):
        raise ValueError("m-primary input required")
    igens = reduced_generators(I)
    jgens = reduced_generators(J)
    rng = Random(seed)
    for t in range(trials):
        a = random_combo(igens, rng)
        b = random_combo(jgens, rng)
        if a.is_zero or b.is_zero:
            continue
        if not joint_reduction_verify(a, I, b, J):
            continue
        fresh_I = IdealHandle(I.ring, I.gens)
        fresh_J = IdealHandle(J.ring, J.gens)
        assert joint_reduction_verify(a, fresh_I, b, fresh_J)
        return JointReduction(a=a, b=b, trial=t)
    raise SearchFailure(f"not found in {trials} trials")


# ---------------------------------------------------------------------------
# Rees presentation


@dataclass(frozen=True)
class ReesPresentation:
    """Presentation K of the Rees algebra under Ti -> images[i] * t."""

    base_ring: RingCtx
    ambient: RingCtx
    K: IdealHandle
    tvars: tuple
    images: tuple

    @property
    def gen_map(self):
        return list(zip(self.tvars, self.images))


def rees_ideal(I: IdealHandle, gens=None, tvar_names=None) -> ReesPresentation:
    """Presentation ideal via eliminating t from (Ti - t*fi).

    The generator list fixes the meaning of the Ti; by default it is the
    canonical minimal generator list, leading monomials descending.
    """
    ring0 = I.ring
    if gens is None:
        gens = reduced_generators(I)
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    n0 = ring0.nvars
    n = len(gens)
    if tvar_names is None:
        tvar_names = tuple(f"T{i + 1}" for i in range(n))
    tvar_names = tuple(tvar_names)
    if len(tvar_names) != n or len(set(tvar_names) | set(ring0.names)) != n + n0:
        raise ValueError("need one fresh T-name per generator")

    names3 = ("@t",) + ring0.names + tvar_names
    ring3 = RingCtx(names3, ring0.field, BlockOrder(n0 + n + 1, 1))
    zeros_t = (0,) * n
    gens3 = []
    for i, f in enumerate(gens):
        e_t = [0] * (n0 + n + 1)
        e_t[1 + n0 + i] = 1
        terms = [(ring0.field.one, tuple(e_t))]
        terms += [(ring0.field.neg(c), (1,) + e + zeros_t) for e, c in f.terms]
        gens3.append(ring3.poly(terms))
    basis = IdealHandle(ring3, gens3).gb()[0]

    ambient = RingCtx(ring0.names + tvar_names, ring0.field, Grevlex(n0 + n))
    kept = [g for g in basis if g.lm()[0] == 0]
    K = IdealHandle(
        ambient, [ambient.poly([(c, e[1:]) for e, c in g.terms]) for g in kept]
    )
    return ReesPresentation(
        base_ring=ring0, ambient=ambient, K=K, tvars=tvar_names, images=tuple(gens)
    )


def rees_substitution_check(pres: ReesPresentation) -> bool:
    """Every element of K vanishes under Ti -> images[i] * u, u fresh."""
    ring0 = pres.base_ring
    n0 = ring0.nvars
    ringU = RingCtx(ring0.names + ("@s",), ring0.field, Grevlex(n0 + 1))
    u = ringU.var(n0)
    lift = lambda p: ringU.poly([(c, e + (0,)) for e, c in p.terms])
    images = [ringU.var(i) for i in range(n0)]
    images += [lift(f) * u for f in pres.images]
    return all(g.substitute(ringU, images).is_zero for g in pres.K.gens)


def rees_base_contraction(pres: ReesPresentation) -> IdealHandle:
    """K intersected with the base ring k[x,y]; zero for m-primary input."""
    n0 = pres.base_ring.nvars
    nT = len(pres.tvars)
    ring2 = RingCtx(
        pres.tvars + pres.base_ring.names,
        pres.ambient.field,
        BlockOrder(nT + n0, nT),
    )
    moved = [
        ring2.poly([(c, e[n0:] + e[:n0]) for e, c in g.terms]) for g in pres.K.gens
    ]
    basis = IdealHandle(ring2, moved).gb()[0]
    ring0g = RingCtx(pres.base_ring.names, pres.ambient.field, Grevlex(n0))
    kept = [g for g in basis if all(x == 0 for x in g.lm()[:nT])]
    return IdealHandle(
        ring0g, [ring0g.poly([(c, e[nT:]) for e, c in g.terms]) for g in kept]
    )
