"""Decision procedures for the almost Gorenstein property of Rees algebras.

Three sound, one-directional routes combine:
  * witness search: find f in m, g in I, h in J = Q:I with IJ = gJ + Ih and
    mJ = fJ + mh (same h in both), certifying the property;
  * socle criterion: for Q = (a,b) inside m^2 and I = Q:m = (a,b,c), if all
    four syzygy coefficients of xc and yc against (a,b) fall in m^2, the
    property fails;
  * J = (1) means the Rees algebra is Gorenstein outright.
Exhausted searches return Inconclusive, never a negative claim.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from random import Random

from .core import Grevlex, Poly, RingCtx
from .groebner import (
    IdealHandle,
    ideal_colon,
    ideal_equal,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_m_primary,
    is_member,
    is_unit_ideal,
    local_equal,
    m_primary_part,
    min_gens,
    normal_form,
    reduced_generators,
    scale_ideal,
)
from .monomial import MonoIdeal2
from .rees import is_reduction, find_parameter_reduction, random_combo, rees_ideal

GORENSTEIN = "Gorenstein"
WITNESS = "AlmostGorensteinWitness"
NOT_AG = "NotAlmostGorenstein"
INCONCLUSIVE = "Inconclusive"

NOT_CLOSED_WARNING = "not integrally closed: the closed-ideal guarantee does not apply"


def residue_mod_m2(p: Poly) -> Poly:
    """Constant and linear part of p (its class modulo m^2)."""
    return Poly(p.ring, tuple((e, c) for e, c in p.terms if sum(e) <= 1))


def in_m2(p: Poly) -> bool:
    return residue_mod_m2(p).is_zero


def socle_criterion_fires(coeffs) -> bool:
    """The non-almost-Gorenstein test: all four coefficients inside m^2."""
    return all(in_m2(c) for c in coeffs)


@dataclass(frozen=True)
class WitnessTriple:
    """Verified triple for the two witness equalities, with their bases."""

    f: Poly
    g: Poly
    h: Poly
    ij_basis: tuple
    mj_basis: tuple


@dataclass(frozen=True)
class SocleReport:
    """Syzygy data of the socle ideal I = Q:m = (a,b,c)."""

    Q: IdealHandle
    I: IdealHandle
    a: Poly
    b: Poly
    c: Poly
    coeffs: tuple  # (f1, f2, g1, g2)
    residues: tuple  # classes of the four coefficients modulo m^2
    matrix: tuple  # ((f1, f2, x), (g1, g2, y))
    criterion_fires: bool


@dataclass
class AGVerdict:
    kind: str
    I: IdealHandle | None = None
    Q: IdealHandle | None = None
    J: IdealHandle | None = None
    witness: WitnessTriple | None = None
    socle: SocleReport | None = None
    trials_used: int | None = None
    warnings: tuple = ()


def _maximal_ideal(ring: RingCtx) -> IdealHandle:
    return IdealHandle(ring, ring.gens())


def _parameter_pair(Q: IdealHandle):
    gens = [g for g in Q.gens if not g.is_zero]
    if len(gens) != 2:
        raise ValueError("parameter pair (a, b) required")
    return gens[0], gens[1]


def _purified(Q: IdealHandle) -> IdealHandle:
    """m-primary part of Q, rephrasing the failure as a contract error."""
    try:
        return m_primary_part(Q)
    except ValueError:
        raise ValueError("parameter ideal required") from None


def _witness_equalities(I, J, m, a_f, a_g, a_h, lhs_ij=None, lhs_mj=None):
    # both equalities are local at the origin; rhs sits inside lhs by design
    lhs_ij = ideal_product(I, J) if lhs_ij is None else lhs_ij
    lhs_mj = ideal_product(m, J) if lhs_mj is None else lhs_mj
    rhs_ij = ideal_sum(scale_ideal(a_g, J), scale_ideal(a_h, I))
    rhs_mj = ideal_sum(scale_ideal(a_f, J), scale_ideal(a_h, m))
    if not local_equal(lhs_ij, rhs_ij):
        return None
    if not local_equal(lhs_mj, rhs_mj):
        return None
    return tuple(lhs_ij.gb()[0]), tuple(lhs_mj.gb()[0])


def verify_witness_triple(I: IdealHandle, J: IdealHandle, f: Poly, g: Poly, h: Poly) -> bool:
    """Both defining equalities for an explicit candidate triple, from scratch."""
    m = _maximal_ideal(I.ring)
    if not is_member(f, m) or not is_member(g, I) or not is_member(h, J):
        return False
    return _witness_equalities(I, J, m, f, g, h) is not None


def check_witness(I: IdealHandle, Q: IdealHandle, w: WitnessTriple) -> bool:
    """Re-verify a stored witness bit-exactly from fresh handles."""
    fresh_I = IdealHandle(I.ring, I.gens)
    fresh_Q = IdealHandle(Q.ring, Q.gens)
    J = ideal_colon(_purified(fresh_Q), fresh_I)
    m = _maximal_ideal(I.ring)
    if not is_member(w.f, m) or not is_member(w.g, fresh_I) or not is_member(w.h, J):
        return False
    got = _witness_equalities(fresh_I, J, m, w.f, w.g, w.h)
    return got is not None and got == (w.ij_basis, w.mj_basis)


def ag_witness_search(
    I: IdealHandle, Q: IdealHandle, seed: int = 0, trials: int = 32
) -> AGVerdict:
    """Randomized search for the witness triple (h first, then f, then g)."""
    ring = I.ring
    if ring.nvars != 2:
        raise ValueError("two-variable ring required")
    if not is_m_primary(I):
        raise ValueError("m-primary input required")
    a, b = _parameter_pair(Q)
    if not is_reduction((a, b), I):
        raise ValueError("Q is not a reduction of I")
    J = ideal_colon(_purified(Q), I)
    if is_unit_ideal(J):
        return AGVerdict(kind=GORENSTEIN, I=I, Q=Q, J=J)

    m = _maximal_ideal(ring)
    x, y = ring.gens()
    quad = [x * x, x * y, y * y]
    jgens = reduced_generators(J)
    igens = reduced_generators(I)
    lhs_ij = ideal_product(I, J)
    lhs_mj = ideal_product(m, J)
    rng = Random(seed)
    used = 0
    for phase in (0, 1):
        for _ in range(trials):
            used += 1
            h = random_combo(jgens, rng)
            f = x.scale(ring.field.random_nonzero(rng)) + y.scale(
                ring.field.random_nonzero(rng)
            )
            if phase == 1:
                # fallback: allow degree-2 tails on f
                for q in quad:
                    f = f + q.scale(ring.field.random(rng))
            g = random_combo(igens, rng)
            if h.is_zero or g.is_zero:
                continue
            got = _witness_equalities(I, J, m, f, g, h, lhs_ij, lhs_mj)
            if got is None:
                continue
            w = WitnessTriple(f=f, g=g, h=h, ij_basis=got[0], mj_basis=got[1])
            assert check_witness(I, Q, w)
            return AGVerdict(kind=WITNESS, I=I, Q=Q, J=J, witness=w, trials_used=used)
    return AGVerdict(kind=INCONCLUSIVE, I=I, Q=Q, J=J, trials_used=used)


def ag_check(I: IdealHandle, seed: int = 0, trials: int = 32) -> AGVerdict:
    """Full pipeline: find a parameter reduction, then search for a witness."""
    if I.ring.nvars != 2:
        raise ValueError("two-variable ring required")
    if not is_m_primary(I):
        raise ValueError("m-primary input required")
    warnings = []
    try:
        mono = MonoIdeal2.from_polys(I.gens)
    except ValueError:
        mono = None
    if mono is not None and not mono.is_integrally_closed():
        warnings.append(NOT_CLOSED_WARNING)
    pair = find_parameter_reduction(I, seed=seed, trials=trials)
    Q = IdealHandle(I.ring, [pair.a, pair.b])
    verdict = ag_witness_search(I, Q, seed=seed, trials=trials)
    verdict.warnings = tuple(warnings)
    return verdict


# ---------------------------------------------------------------------------
# socle pipeline


def _mu(I: IdealHandle) -> int:
    if all(g.is_homogeneous() for g in I.gens):
        return min_gens(I)
    return len(reduced_generators(I))


def socle_presentation(Q: IdealHandle) -> SocleReport:
    """Syzygy coefficients of the socle ideal I = Q:m over Q = (a,b)."""
    ring = Q.ring
    if ring.nvars != 2:
        raise ValueError("two-variable ring required")
    a, b = _parameter_pair(Q)
    if not (in_m2(a) and in_m2(b)):
        raise ValueError("parameter ideal not inside the square of the maximal ideal")
    m = _maximal_ideal(ring)
    x, y = ring.gens()
    Qp = _purified(Q)
    I = ideal_colon(Qp, m)
    if _mu(I) != 3:
        raise ValueError("socle ideal is not three-generated")
    candidates = sorted(
        reduced_generators(I), key=lambda g: ring.order.key(g.lm())
    )
    c = None
    for cand in candidates:
        if is_member(cand, Qp):
            continue
        if ideal_equal(ideal_sum(Qp, IdealHandle(ring, [cand])), I):
            c = cand
            break
    if c is None:
        raise ValueError("c not found")
    rep_x = normal_form(-(x * c), Q, tracked=True)
    rep_y = normal_form(-(y * c), Q, tracked=True)
    assert rep_x.remainder.is_zero and rep_y.remainder.is_zero
    f1, f2 = rep_x.cofactors
    g1, g2 = rep_y.cofactors
    coeffs = (f1, f2, g1, g2)
    return SocleReport(
        Q=Q,
        I=I,
        a=a,
        b=b,
        c=c,
        coeffs=coeffs,
        residues=tuple(residue_mod_m2(p) for p in coeffs),
        matrix=((f1, f2, x), (g1, g2, y)),
        criterion_fires=socle_criterion_fires(coeffs),
    )


def socle_ag_criterion(Q: IdealHandle, seed: int = 0, trials: int = 32) -> AGVerdict:
    """Decide the property for the socle ideal I = Q:m."""
    ring = Q.ring
    if ring.nvars != 2:
        raise ValueError("two-variable ring required")
    a, b = _parameter_pair(Q)
    if not (in_m2(a) and in_m2(b)):
        # Q:m is a parameter ideal (or the whole ring); Rees algebra Gorenstein
        I = ideal_colon(_purified(Q), _maximal_ideal(ring))
        return AGVerdict(kind=GORENSTEIN, I=I, Q=Q, J=ideal_colon(I, I))
    report = socle_presentation(Q)
    if report.criterion_fires:
        return AGVerdict(kind=NOT_AG, I=report.I, Q=Q, socle=report)
    verdict = ag_witness_search(report.I, Q, seed=seed, trials=trials)
    verdict.socle = report
    return verdict


@dataclass(frozen=True)
class FGHReport:
    """The forms F, G, H presenting the Rees algebra of a socle ideal."""

    socle: SocleReport
    ambient: RingCtx
    F: Poly
    G: Poly
    H: Poly
    c2_coeffs: tuple  # (f, g, h, i, j) with c^2 = a^2 f + b^2 g + ab h + bc i + ca j
    presentation: object
    verified: bool


def socle_FGH(Q: IdealHandle) -> FGHReport:
    """Compute F, G, H and verify (G, H, F) equals the presentation ideal."""
    report = socle_presentation(Q)
    ring = Q.ring
    a, b, c = report.a, report.b, report.c
    I = report.I
    if not is_reduction((a, b), I):
        raise ValueError("I^2 = QI fails for the socle ideal")
    D = IdealHandle(ring, [a * a, b * b, a * b, b * c, c * a])
    rep = normal_form(c * c, D, tracked=True)
    if not rep.remainder.is_zero:
        raise ValueError("c^2 not in QI")
    cf, cg, ch, ci, cj = rep.cofactors

    ambient = RingCtx(ring.names + ("X", "Y", "Z"), ring.field, Grevlex(5))
    lift = lambda p: ambient.poly([(co, e + (0, 0, 0)) for e, co in p.terms])
    X, Y, Z = (ambient.var(i) for i in (2, 3, 4))
    xv, yv = (ambient.var(i) for i in (0, 1))
    F = Z * Z - (
        lift(cf) * X * X
        + lift(cg) * Y * Y
        + lift(ch) * X * Y
        + lift(ci) * Y * Z
        + lift(cj) * Z * X
    )
    f1, f2, g1, g2 = report.coeffs
    G = lift(f1) * X + lift(f2) * Y + xv * Z
    H = lift(g1) * X + lift(g2) * Y + yv * Z
    pres = rees_ideal(I, gens=[a, b, c], tvar_names=("X", "Y", "Z"))
    verified = ideal_equal(IdealHandle(ambient, [G, H, F]), pres.K)
    return FGHReport(
        socle=report,
        ambient=ambient,
        F=F,
        G=G,
        H=H,
        c2_coeffs=rep.cofactors,
        presentation=pres,
        verified=verified,
    )


# ---------------------------------------------------------------------------
# hypersurface variant


@dataclass(frozen=True)
class HypersurfaceReport:
    """Verified data for I = m^l over the ring k[x,y,z]/(f3)."""

    l: int
    f3: Poly
    a: Poly
    b: Poly
    mu: int
    checks: tuple  # names of the verified equalities


def hypersurface_example(l: int, f3: Poly | None = None, pair=None) -> HypersurfaceReport:
    """Check the m^l family over a quadric hypersurface, all modulo (f3)."""
    if l < 1:
        raise ValueError("l must be at least 1")
    if f3 is None:
        ring = RingCtx(("x", "y", "z"))
        xv, yv, zv = ring.gens()
        f3 = xv * xv - yv * zv
    else:
        ring = f3.ring
    if ring.nvars != 3:
        raise ValueError("three-variable ring required")
    if f3.is_zero or not f3.is_homogeneous() or f3.total_degree() != 2:
        raise ValueError("modulus must be homogeneous of degree 2")

    m = _maximal_ideal(ring)
    m2 = ideal_power(m, 2)
    fh = IdealHandle(ring, [f3])

    def mod_equal(A, B):
        # A is always the containing side, so the local test applies
        return local_equal(ideal_sum(A, fh), ideal_sum(B, fh))

    if pair is None:
        found = None
        for i in range(3):
            for j in range(3):
                if i == j:
                    continue
                cand = (ring.var(i), ring.var(j))
                rhs = ideal_product(IdealHandle(ring, list(cand)), m)
                if mod_equal(m2, rhs):
                    found = cand
                    break
            if found:
                break
        if found is None:
            raise ValueError("equalities fail (wrong f3 or a, b): m^2 = (a,b)m")
        a, b = found
    else:
        a, b = pair
        rhs = ideal_product(IdealHandle(ring, [a, b]), m)
        if not mod_equal(m2, rhs):
            raise ValueError("equalities fail (wrong f3 or a, b): m^2 = (a,b)m")

    I = ideal_power(m, l)
    Q = IdealHandle(ring, [a**l, b**l])
    checks = ["m^2 = (a,b)m"]

    if not mod_equal(ideal_power(I, 2), ideal_product(Q, I)):
        raise ValueError("equalities fail (wrong f3 or a, b): I^2 = QI")
    checks.append("I^2 = QI")
    if not ideal_equal(ideal_colon(ideal_sum(Q, fh), I), ideal_sum(I, fh)):
        raise ValueError("equalities fail (wrong f3 or a, b): Q:I = I")
    checks.append("Q:I = I")
    lhs = ideal_power(m, l + 1)
    rhs = ideal_sum(scale_ideal(a, I), scale_ideal(b**l, m))
    if not mod_equal(lhs, rhs):
        raise ValueError(
            "equalities fail (wrong f3 or a, b): m^(l+1) = a m^l + b^l m"
        )
    checks.append("m^(l+1) = a m^l + b^l m")

    mu = min_gens(I, modulus=f3)
    return HypersurfaceReport(l=l, f3=f3, a=a, b=b, mu=mu, checks=tuple(checks))
