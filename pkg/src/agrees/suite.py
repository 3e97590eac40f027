"""End-to-end acceptance checks over the published example families.

Each criterion is one entry with a frozen expected outcome.  The frozen
values live in EXPECTED so a harness self-test can tamper with exactly one
of them and watch the matching entry (and only that entry) fail.  Budgets
are wall-clock seconds per sub-case and are enforced only over the default
prime field; rational-field runs check the same algebra but Fraction
arithmetic carries no timing promise.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from time import perf_counter

from .core import GF32003, PrimeField, RingCtx
from .groebner import (
    IdealHandle,
    ideal_colon,
    ideal_equal,
    ideal_intersect,
    ideal_power,
    ideal_product,
    ideal_sum,
    is_m_primary,
    min_gens,
)
from .monomial import MonoIdeal2
from .rees import find_joint_reduction, joint_reduction_verify, reduction_number
from .agcheck import (
    GORENSTEIN,
    NOT_AG,
    WITNESS,
    ag_check,
    hypersurface_example,
    socle_FGH,
    socle_ag_criterion,
    verify_witness_triple,
)

# frozen expected values; tampering any one must fail exactly one entry
EXPECTED = {
    "colon-power-offset": 1,  # Q:I = m^(m - offset) in the colon family
    "witness-boundary": 2,  # dichotomy: witness iff n equals this
    "reduction-number": 2,  # three-variable example
    "three-var-mu": 4,
    "hypersurface-mu-step": 2,  # mu = step*l + 1
}


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    passed: bool
    detail: str
    elapsed: float  # seconds, whole entry
    budget: float | None  # seconds per sub-case, None when untimed


@dataclass(frozen=True)
class SuiteReport:
    field_name: str
    seed: int
    entries: tuple

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)


def _xy(field) -> RingCtx:
    return RingCtx(("x", "y"), field)


def _as_mono(handle: IdealHandle) -> MonoIdeal2:
    return MonoIdeal2.from_polys(list(handle.gb()[0]))


def _random_closed(seed: int) -> MonoIdeal2:
    """Newton closure of a seeded random proper m-primary monomial ideal."""
    rng = Random(seed)
    pts = {(rng.randint(1, 8), 0), (0, rng.randint(1, 8))}
    for _ in range(rng.randint(2, 5)):
        p = (rng.randint(0, 8), rng.randint(0, 8))
        if p != (0, 0):
            pts.add(p)
    return MonoIdeal2(sorted(pts)).closure()

def _random_mono(rng: Random, bound: int) -> MonoIdeal2:
    pts = {(rng.randint(1, bound), 0), (0, rng.randint(1, bound))}
    for _ in range(rng.randint(1, 4)):
        p = (rng.randint(0, bound), rng.randint(0, bound))
        if p != (0, 0):
            pts.add(p)
    return MonoIdeal2(sorted(pts))


def _random_form(ring: RingCtx, rng: Random, d: int):
    out = ring.zero()
    for i in range(d + 1):
        out = out + ring.monomial((i, d - i), ring.field.random_nonzero(rng))
    return out


# --- the ten criteria -------------------------------------------------------


def _c01_colon_family(field, seed, expected):
    R = _xy(field)
    x, y = R.gens()
    mh = IdealHandle(R, [x, y])
    off = expected["colon-power-offset"]
    worst = 0.0
    for mm in range(2, 6):
        for nn in range(mm, 6):
            t0 = perf_counter()
            Q = IdealHandle(R, [x**mm, y**nn])
            I = ideal_sum(IdealHandle(R, [x**mm]), ideal_power(mh, nn))
            J = ideal_colon(Q, I)
            if not ideal_equal(J, ideal_power(mh, mm - off)):
                return False, f"(m,n)=({mm},{nn}): Q:I != m^{mm - off}", worst
            if not verify_witness_triple(I, J, x, x**mm, y ** (mm - 1)):
                return False, f"(m,n)=({mm},{nn}): triple (x, x^m, y^(m-1)) fails", worst
            worst = max(worst, perf_counter() - t0)
    return True, "10 pairs: colon and explicit triple verified", worst


def _c02_dichotomy(field, seed, expected):
    R = _xy(field)
    x, y = R.gens()
    boundary = expected["witness-boundary"]
    worst = 0.0
    for nn in range(2, 7):
        for mm in range(nn, 7):
            t0 = perf_counter()
            v = socle_ag_criterion(IdealHandle(R, [x**mm, y**nn]), seed=seed)
            want = WITNESS if nn == boundary else NOT_AG
            if v.kind != want:
                return False, f"(m,n)=({mm},{nn}): {v.kind}, wanted {want}", worst
            worst = max(worst, perf_counter() - t0)
    return True, "15 pairs: witness iff n=2", worst


def _c03_deep_pairs(field, seed, expected):
    R = _xy(field)
    worst = 0.0
    for i in range(10):
        rng = Random(seed * 1000 + i)
        t0 = perf_counter()
        while True:
            a = _random_form(R, rng, rng.randint(3, 5))
            b = _random_form(R, rng, rng.randint(3, 5))
            Q = IdealHandle(R, [a, b])
            if is_m_primary(Q):
                break
        v = socle_ag_criterion(Q, seed=seed)
        if v.kind != NOT_AG:
            return False, f"pair {i}: {v.kind}", worst
        worst = max(worst, perf_counter() - t0)
    return True, "10 random pairs in m^3: all NotAlmostGorenstein", worst


def _c04_closed_corpus(field, seed, expected):
    R = _xy(field)
    worst = 0.0
    kinds = {GORENSTEIN: 0, WITNESS: 0}
    for i in range(20):
        C = _random_closed(seed * 1000 + i)
        gens = [R.monomial(e) for e in C.gens]
        t0 = perf_counter()
        v = ag_check(IdealHandle(R, gens), seed=seed, trials=32)
        if v.kind not in kinds:
            return False, f"ideal {i} {C.gens}: {v.kind}", worst
        kinds[v.kind] += 1
        worst = max(worst, perf_counter() - t0)
    detail = f"20 closures: {kinds[GORENSTEIN]} Gorenstein, {kinds[WITNESS]} witnesses"
    return True, detail, worst


def _c05_three_variables(field, seed, expected):
    R = RingCtx(("x", "y", "z"), field)
    x, y, z = R.gens()
    t0 = perf_counter()
    I = IdealHandle(R, [x * x * y, y * y * z, z * z * x, x * y * z])
    Q = IdealHandle(R, [x * x * y, y * y * z, z * z * x])
    r = reduction_number(Q, I, cap=10)
    if r != expected["reduction-number"]:
        return False, f"reduction number {r}", perf_counter() - t0
    mu = min_gens(I)
    if mu != expected["three-var-mu"]:
        return False, f"mu {mu}", perf_counter() - t0
    return True, f"reduction number {r}, mu {mu}", perf_counter() - t0


def _c06_hypersurface(field, seed, expected):
    R = RingCtx(("x", "y", "z"), field)
    x, y, z = R.gens()
    f3 = x * x - y * z
    step = expected["hypersurface-mu-step"]
    worst = 0.0
    for l in (1, 2, 3):
        t0 = perf_counter()
        rep = hypersurface_example(l, f3=f3)
        if (str(rep.a), str(rep.b)) != ("y", "z"):
            return False, f"l={l}: pair ({rep.a}, {rep.b})", worst
        if rep.mu != step * l + 1:
            return False, f"l={l}: mu {rep.mu}, wanted {step * l + 1}", worst
        if len(rep.checks) != 4:
            return False, f"l={l}: only {len(rep.checks)} equalities verified", worst
        worst = max(worst, perf_counter() - t0)
    return True, "l=1,2,3: mu 3,5,7 and all equalities mod f3", worst


def _c07_presentation(field, seed, expected):
    R = _xy(field)
    x, y = R.gens()
    worst = 0.0
    for nn in range(2, 5):
        for mm in range(nn, 5):
            t0 = perf_counter()
            rep = socle_FGH(IdealHandle(R, [x**mm, y**nn]))
            if not rep.verified:
                return False, f"(m,n)=({mm},{nn}): (G,H,F) != presentation ideal", worst
            worst = max(worst, perf_counter() - t0)
    return True, "6 pairs: (G, H, F) matches the presentation ideal", worst


def _c08_closed_colons(field, seed, expected):
    R = _xy(field)
    x, y = R.gens()
    mh = IdealHandle(R, [x, y])
    worst = 0.0
    cases = []
    for l in range(1, 6):
        cases.append((f"m^{l}", IdealHandle(R, [x**l, y**l]), ideal_power(mh, l)))
    for mm in range(2, 6):
        for nn in range(mm, 6):
            Q = IdealHandle(R, [x**mm, y**nn])
            I = ideal_sum(IdealHandle(R, [x**mm]), ideal_power(mh, nn))
            cases.append((f"(m,n)=({mm},{nn})", Q, I))
    for name, Q, I in cases:
        t0 = perf_counter()
        J = _as_mono(ideal_colon(Q, I))
        if not J.is_integrally_closed():
            return False, f"{name}: Q:I not integrally closed", worst
        worst = max(worst, perf_counter() - t0)
    return True, f"{len(cases)} colon ideals all integrally closed", worst


def _c09_joint_reductions(field, seed, expected):
    R = _xy(field)
    worst = 0.0
    for i in range(25):
        rng = Random(seed * 1000 + i)
        I_m = _random_mono(rng, 6).closure()
        J_m = _random_mono(rng, 6).closure()
        I = IdealHandle(R, [R.monomial(e) for e in I_m.gens])
        J = IdealHandle(R, [R.monomial(e) for e in J_m.gens])
        t0 = perf_counter()
        jr = find_joint_reduction(I, J, seed=seed, trials=32)
        fresh_I = IdealHandle(R, I.gens)
        fresh_J = IdealHandle(R, J.gens)
        if not joint_reduction_verify(jr.a, fresh_I, jr.b, fresh_J):
            return False, f"pair {i}: recheck failed", worst
        worst = max(worst, perf_counter() - t0)
    return True, "25 closed pairs: joint reduction found and rechecked", worst


def _c10_oracle_agreement(field, seed, expected):
    # budget for this entry is the total, so the worst-case slot gets it all
    R = _xy(field)
    t_all = perf_counter()

    def lift(M: MonoIdeal2) -> IdealHandle:
        return IdealHandle(R, [R.monomial(e) for e in M.gens])

    for i in range(100):
        rng = Random(seed * 100003 + i)
        A, B = _random_mono(rng, 6), _random_mono(rng, 6)
        ha, hb = lift(A), lift(B)
        total = perf_counter() - t_all
        if _as_mono(ideal_colon(ha, hb)).gens != A.colon(B).gens:
            return False, f"pair {i}: colon mismatch", total
        if _as_mono(ideal_product(ha, hb)).gens != (A * B).gens:
            return False, f"pair {i}: product mismatch", total
        if _as_mono(ideal_intersect(ha, hb)).gens != A.intersect(B).gens:
            return False, f"pair {i}: intersection mismatch", total
        if ideal_equal(ha, hb) != (A.gens == B.gens):
            return False, f"pair {i}: equality mismatch", total
    for i in range(50):
        rng = Random(seed * 100003 + 1000 + i)
        M = _random_mono(rng, 6)
        C = M.closure()
        ma, mb = M.max_exponents()
        for ia in range(ma + 1):
            for jb in range(mb + 1):
                if C.contains((ia, jb)) != M.closure_oracle((ia, jb)):
                    total = perf_counter() - t_all
                    return False, f"ideal {i}: closure mismatch at ({ia},{jb})", total
    total = perf_counter() - t_all
    return True, "100 operation pairs and 50 closures agree", total


def run_suite(field=GF32003, seed: int = 0, tamper: str | None = None) -> SuiteReport:
    expected = dict(EXPECTED)
    if tamper is not None:
        if tamper not in expected:
            raise ValueError(f"unknown tamper key: {tamper}")
        expected[tamper] = expected[tamper] + 1
    timed = isinstance(field, PrimeField)
    checks = [
        ("01 colon family and explicit triple", _c01_colon_family, 1.0),
        ("02 socle dichotomy", _c02_dichotomy, 2.0),
        ("03 random pairs inside m^3", _c03_deep_pairs, 5.0),
        ("04 integrally closed monomial corpus", _c04_closed_corpus, 10.0),
        ("05 three-variable reduction number", _c05_three_variables, 2.0),
        ("06 hypersurface family", _c06_hypersurface, 5.0),
        ("07 socle presentation (G, H, F)", _c07_presentation, 10.0),
        ("08 colon ideals integrally closed", _c08_closed_colons, 1.0),
        ("09 joint reductions of closed pairs", _c09_joint_reductions, 5.0),
        ("10 monomial oracle agreement", _c10_oracle_agreement, 60.0),
    ]
    entries = []
    for name, fn, budget in checks:
        t0 = perf_counter()
        try:
            ok, detail, worst = fn(field, seed, expected)
        except Exception as exc:  # failures are data, not crashes
            ok, detail, worst = False, f"error: {exc}", 0.0
        elapsed = perf_counter() - t0
        if ok and timed and worst > budget:
            ok = False
            detail = f"over budget: worst case {worst:.2f}s > {budget:.0f}s"
        entries.append(
            SuiteEntry(name=name, passed=ok, detail=detail, elapsed=elapsed, budget=budget)
        )
    fname = field.name if hasattr(field, "name") else str(field)
    return SuiteReport(field_name=fname, seed=seed, entries=tuple(entries))
