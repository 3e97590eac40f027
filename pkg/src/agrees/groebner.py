"""Buchberger engine and the ideal algebra built on top of it.

Bases are reduced, monic, and sorted ascending by leading monomial, so any
two runs over the same ideal and order produce identical output.  Cofactor
tracking is opt-in: when enabled, every basis element and every normal form
carries an explicit representation over the handle's original generators.

Intersection uses one auxiliary variable and a block elimination order;
colon ideals reduce to element colons plus intersection; colength and
minimal generator counts come from the staircase and graded linear algebra.
"""

from __future__ import annotations

import heapq
import itertools
from collections import deque
from dataclasses import dataclass

from .core import (
    BlockOrder,
    Grevlex,
    Poly,
    RingCtx,
    exp_deg,
    exp_div,
    exp_divides,
    exp_lcm,
    exp_mul,
)


# ---------------------------------------------------------------------------
# handles


class IdealHandle:
    """An ideal given by generators; Groebner bases are cached per order."""

    __slots__ = ("ring", "gens", "_cache")

    def __init__(self, ring: RingCtx, gens):
        gens = tuple(gens)
        for g in gens:
            if not isinstance(g, Poly) or g.ring != ring:
                raise ValueError("generators must live in the handle's ring")
        self.ring = ring
        self.gens = gens
        self._cache = {}

    def gb(self, order=None, tracked: bool = False):
        """Reduced monic basis (and cofactor table when tracked)."""
        order = self.ring.order if order is None else order
        key = (order, tracked)
        if key not in self._cache:
            if order == self.ring.order:
                ring2, gens2 = self.ring, list(self.gens)
            else:
                ring2 = self.ring.with_order(order)
                gens2 = [ring2.poly(g.terms) for g in self.gens]
            basis, reps = _buchberger(ring2, gens2, tracked)
            self._cache[key] = (tuple(basis), reps)
        return self._cache[key]

    def __repr__(self):
        return f"IdealHandle({list(self.gens)})"


def ideal(ring: RingCtx, gens) -> IdealHandle:
    return IdealHandle(ring, gens)


@dataclass(frozen=True)
class Representation:
    """remainder = poly - sum(cofactors[i] * gens[i]); remainder irreducible."""

    poly: Poly
    gens: tuple
    cofactors: tuple
    remainder: Poly

    def holds(self) -> bool:
        acc = self.remainder
        for c, g in zip(self.cofactors, self.gens):
            acc = acc + c * g
        return acc == self.poly


# ---------------------------------------------------------------------------
# engine


def _reduce_full(f: Poly, basis, tracked: bool):
    """Normal form against monic divisors; cofactors parallel to basis."""
    ring = f.ring
    field = ring.field
    cof = [ring.zero() for _ in basis] if tracked else None
    rem_terms = []
    work = f
    while not work.is_zero:
        e, c = work.terms[0]
        for k, g in enumerate(basis):
            if exp_divides(g.lm(), e):
                q = exp_div(e, g.lm())
                qc = field.div(c, g.lc())
                work = work - g.mul_term(qc, q)
                if tracked:
                    cof[k] = cof[k] + ring.monomial(q, qc)
                break
        else:
            # leading term irreducible; later leads are strictly smaller,
            # so collected terms stay sorted
            rem_terms.append((e, c))
            work = Poly(ring, work.terms[1:])
    return Poly(ring, tuple(rem_terms)), cof


def _buchberger(ring: RingCtx, gens, tracked: bool):
    """Reduced monic Groebner basis, normal pair selection, both criteria."""
    field = ring.field
    ngens = len(gens)
    basis = []
    reps = [] if tracked else None

    def append(p: Poly, rep):
        c = field.inv(p.lc())
        basis.append(p.scale(c))
        if tracked:
            reps.append([r.scale(c) for r in rep])

    for idx, f in enumerate(gens):
        if f.is_zero:
            continue
        rep = None
        if tracked:
            rep = [ring.zero()] * ngens
            rep[idx] = ring.one()
        append(f, rep)

    okey = ring.order.key
    pairs = []
    for j in range(len(basis)):
        for i in range(j):
            lcm = exp_lcm(basis[i].lm(), basis[j].lm())
            heapq.heappush(pairs, (exp_deg(lcm), okey(lcm), i, j))
    done = set()

    while pairs:
        _, _, i, j = heapq.heappop(pairs)
        if (i, j) in done:
            continue
        done.add((i, j))
        li, lj = basis[i].lm(), basis[j].lm()
        lcm = exp_lcm(li, lj)
        if exp_mul(li, lj) == lcm:
            continue  # coprime leads: S-pair reduces to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if (
                exp_divides(basis[k].lm(), lcm)
                and (min(i, k), max(i, k)) in done
                and (min(j, k), max(j, k)) in done
            ):
                skip = True
                break
        if skip:
            continue
        s = basis[i].mul_term(field.one, exp_div(lcm, li)) - basis[j].mul_term(
            field.one, exp_div(lcm, lj)
        )
        if tracked:
            srep = [
                a.mul_term(field.one, exp_div(lcm, li))
                - b.mul_term(field.one, exp_div(lcm, lj))
                for a, b in zip(reps[i], reps[j])
            ]
        rem, cof = _reduce_full(s, basis, tracked)
        if rem.is_zero:
            continue
        rep = None
        if tracked:
            rep = list(srep)
            for k, q in enumerate(cof):
                if q.is_zero:
                    continue
                rep = [r - q * rk for r, rk in zip(rep, reps[k])]
        t = len(basis)
        append(rem, rep)
        for i2 in range(t):
            lcm = exp_lcm(basis[i2].lm(), basis[t].lm())
            heapq.heappush(pairs, (exp_deg(lcm), okey(lcm), i2, t))

    return _reduce_basis(ring, basis, reps, tracked)


def _reduce_basis(ring: RingCtx, basis, reps, tracked: bool):
    okey = ring.order.key
    order_idx = sorted(range(len(basis)), key=lambda k: okey(basis[k].lm()))
    kept = []
    for k in order_idx:
        lm = basis[k].lm()
        if any(exp_divides(basis[t].lm(), lm) for t in kept):
            continue
        kept.append(k)
    polys = [basis[k] for k in kept]
    vecs = [reps[k] for k in kept] if tracked else None

    changed = True
    while changed:
        changed = False
        for k in range(len(polys)):
            others = polys[:k] + polys[k + 1 :]
            rem, cof = _reduce_full(polys[k], others, tracked)
            if rem != polys[k]:
                changed = True
                polys[k] = rem
                if tracked:
                    vec = list(vecs[k])
                    for t, q in enumerate(cof):
                        if q.is_zero:
                            continue
                        src = vecs[t] if t < k else vecs[t + 1]
                        vec = [r - q * s for r, s in zip(vec, src)]
                    vecs[k] = vec
    if tracked:
        vecs = [tuple(v) for v in vecs]
    return polys, vecs


# ---------------------------------------------------------------------------
# basic queries


def groebner_basis(I: IdealHandle, order=None) -> list:
    return list(I.gb(order)[0])


def normal_form(f: Poly, I: IdealHandle, order=None, tracked: bool = False):
    """Canonical remainder of f modulo I; a Representation when tracked."""
    basis, reps = I.gb(order, tracked)
    ring = basis[0].ring if basis else I.ring
    f2 = f if f.ring == ring else ring.poly(f.terms)
    rem, cof = _reduce_full(f2, basis, tracked)
    back = I.ring
    rem_out = rem if rem.ring == back else back.poly(rem.terms)
    if not tracked:
        return rem_out
    orig = [back.zero()] * len(I.gens)
    for k, q in enumerate(cof):
        if q.is_zero:
            continue
        for t, r in enumerate(reps[k]):
            if r.is_zero:
                continue
            prod = q * r
            orig[t] = orig[t] + (prod if prod.ring == back else back.poly(prod.terms))
    return Representation(
        poly=f if f.ring == back else back.poly(f.terms),
        gens=I.gens,
        cofactors=tuple(orig),
        remainder=rem_out,
    )


def is_member(f: Poly, I: IdealHandle) -> bool:
    return normal_form(f, I).is_zero


def ideal_contains(I: IdealHandle, J: IdealHandle) -> bool:
    """I contains J."""
    return all(is_member(g, I) for g in J.gens if not g.is_zero)


def ideal_equal(I: IdealHandle, J: IdealHandle) -> bool:
    return list(I.gb()[0]) == list(J.gb()[0])


def is_zero_ideal(I: IdealHandle) -> bool:
    return not I.gb()[0]


def is_unit_ideal(I: IdealHandle) -> bool:
    basis = I.gb()[0]
    return len(basis) == 1 and basis[0].is_constant()


# ---------------------------------------------------------------------------
# sums, products, pruning


def _top_reduces_to_zero(g: Poly, others) -> bool:
    work = g
    while not work.is_zero:
        e, c = work.terms[0]
        hit = False
        for h in others:
            if exp_divides(h.lm(), e):
                work = work - h.mul_term(work.ring.field.div(c, h.lc()), exp_div(e, h.lm()))
                hit = True
                break
        if not hit:
            return False
    return True


def _prune_gens(ring: RingCtx, gens) -> list:
    """Drop generators that visibly lie in the span of the rest.

    Only reductions witnessed against the remaining generator list are
    used, so the ideal is unchanged by construction.
    """
    live = [g for g in gens if not g.is_zero]
    live.sort(key=lambda g: ring.order.key(g.lm()), reverse=True)
    out = list(live)
    for g in live:
        rest = [h for h in out if h is not g]
        if rest and _top_reduces_to_zero(g, rest):
            out = rest
    return out


def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    if I.ring != J.ring:
        raise ValueError("mixed-ring ideal arithmetic")
    return IdealHandle(I.ring, _prune_gens(I.ring, I.gens + J.gens))


def ideal_product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    if I.ring != J.ring:
        raise ValueError("mixed-ring ideal arithmetic")
    prods = [
        f * g
        for f in I.gens
        for g in J.gens
        if not f.is_zero and not g.is_zero
    ]
    return IdealHandle(I.ring, _prune_gens(I.ring, prods))


def ideal_power(I: IdealHandle, k: int) -> IdealHandle:
    if k < 0:
        raise ValueError("negative power")
    if k == 0:
        return IdealHandle(I.ring, [I.ring.one()])
    out = I
    for _ in range(k - 1):
        out = ideal_product(out, I)
    return out


def scale_ideal(g: Poly, I: IdealHandle) -> IdealHandle:
    """The product g * I for a single polynomial g."""
    return IdealHandle(I.ring, [g * f for f in I.gens if not f.is_zero] or [I.ring.zero()])


# ---------------------------------------------------------------------------
# elimination, intersection, colon


def _aux_name(names) -> str:
    name = "@u"
    while name in names:
        name += "u"
    return name


def _lift(p: Poly, ring2: RingCtx, k: int) -> Poly:
    zeros = (0,) * k
    return ring2.poly([(c, zeros + e) for e, c in p.terms])


def _drop(p: Poly, ring2: RingCtx, k: int) -> Poly:
    return ring2.poly([(c, e[k:]) for e, c in p.terms])


def eliminate(I: IdealHandle, k: int) -> IdealHandle:
    """Intersect with the subring on variables k..n-1."""
    ring = I.ring
    if not 0 < k < ring.nvars:
        raise ValueError("can only eliminate a proper leading block")
    basis, _ = I.gb(BlockOrder(ring.nvars, k))
    ring2 = RingCtx(ring.names[k:], ring.field, Grevlex(ring.nvars - k))
    keep = [g for g in basis if all(e == 0 for e in g.lm()[:k])]
    return IdealHandle(ring2, [_drop(g, ring2, k) for g in keep])


def ideal_intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    if I.ring != J.ring:
        raise ValueError("mixed-ring ideal arithmetic")
    ring = I.ring
    n = ring.nvars
    ring2 = RingCtx(
        (_aux_name(ring.names),) + ring.names, ring.field, BlockOrder(n + 1, 1)
    )
    u = ring2.var(0)
    one = ring2.one()
    gens2 = [u * _lift(f, ring2, 1) for f in I.gens if not f.is_zero]
    gens2 += [(one - u) * _lift(g, ring2, 1) for g in J.gens if not g.is_zero]
    if not gens2:
        return IdealHandle(ring, [ring.zero()])
    basis, _ = IdealHandle(ring2, gens2).gb()
    keep = [g for g in basis if g.lm()[0] == 0]
    return IdealHandle(ring, [_drop(g, ring, 1) for g in keep])


def poly_div_exact(f: Poly, g: Poly) -> Poly:
    """Quotient f/g when g divides f exactly."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    ring = f.ring
    field = ring.field
    quot = ring.zero()
    work = f
    while not work.is_zero:
        e, c = work.terms[0]
        if not exp_divides(g.lm(), e):
            raise ValueError("inexact polynomial division")
        q = exp_div(e, g.lm())
        qc = field.div(c, g.lc())
        quot = quot + ring.monomial(q, qc)
        work = work - g.mul_term(qc, q)
    return quot


def ideal_colon(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """The quotient I : J, via element colons and intersection."""
    if I.ring != J.ring:
        raise ValueError("mixed-ring ideal arithmetic")
    ring = I.ring
    nz = [g for g in J.gens if not g.is_zero]
    if not nz:
        raise ValueError("colon by zero ideal")
    out = None
    for g in nz:
        inter = ideal_intersect(I, IdealHandle(ring, [g]))
        part = IdealHandle(ring, [poly_div_exact(h, g) for h in inter.gens])
        out = part if out is None else ideal_intersect(out, part)
    return out


# ---------------------------------------------------------------------------
# staircase invariants


def is_m_primary(I: IdealHandle) -> bool:
    """Reduced basis shows a pure power of every variable (finite colength)."""
    basis = I.gb()[0]
    if not basis:
        return False
    n = I.ring.nvars
    for i in range(n):
        if not any(
            all(e == 0 for j, e in enumerate(g.lm()) if j != i) for g in basis
        ):
            return False
    return True


def m_primary_part(I: IdealHandle) -> IdealHandle:
    """Smallest m-primary ideal with the same localization at the origin.

    Random combinations of generators usually vanish at extra points away
    from the origin, so ``(a, b)`` as a polynomial ideal is strictly smaller
    than the contraction of its localization.  The chain ``I + m^K`` is
    eventually constant exactly when that localization has finite colength,
    and its stable value is the contraction.  Raises ValueError when no
    stabilization happens within the Bezout-style degree bound.
    """
    live = [g for g in I.gens if not g.is_zero]
    if not live:
        raise ValueError("not m-primary at the origin")
    # for cones (monomial or homogeneous gens) finite colength already means
    # the support is exactly the origin, so the ideal is its own local part;
    # inhomogeneous zero-dimensional ideals may still have points elsewhere
    if all(g.is_monomial() for g in live) or all(g.is_homogeneous() for g in live):
        if is_m_primary(I):
            return I
        raise ValueError("not m-primary at the origin")
    ring = I.ring
    degs = sorted((g.total_degree() for g in live), reverse=True)
    if len(degs) == 1:
        degs.append(degs[0])
    cap = max(8, degs[0] * degs[1] + 4)
    maxideal = IdealHandle(ring, list(ring.gens()))
    power = maxideal
    prev = None
    prev_basis = None
    for _ in range(cap):
        cur = ideal_sum(I, power)
        basis = tuple(cur.gb()[0])
        if prev_basis is not None and basis == prev_basis:
            return prev
        prev, prev_basis = cur, basis
        power = ideal_product(power, maxideal)
    raise ValueError("not m-primary at the origin")


def local_equal(lhs: IdealHandle, rhs: IdealHandle) -> bool:
    """Certified equality of localizations at the origin.

    Decides whether lhs and rhs generate the same ideal after localizing at
    (x_1, ..., x_n) by testing ``lhs == rhs + m*lhs`` globally: a True answer
    forces rhs to contain lhs locally by Nakayama, and whenever lhs is
    m-primary the test is also complete, because both comparands are then
    m-primary and m-primary ideals are determined by their localization.
    Intended for ``rhs`` built from members of ``lhs``.
    """
    if lhs.ring != rhs.ring:
        raise ValueError("mixed-ring ideal arithmetic")
    maxideal = IdealHandle(lhs.ring, list(lhs.ring.gens()))
    probe = ideal_sum(rhs, ideal_product(maxideal, lhs))
    return ideal_equal(lhs, probe)


def vdim(I: IdealHandle) -> int:
    """k-dimension of the quotient ring (number of standard monomials)."""
    if not is_m_primary(I):
        raise ValueError("infinite colength")
    lms = [g.lm() for g in I.gb()[0]]
    n = I.ring.nvars
    origin = (0,) * n
    seen = {origin}
    queue = deque([origin])
    count = 0
    while queue:
        e = queue.popleft()
        if any(exp_divides(lm, e) for lm in lms):
            continue
        count += 1
        for i in range(n):
            e2 = e[:i] + (e[i] + 1,) + e[i + 1 :]
            if e2 not in seen:
                seen.add(e2)
                queue.append(e2)
    return count


# ---------------------------------------------------------------------------
# graded minimal generators


def _monomials(n: int, d: int):
    """All exponent tuples of total degree d, deterministic order."""
    if n == 1:
        yield (d,)
        return
    for head in range(d, -1, -1):
        for tail in _monomials(n - 1, d - head):
            yield (head,) + tail


def _rank(rows, field) -> int:
    zero = field.zero
    pivots = []  # (col, normalized row)
    rank = 0
    for row in rows:
        r = list(row)
        for col, prow in pivots:
            c = r[col]
            if c != zero:
                r = [field.sub(a, field.mul(c, b)) for a, b in zip(r, prow)]
        for col, c in enumerate(r):
            if c != zero:
                inv = field.inv(c)
                pivots.append((col, [field.mul(a, inv) for a in r]))
                rank += 1
                break
    return rank


def _degree_rows(gens, d: int, ring: RingCtx, min_mult_deg: int, index: dict):
    rows = []
    n = ring.nvars
    for g in gens:
        dg = g.total_degree()
        if d - dg < min_mult_deg:
            continue
        for m in _monomials(n, d - dg):
            prod = g.mul_term(ring.field.one, m)
            row = [ring.field.zero] * len(index)
            for e, c in prod.terms:
                row[index[e]] = c
            rows.append(row)
    return rows


def min_gens(I: IdealHandle, modulus: Poly | None = None) -> int:
    """Minimal generator count of a graded ideal, optionally modulo (modulus).

    Counts sum over generator degrees d of
    dim (I + (f))_d - dim (m*I + (f))_d.
    """
    ring = I.ring
    gens = [g for g in I.gens if not g.is_zero]
    if not gens:
        return 0
    if any(not g.is_homogeneous() for g in gens):
        raise ValueError("graded input required")
    extra = []
    if modulus is not None:
        if modulus.is_zero or not modulus.is_homogeneous():
            raise ValueError("graded input required")
        extra = [modulus]
    total = 0
    for d in sorted({g.total_degree() for g in gens}):
        index = {e: i for i, e in enumerate(_monomials(ring.nvars, d))}
        high = _degree_rows(gens, d, ring, 0, index) + _degree_rows(
            extra, d, ring, 0, index
        )
        low = _degree_rows(gens, d, ring, 1, index) + _degree_rows(
            extra, d, ring, 0, index
        )
        total += _rank(high, ring.field) - _rank(low, ring.field)
    return total


def reduced_generators(I: IdealHandle) -> list:
    """Inclusion-minimal generating subset, scanning leads descending."""
    ring = I.ring
    live = [g for g in I.gens if not g.is_zero]
    live.sort(key=lambda g: ring.order.key(g.lm()), reverse=True)
    out = list(live)
    for g in live:
        if len(out) == 1:
            break
        rest = [h for h in out if h is not g]
        if is_member(g, IdealHandle(ring, rest)):
            out = rest
    result = [g.monic() for g in out]
    assert ideal_equal(IdealHandle(ring, result), I)
    return result
