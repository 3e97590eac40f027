"""Monomial ideals in two variables as exponent antichains.

A monomial ideal in k[x,y] is stored as its unique minimal generating set,
an antichain of exponent pairs sorted by x-degree.  All ideal operations
here are combinatorial, independent of the Groebner route, so the two can
cross-validate each other.  Integral closure goes through the Newton
polyhedron with exact integer cross products; a power-membership oracle
(x^a y^b integral over I iff (ka,kb) lands in I^k) double-checks it.

The empty antichain stands for the zero ideal.
"""

from __future__ import annotations


def _minimalize(pairs) -> tuple:
    """Antichain of the given pairs under componentwise divisibility."""
    out = []
    best_b = None
    for a, b in sorted(set(pairs)):
        if best_b is None or b < best_b:
            out.append((a, b))
            best_b = b
    return tuple(out)


def _cross(u, v) -> int:
    return u[0] * v[1] - u[1] * v[0]


class MonoIdeal2:
    """Monomial ideal in k[x,y], canonical minimal generators."""

    __slots__ = ("gens", "_powers")

    def __init__(self, pairs):
        pairs = [(int(a), int(b)) for a, b in pairs]
        if any(a < 0 or b < 0 for a, b in pairs):
            raise ValueError("negative exponent")
        self.gens = _minimalize(pairs)
        self._powers = None

    @classmethod
    def from_polys(cls, gens) -> "MonoIdeal2":
        """Extract exponents from monomial polynomials in a 2-variable ring."""
        pairs = []
        for g in gens:
            if g.is_zero:
                continue
            if not g.is_monomial() or len(g.lm()) != 2:
                raise ValueError("monomial ideal required")
            pairs.append(g.lm())
        return cls(pairs)

    def to_polys(self, ring):
        return [ring.monomial(e) for e in self.gens]

    # -- membership and colength

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == ((0, 0),)

    def contains(self, pair) -> bool:
        a, b = pair
        if a < 0 or b < 0:
            return False
        # gens sorted by x-degree ascending, y-degree strictly descending:
        # the only candidate divisor is the one with largest x-degree <= a
        best = None
        for ga, gb in self.gens:
            if ga > a:
                break
            best = gb
        return best is not None and best <= b

    def contains_ideal(self, other: "MonoIdeal2") -> bool:
        return all(self.contains(e) for e in other.gens)

    def is_m_primary(self) -> bool:
        if not self.gens:
            return False
        return self.gens[0][0] == 0 and self.gens[-1][1] == 0

    def max_exponents(self) -> tuple:
        if not self.gens:
            raise ValueError("zero ideal")
        return (max(a for a, _ in self.gens), max(b for _, b in self.gens))

    def colength(self) -> int:
        """Number of standard monomials (k-dimension of the quotient)."""
        if not self.is_m_primary():
            raise ValueError("infinite colength")
        total = 0
        idx = 0
        for a in range(self.gens[-1][0]):
            while idx + 1 < len(self.gens) and self.gens[idx + 1][0] <= a:
                idx += 1
            total += self.gens[idx][1]
        return total

    # -- ideal algebra

    def __add__(self, other: "MonoIdeal2") -> "MonoIdeal2":
        return MonoIdeal2(self.gens + other.gens)

    def __mul__(self, other: "MonoIdeal2") -> "MonoIdeal2":
        return MonoIdeal2(
            [(a + c, b + d) for a, b in self.gens for c, d in other.gens]
        )

    def power(self, k: int) -> "MonoIdeal2":
        if k < 0:
            raise ValueError("negative power")
        if k == 0:
            return MonoIdeal2([(0, 0)])
        if self.is_zero:
            return self
        self._grow_powers(k)
        return self._powers[k - 1]

    def _grow_powers(self, k: int):
        if self._powers is None:
            self._powers = [self]
        while len(self._powers) < k:
            self._powers.append(self._powers[-1] * self)

    def intersect(self, other: "MonoIdeal2") -> "MonoIdeal2":
        return MonoIdeal2(
            [
                (max(a, c), max(b, d))
                for a, b in self.gens
                for c, d in other.gens
            ]
        )

    def colon(self, other: "MonoIdeal2") -> "MonoIdeal2":
        if other.is_zero:
            raise ValueError("colon by zero ideal")
        out = None
        for c, d in other.gens:
            part = MonoIdeal2(
                [(max(a - c, 0), max(b - d, 0)) for a, b in self.gens]
            )
            out = part if out is None else out.intersect(part)
        return out

    def __eq__(self, other):
        return isinstance(other, MonoIdeal2) and other.gens == self.gens

    def __hash__(self):
        return hash(self.gens)

    # -- Newton polyhedron

    def _hull(self) -> list:
        """Hull vertices, x-degree ascending (membership-test form)."""
        hull = []
        for p in self.gens:
            while len(hull) >= 2:
                u = (hull[-1][0] - hull[-2][0], hull[-1][1] - hull[-2][1])
                v = (p[0] - hull[-1][0], p[1] - hull[-1][1])
                if _cross(u, v) <= 0:
                    hull.pop()
                else:
                    break
            hull.append(p)
        return hull

    def newton_vertices(self) -> list:
        """Hull vertex chain, x-degree descending; m-primary input only."""
        if not self.is_m_primary():
            raise ValueError("not m-primary (unbounded polygon)")
        return list(reversed(self._hull()))

    def newton_contains(self, pair) -> bool:
        a, b = pair
        hull = self._hull()
        if not hull or a < hull[0][0] or b < hull[-1][1]:
            return False
        for p, q in zip(hull, hull[1:]):
            d = (q[0] - p[0], q[1] - p[1])
            if _cross(d, (a - p[0], b - p[1])) < 0:
                return False
        return True

    def closure(self) -> "MonoIdeal2":
        """Integral closure: lattice points of the Newton polyhedron."""
        if not self.is_m_primary():
            raise ValueError("not m-primary (unbounded polygon)")
        ma, mb = self.max_exponents()
        pts = [
            (a, b)
            for a in range(ma + 1)
            for b in range(mb + 1)
            if self.newton_contains((a, b))
        ]
        return MonoIdeal2(pts)

    def is_integrally_closed(self) -> bool:
        return self.closure() == self

    def closure_oracle(self, pair, kmax: int | None = None) -> bool:
        """Membership in the closure via powers: (ka, kb) in I^k for some k.

        Complete for kmax >= max_x * max_y (the default), which bounds the
        denominators of the Newton polyhedron's supporting lines.
        """
        a, b = pair
        if a < 0 or b < 0:
            return False
        if self.is_zero:
            return False
        if kmax is None:
            ma, mb = self.max_exponents()
            kmax = max(1, ma * mb)
        if kmax < 1:
            raise ValueError("k_max must be at least 1")
        self._grow_powers(kmax)
        return any(
            self._powers[k - 1].contains((k * a, k * b))
            for k in range(1, kmax + 1)
        )

    def __repr__(self):
        return f"MonoIdeal2({list(self.gens)})"


def m_power(l: int) -> MonoIdeal2:
    """The ideal (x,y)^l."""
    if l < 0:
        raise ValueError("negative power")
    return MonoIdeal2([(i, l - i) for i in range(l + 1)])


# module-level spellings of the MonoIdeal2 methods


def mono_minimalize(pairs) -> MonoIdeal2:
    """Canonical antichain; empty input yields the zero ideal."""
    return MonoIdeal2(pairs)


def mono_colon(I: MonoIdeal2, J: MonoIdeal2) -> MonoIdeal2:
    return I.colon(J)


def mono_product(I: MonoIdeal2, J: MonoIdeal2) -> MonoIdeal2:
    return I * J


def mono_power(I: MonoIdeal2, k: int) -> MonoIdeal2:
    return I.power(k)


def mono_intersect(I: MonoIdeal2, J: MonoIdeal2) -> MonoIdeal2:
    return I.intersect(J)


def newton_polygon(I: MonoIdeal2) -> list:
    return I.newton_vertices()


def integral_closure(I: MonoIdeal2) -> MonoIdeal2:
    return I.closure()


def is_integrally_closed(I: MonoIdeal2) -> bool:
    return I.is_integrally_closed()


def closure_oracle(I: MonoIdeal2, point, k_max: int | None = None) -> bool:
    return I.closure_oracle(point, k_max)
