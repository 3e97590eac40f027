"""Exact arithmetic layer: coefficient fields, monomial orders, sparse polynomials.

Coefficients are plain Python objects (``int`` for prime fields, ``Fraction``
for the rationals); polynomials are immutable term tuples sorted descending
under the ring's monomial order.  Everything downstream (Groebner engine,
ideal algebra, Rees constructions) works through this module only.
"""

from __future__ import annotations

from fractions import Fraction


# ---------------------------------------------------------------------------
# coefficient fields


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class PrimeField:
    """F_p with canonical representatives 0..p-1 stored as plain ints."""

    __slots__ = ("p",)

    def __init__(self, p: int = 32003):
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def name(self) -> str:
        return f"fp:{self.p}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def of_int(self, n: int):
        return n % self.p

    def of_fraction(self, q: Fraction):
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def random(self, rng):
        return rng.randrange(self.p)

    def random_nonzero(self, rng):
        return rng.randrange(1, self.p)

    def format(self, a) -> str:
        # balanced representative: keeps small negatives readable
        return str(a - self.p) if 2 * a > self.p else str(a)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField:
    """Exact rationals via the stdlib Fraction."""

    __slots__ = ()

    # bound for random draws; exact arithmetic, so any range works
    _RAND = 50

    @property
    def name(self) -> str:
        return "q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def of_int(self, n: int):
        return Fraction(n)

    def of_fraction(self, q: Fraction):
        return q

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b

    def random(self, rng):
        return Fraction(rng.randrange(-self._RAND, self._RAND + 1))

    def random_nonzero(self, rng):
        n = rng.randrange(1, self._RAND + 1)
        return Fraction(n if rng.random() < 0.5 else -n)

    def format(self, a) -> str:
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "RationalField()"


QQ = RationalField()
GF32003 = PrimeField(32003)


def field_by_name(name: str):
    """Resolve 'q' or 'fp:<p>' to a field instance."""
    if name == "q":
        return QQ
    if name.startswith("fp:"):
        return PrimeField(int(name[3:]))
    raise ValueError(f"unknown field {name!r}")


# ---------------------------------------------------------------------------
# exponent vectors (plain tuples of non-negative ints)


def exp_mul(a: tuple, b: tuple) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def exp_divides(a: tuple, b: tuple) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def exp_div(a: tuple, b: tuple) -> tuple:
    """a / b, requiring divisibility."""
    q = tuple(x - y for x, y in zip(a, b))
    if any(x < 0 for x in q):
        raise ValueError(f"{b} does not divide {a}")
    return q


def exp_lcm(a: tuple, b: tuple) -> tuple:
    return tuple(max(x, y) for x, y in zip(a, b))


def exp_gcd(a: tuple, b: tuple) -> tuple:
    return tuple(min(x, y) for x, y in zip(a, b))


def exp_deg(a: tuple) -> int:
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders, realised as sort keys


def grevlex_key(e: tuple):
    return (sum(e), tuple(-x for x in reversed(e)))


class Grevlex:
    """Graded reverse lexicographic order."""

    __slots__ = ("arity",)

    def __init__(self, arity: int):
        self.arity = arity

    @property
    def name(self) -> str:
        return "grevlex"

    def key(self, e: tuple):
        return grevlex_key(e)

    def compare(self, a: tuple, b: tuple) -> int:
        if len(a) != self.arity or len(b) != self.arity:
            raise ValueError("arity mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, Grevlex) and other.arity == self.arity

    def __hash__(self):
        return hash(("grevlex", self.arity))

    def __repr__(self):
        return f"Grevlex({self.arity})"


class Lex:
    """Pure lexicographic order, leftmost variable largest."""

    __slots__ = ("arity",)

    def __init__(self, arity: int):
        self.arity = arity

    @property
    def name(self) -> str:
        return "lex"

    def key(self, e: tuple):
        return e

    def compare(self, a: tuple, b: tuple) -> int:
        if len(a) != self.arity or len(b) != self.arity:
            raise ValueError("arity mismatch")
        return (a > b) - (a < b)

    def __eq__(self, other):
        return isinstance(other, Lex) and other.arity == self.arity

    def __hash__(self):
        return hash(("lex", self.arity))

    def __repr__(self):
        return f"Lex({self.arity})"


class BlockOrder:
    """Grevlex on the first `split` variables, then grevlex on the rest.

    Any monomial involving a first-block variable beats any that does not,
    so eliminating the first block is a matter of filtering basis elements.
    """

    __slots__ = ("arity", "split")

    def __init__(self, arity: int, split: int):
        if not 0 < split < arity:
            raise ValueError("split must be strictly inside the variable range")
        self.arity = arity
        self.split = split

    @property
    def name(self) -> str:
        return f"block:{self.split}"

    def key(self, e: tuple):
        return (grevlex_key(e[: self.split]), grevlex_key(e[self.split :]))

    def compare(self, a: tuple, b: tuple) -> int:
        if len(a) != self.arity or len(b) != self.arity:
            raise ValueError("arity mismatch")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return (
            isinstance(other, BlockOrder)
            and other.arity == self.arity
            and other.split == self.split
        )

    def __hash__(self):
        return hash(("block", self.arity, self.split))

    def __repr__(self):
        return f"BlockOrder({self.arity}, {self.split})"


def order_by_name(name: str, arity: int):
    if name == "grevlex":
        return Grevlex(arity)
    if name == "lex":
        return Lex(arity)
    raise ValueError(f"unknown order {name!r}")


# ---------------------------------------------------------------------------
# polynomial rings


class RingCtx:
    """Polynomial ring descriptor: variable names, field, monomial order."""

    __slots__ = ("names", "field", "order")

    def __init__(self, names, field=None, order=None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("variable names must be distinct")
        if not names:
            raise ValueError("need at least one variable")
        self.names = names
        self.field = GF32003 if field is None else field
        self.order = Grevlex(len(names)) if order is None else order
        if self.order.arity != len(names):
            raise ValueError("order arity does not match variable count")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def with_order(self, order) -> "RingCtx":
        return RingCtx(self.names, self.field, order)

    def poly(self, terms) -> "Poly":
        """Build a polynomial from (coeff, exponent) pairs, normalizing."""
        field = self.field
        acc: dict = {}
        for c, e in terms:
            e = tuple(e)
            if len(e) != self.nvars:
                raise ValueError(f"exponent {e} has wrong arity")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            if isinstance(c, int):
                c = field.of_int(c)
            elif isinstance(c, Fraction):
                c = field.of_fraction(c)
            if e in acc:
                acc[e] = field.add(acc[e], c)
            else:
                acc[e] = c
        items = [(e, c) for e, c in acc.items() if c != field.zero]
        items.sort(key=lambda t: self.order.key(t[0]), reverse=True)
        return Poly(self, tuple(items))

    def zero(self) -> "Poly":
        return Poly(self, ())

    def const(self, c) -> "Poly":
        return self.poly([(c, (0,) * self.nvars)])

    def one(self) -> "Poly":
        return self.const(1)

    def var(self, i: int) -> "Poly":
        e = [0] * self.nvars
        e[i] = 1
        return self.poly([(1, tuple(e))])

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, e, c=1) -> "Poly":
        return self.poly([(c, tuple(e))])

    def __eq__(self, other):
        return (
            isinstance(other, RingCtx)
            and other.names == self.names
            and other.field == self.field
            and other.order == self.order
        )

    def __hash__(self):
        return hash((self.names, self.field, self.order))

    def __repr__(self):
        return f"RingCtx({self.names}, {self.field!r}, {self.order!r})"


class Poly:
    """Immutable sparse polynomial: tuple of (exponent, coeff), descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: RingCtx, terms: tuple):
        self.ring = ring
        self.terms = terms

    # -- inspection

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def lm(self) -> tuple:
        """Leading monomial (exponent tuple)."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][0]

    def lc(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return self.terms[0][1]

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return max(sum(e) for e, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = sum(self.terms[0][0])
        return all(sum(e) == d for e, _ in self.terms)

    def homogeneous_degree(self):
        """Common degree of all terms, None if mixed; 0 for the zero poly."""
        if not self.terms:
            return 0
        d = sum(self.terms[0][0])
        if all(sum(e) == d for e, _ in self.terms):
            return d
        return None

    def coeff(self, e: tuple):
        for ee, c in self.terms:
            if ee == e:
                return c
        return self.ring.field.zero

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and sum(self.terms[0][0]) == 0)

    # -- arithmetic

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError("mixed-ring arithmetic")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        return _merge(self, other, False)

    def __sub__(self, other: "Poly") -> "Poly":
        self._check(other)
        return _merge(self, other, True)

    def __neg__(self) -> "Poly":
        neg = self.ring.field.neg
        return Poly(self.ring, tuple((e, neg(c)) for e, c in self.terms))

    def scale(self, c) -> "Poly":
        field = self.ring.field
        if isinstance(c, int):
            c = field.of_int(c)
        if c == field.zero:
            return Poly(self.ring, ())
        mul = field.mul
        return Poly(self.ring, tuple((e, mul(cc, c)) for e, cc in self.terms))

    def mul_term(self, c, e: tuple) -> "Poly":
        """Multiply by the single term c * x^e (c nonzero)."""
        mul = self.ring.field.mul
        return Poly(
            self.ring, tuple((exp_mul(ee, e), mul(cc, c)) for ee, cc in self.terms)
        )

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        if not self.terms or not other.terms:
            return Poly(self.ring, ())
        field = self.ring.field
        add, mul, zero = field.add, field.mul, field.zero
        acc: dict = {}
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        for eb, cb in b:
            for ea, ca in a:
                e = exp_mul(ea, eb)
                c = mul(ca, cb)
                if e in acc:
                    acc[e] = add(acc[e], c)
                else:
                    acc[e] = c
        items = [(e, c) for e, c in acc.items() if c != zero]
        items.sort(key=lambda t: self.ring.order.key(t[0]), reverse=True)
        return Poly(self.ring, tuple(items))

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def monic(self) -> "Poly":
        if not self.terms:
            return self
        return self.scale(self.ring.field.inv(self.lc()))

    def substitute(self, target: RingCtx, images) -> "Poly":
        """Ring map sending variable i to images[i] (polynomials in target)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        out = target.zero()
        cache: dict = {}
        for e, c in self.terms:
            term = target.const(c)
            for i, k in enumerate(e):
                if k == 0:
                    continue
                if (i, k) not in cache:
                    cache[(i, k)] = images[i] ** k
                term = term * cache[(i, k)]
            out = out + term
        return out

    # -- comparison / formatting

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.ring == self.ring
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.ring, self.terms))

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"<{format_poly(self)}>"


def _merge(p: Poly, q: Poly, subtract: bool) -> Poly:
    """Merge two sorted term lists, adding (or subtracting) coefficients."""
    ring = p.ring
    field = ring.field
    key = ring.order.key
    zero = field.zero
    combine = field.sub if subtract else field.add
    neg = field.neg
    out = []
    a, b = p.terms, q.terms
    i = j = 0
    na, nb = len(a), len(b)
    while i < na and j < nb:
        ea, ca = a[i]
        eb, cb = b[j]
        if ea == eb:
            c = combine(ca, cb)
            if c != zero:
                out.append((ea, c))
            i += 1
            j += 1
        elif key(ea) > key(eb):
            out.append((ea, ca))
            i += 1
        else:
            out.append((eb, neg(cb) if subtract else cb))
            j += 1
    out.extend(a[i:])
    if subtract:
        out.extend((e, neg(c)) for e, c in b[j:])
    else:
        out.extend(b[j:])
    return Poly(ring, tuple(out))


# ---------------------------------------------------------------------------
# formatting


def format_monomial(names, e: tuple) -> str:
    parts = []
    for n, k in zip(names, e):
        if k == 1:
            parts.append(n)
        elif k > 1:
            parts.append(f"{n}^{k}")
    return "*".join(parts)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    field = p.ring.field
    names = p.ring.names
    pieces = []
    for idx, (e, c) in enumerate(p.terms):
        cs = field.format(c)
        negative = cs.startswith("-")
        mag = cs[1:] if negative else cs
        mono = format_monomial(names, e)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if idx == 0:
            pieces.append(f"-{body}" if negative else body)
        else:
            pieces.append(f" - {body}" if negative else f" + {body}")
    return "".join(pieces)


def format_ideal(gens) -> str:
    """Round-trips through the CLI grammar: ideal(p1, ..., pk)."""
    return "ideal(" + ", ".join(format_poly(g) for g in gens) + ")"
