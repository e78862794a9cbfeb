"""Univariate polynomials over an arbitrary coefficient context.

Payload: tuple of base payloads in ascending degree with no trailing
zeros, so the zero polynomial is the empty tuple and payload equality is
polynomial equality whenever the base payloads are canonical.

The degree of the zero polynomial is the sentinel NEG_INF, which
compares below every integer and absorbs addition, so the product rule
deg(fg) = deg f + deg g holds over domains without special-casing.

Division with remainder is available in two forms: divrem_field for
field coefficients (this one backs the Euclidean hooks), and
divrem_scaled over any commutative base, which scales f by the leading
coefficient of g just often enough to keep every division step exact
and reports the scaling exponent.
"""

import itertools

from .algebra import Element, RingContext, int_scale_payload
from .errors import (
    ContextNotEuclidean,
    DivisionByZero,
    DuplicateNode,
    InfiniteRing,
    NotAField,
    NotARoot,
    ParseError,
    RingError,
    ZeroPolynomial,
)
from .number_rings import IntegerRing, RationalField


class _NegInfinity:
    """Degree of the zero polynomial: below every int, absorbs +."""

    __slots__ = ()

    def __lt__(self, other):
        return not isinstance(other, _NegInfinity)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInfinity)

    def __eq__(self, other):
        return isinstance(other, _NegInfinity)

    def __hash__(self):
        return hash("ringkit.NEG_INF")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInfinity()


class PolyRing(RingContext):
    """Polynomials base[x] as a ring context."""

    def __init__(self, base):
        if not isinstance(base, RingContext):
            raise RingError(f"expected a ring context, got {base!r}")
        self.base = base

    def _key(self):
        return ("Poly", self.base)

    def name(self):
        return f"Poly({self.base.name()})"

    @property
    def is_commutative(self):
        return self.base.is_commutative

    @property
    def is_domain(self):
        return self.base.is_domain

    @property
    def is_gcd_domain(self):
        return self.base.is_field

    @property
    def is_euclidean(self):
        return self.base.is_field

    @property
    def is_finite(self):
        return self.base.cardinality() == 1

    def _strip(self, coeffs):
        n = len(coeffs)
        while n and self.base.is_zero(coeffs[n - 1]):
            n -= 1
        return tuple(coeffs[:n])

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return self._strip((self.base.one,))

    @property
    def gen(self):
        return Element(self, self._strip((self.base.zero, self.base.one)))

    def canon(self, raw):
        if isinstance(raw, Element):
            raise RingError("payloads are raw coefficient sequences")
        try:
            coeffs = tuple(raw)
        except TypeError:
            raise RingError(f"expected a coefficient sequence, got {raw!r}")
        return self._strip([self.base.canon(c) for c in coeffs])

    def add(self, a, b):
        z = self.base.zero
        out = [self.base.add(x, y)
               for x, y in itertools.zip_longest(a, b, fillvalue=z)]
        return self._strip(out)

    def neg(self, a):
        return tuple(self.base.neg(c) for c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        z = self.base.zero
        out = [z] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if self.base.is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = self.base.add(out[i + j], self.base.mul(x, y))
        return self._strip(out)

    def eq(self, a, b):
        return len(a) == len(b) and all(
            self.base.eq(x, y) for x, y in zip(a, b))

    def hash_payload(self, a):
        return hash(tuple(self.base.hash_payload(c) for c in a))

    def from_int(self, n):
        return self._strip((self.base.from_int(n),))

    def try_inverse(self, a):
        if not a:
            return None
        if len(a) == 1:
            inv = self.base.try_inverse(a[0])
            return None if inv is None else self._strip((inv,))
        if not self.base.is_commutative:
            return None
        # f is a unit iff its constant term is and every higher
        # coefficient is nilpotent; invert through the geometric series
        # of the nilpotent part, which terminates.
        u = self.base.try_inverse(a[0])
        if u is None:
            return None
        if not all(self.base.is_nilpotent(c) for c in a[1:]):
            return None
        uf = self.mul(self._strip((u,)), a)
        m = self.sub(uf, self.one)
        acc = self.one
        term = self.one
        for _ in range(512):
            term = self.neg(self.mul(term, m))
            if not term:
                return self.mul(self._strip((u,)), acc)
            acc = self.add(acc, term)
        raise RingError("nilpotent part failed to vanish")

    def is_nilpotent(self, a):
        return all(self.base.is_nilpotent(c) for c in a)

    def characteristic(self):
        return self.base.characteristic()

    def cardinality(self):
        return 1 if self.base.cardinality() == 1 else None

    def elements(self):
        if self.cardinality() == 1:
            return iter([()])
        raise InfiniteRing(f"{self.name()} is not finite")

    def divmod_(self, a, b):
        if not self.base.is_field:
            raise ContextNotEuclidean(
                f"division with remainder in {self.name()} needs field "
                "coefficients")
        if not b:
            raise DivisionByZero("division by zero polynomial")
        lead = self.base.inverse(b[-1])
        db = len(b) - 1
        q = [self.base.zero] * max(len(a) - db, 0)
        r = list(a)
        while len(r) > db:
            c = self.base.mul(r[-1], lead)
            k = len(r) - 1 - db
            q[k] = c
            for i, bc in enumerate(b):
                r[k + i] = self.base.sub(r[k + i], self.base.mul(c, bc))
            while r and self.base.is_zero(r[-1]):
                r.pop()
        return self._strip(q), self._strip(r)

    def euclid_size(self, a):
        return len(a) - 1

    def canon_unit(self, a):
        if not self.base.is_field:
            raise ContextNotEuclidean(
                f"no canonical associate in {self.name()}")
        if not a:
            return self.one
        return self._strip((self.base.inverse(a[-1]),))

    def symbols(self):
        syms = {
            name: self._strip((payload,))
            for name, payload in self.base.symbols().items()
        }
        syms["x"] = self._strip((self.base.zero, self.base.one))
        return syms

    def parse(self, text):
        from .parsing import eval_expr, split_top

        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            inner = text[1:-1].strip()
            if not inner:
                return ()
            return self._strip(
                [self.base.parse(p.strip()) for p in split_top(inner, ",")])
        return eval_expr(self, text, self.symbols())

    def show(self, a):
        return poly_show(self.base, a)


def poly_show(base, coeffs):
    """Compact pretty form, highest degree first, reparseable."""
    if not coeffs:
        return "0"
    signed = isinstance(base, (IntegerRing, RationalField))
    out = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if base.is_zero(c):
            continue
        if signed:
            neg = c < 0
            body = _poly_term(str(-c if neg else c), k)
            sign = "-" if neg else ("+" if out else "")
        else:
            cs = base.show(c)
            if not cs.isdigit():
                cs = f"({cs})"
            body = _poly_term(cs, k)
            sign = "+" if out else ""
        out.append(sign + body)
    return "".join(out)


def _poly_term(cstr, k):
    if k == 0:
        return cstr
    xpow = "x" if k == 1 else f"x^{k}"
    if cstr == "1":
        return xpow
    return f"{cstr}*{xpow}"


def _as_poly(p):
    if not isinstance(p, Element) or not isinstance(p.ctx, PolyRing):
        raise RingError(f"expected a polynomial element, got {p!r}")
    return p.ctx


def degree(p):
    """Degree of a polynomial element; NEG_INF for the zero polynomial."""
    _as_poly(p)
    return len(p.val) - 1 if p.val else NEG_INF


def leading_coefficient(p):
    ctx = _as_poly(p)
    if not p.val:
        raise ZeroPolynomial("the zero polynomial has no leading coefficient")
    return Element(ctx.base, p.val[-1])


def poly_eval(p, point):
    """Left-substitution p(point): coefficients stay left of the powers."""
    ctx = _as_poly(p)
    base = ctx.base
    r = point.val if isinstance(point, Element) else base.canon(point)
    if isinstance(point, Element) and point.ctx != base:
        raise RingError("evaluation point must live in the coefficient ring")
    acc = base.zero
    for c in reversed(p.val):
        acc = base.add(base.mul(acc, r), c)
    return Element(base, acc)


def derivative(p):
    ctx = _as_poly(p)
    base = ctx.base
    out = [int_scale_payload(base, i, c) for i, c in enumerate(p.val)][1:]
    return Element(ctx, ctx._strip(out))


def divrem_scaled(f, g):
    """Fraction-free division: returns (m, q, r) with lc(g)^m * f = q*g + r.

    The exponent m counts only the steps actually taken, so it is as
    small as this one-step-at-a-time scheme allows; deg r < deg g on
    return.  Needs a commutative coefficient ring and g != 0.
    """
    ctx = _as_poly(f)
    if g.ctx != ctx:
        raise RingError("operands live in different polynomial rings")
    if not ctx.base.is_commutative:
        raise RingError("scaled division needs commutative coefficients")
    if not g.val:
        raise DivisionByZero("division by zero polynomial")
    base = ctx.base
    b = ctx._strip((g.val[-1],))
    dg = len(g.val) - 1
    q = ()
    r = f.val
    m = 0
    while r and len(r) - 1 >= dg:
        t = ctx._strip(
            [base.zero] * (len(r) - 1 - dg) + [r[-1]])
        q = ctx.add(ctx.mul(b, q), t)
        r = ctx.sub(ctx.mul(b, r), ctx.mul(t, g.val))
        m += 1
    return m, Element(ctx, q), Element(ctx, r)


def divrem_field(f, g):
    """Division with remainder over field coefficients."""
    ctx = _as_poly(f)
    if g.ctx != ctx:
        raise RingError("operands live in different polynomial rings")
    if not ctx.base.is_field:
        raise NotAField(f"{ctx.base.name()} is not a field")
    q, r = ctx.divmod_(f.val, g.val)
    return Element(ctx, q), Element(ctx, r)


def factor_theorem_split(p, a):
    """Quotient p / (x - a) when a is a root; synthetic division is exact."""
    ctx = _as_poly(p)
    base = ctx.base
    r = a.val if isinstance(a, Element) else base.canon(a)
    if not p.val:
        raise ZeroPolynomial("cannot split the zero polynomial")
    out = []
    acc = base.zero
    for c in reversed(p.val):
        acc = base.add(base.mul(acc, r), c)
        out.append(acc)
    rem = out.pop()
    if not base.is_zero(rem):
        raise NotARoot(f"{base.show(r)} is not a root")
    out.reverse()
    return Element(ctx, ctx._strip(out))


def roots_over_finite(p):
    """All roots in a finite coefficient ring, by exhaustion."""
    ctx = _as_poly(p)
    if not p.val:
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    if not ctx.base.is_finite:
        raise InfiniteRing(f"{ctx.base.name()} is not finite")
    base = ctx.base
    roots = []
    for r in base.elements():
        acc = base.zero
        for c in reversed(p.val):
            acc = base.add(base.mul(acc, r), c)
        if base.is_zero(acc):
            roots.append(Element(base, r))
    return roots


def lagrange_interpolate(base, points):
    """Least-degree polynomial through the given (node, value) pairs.

    Nodes must be distinct elements of the coefficient field; the result
    has degree < len(points) and is unique with that bound.
    """
    if not base.is_field:
        raise NotAField(f"{base.name()} is not a field")
    ctx = PolyRing(base)
    nodes = []
    values = []
    for x, y in points:
        xv = x.val if isinstance(x, Element) else base.canon(x)
        yv = y.val if isinstance(y, Element) else base.canon(y)
        for seen in nodes:
            if base.eq(seen, xv):
                raise DuplicateNode(f"repeated node {base.show(xv)}")
        nodes.append(xv)
        values.append(yv)
    if not nodes:
        return Element(ctx, ())
    total = ()
    for i, (xi, yi) in enumerate(zip(nodes, values)):
        num = ctx.one
        den = base.one
        for j, xj in enumerate(nodes):
            if j == i:
                continue
            num = ctx.mul(num, (base.neg(xj), base.one))
            den = base.mul(den, base.sub(xi, xj))
        scale = base.mul(yi, base.inverse(den))
        total = ctx.add(total, ctx.mul(ctx._strip((scale,)), num))
    return Element(ctx, total)


def poly_ring(base):
    return PolyRing(base)
