"""Sparse multivariate polynomials over a commutative coefficient ring.

Monomial payload: tuple of (variable, exponent) pairs with distinct
variable names, exponents >= 1, sorted alphabetically; the empty tuple
is the constant monomial.  Polynomial payload: tuple of (monomial,
coefficient) pairs with nonzero canonical coefficients, sorted in
descending graded-lexicographic order, so payload equality is
polynomial equality and printing is deterministic.

Variables are named, not positional: x*y over this context and y*x over
another agree because both canonicalize the same way.  Homogeneity is
decided from the support, and the Euler-style scaling identity
f(t*X) = t^deg(f) * f(X) can be checked for any chosen scalar.
"""

import functools

from .algebra import Element, RingContext
from .errors import (
    InfiniteRing,
    InvalidParameters,
    MissingVariable,
    ParseError,
    RingError,
    VariableCollision,
    ZeroPolynomial,
)
from .poly import NEG_INF


def _mono_degree(mono):
    return sum(e for _, e in mono)


def _mono_cmp(m1, m2):
    d1, d2 = _mono_degree(m1), _mono_degree(m2)
    if d1 != d2:
        return -1 if d1 < d2 else 1
    e1 = dict(m1)
    e2 = dict(m2)
    for v in sorted(set(e1) | set(e2)):
        a, b = e1.get(v, 0), e2.get(v, 0)
        if a != b:
            return 1 if a > b else -1
    return 0


_MONO_KEY = functools.cmp_to_key(_mono_cmp)


def _mono_mul(m1, m2):
    exps = dict(m1)
    for v, e in m2:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in exps.items() if e))


def _mono_canon(raw):
    if isinstance(raw, str):
        return _mono_parse(raw)
    exps = {}
    for v, e in raw:
        if not (isinstance(v, str) and v and v[0].isalpha() and v.isalnum()):
            raise RingError(f"bad variable name {v!r}")
        if not isinstance(e, int) or e < 0:
            raise RingError(f"bad exponent {e!r} for {v}")
        if v in exps:
            raise RingError(f"repeated variable {v} in monomial")
        if e:
            exps[v] = e
    return tuple(sorted(exps.items()))


def _mono_parse(text):
    text = text.strip()
    if text == "1":
        return ()
    exps = {}
    for part in text.split("*"):
        part = part.strip()
        if "^" in part:
            v, _, e = part.partition("^")
            v = v.strip()
            try:
                e = int(e)
            except ValueError:
                raise ParseError(f"bad exponent in monomial {text!r}")
        else:
            v, e = part, 1
        if not (v and v[0].isalpha() and v.isalnum()):
            raise ParseError(f"bad variable in monomial {text!r}")
        if e < 1:
            raise ParseError(f"exponent must be positive in {text!r}")
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_show(mono):
    if not mono:
        return "1"
    return "*".join(v if e == 1 else f"{v}^{e}" for v, e in mono)


class MultiPolyRing(RingContext):
    """Polynomials in arbitrarily many named variables over base."""

    def __init__(self, base):
        if not isinstance(base, RingContext):
            raise RingError(f"expected a ring context, got {base!r}")
        if not base.is_commutative:
            raise InvalidParameters("coefficients must commute")
        self.base = base

    def _key(self):
        return ("MPoly", self.base)

    def name(self):
        return f"MPoly({self.base.name()})"

    @property
    def is_domain(self):
        return self.base.is_domain

    @property
    def is_finite(self):
        return self.base.cardinality() == 1

    def _seal(self, table):
        items = [(m, c) for m, c in table.items() if not self.base.is_zero(c)]
        items.sort(key=lambda mc: _MONO_KEY(mc[0]), reverse=True)
        return tuple(items)

    @property
    def zero(self):
        return ()

    @property
    def one(self):
        return self._seal({(): self.base.one})

    def canon(self, raw):
        if isinstance(raw, dict):
            pairs = raw.items()
        else:
            try:
                pairs = list(raw)
            except TypeError:
                raise RingError(f"expected term pairs or a dict, got {raw!r}")
        table = {}
        for mono, coeff in pairs:
            m = _mono_canon(mono)
            c = self.base.canon(coeff)
            table[m] = self.base.add(table[m], c) if m in table else c
        return self._seal(table)

    def add(self, a, b):
        table = dict(a)
        for m, c in b:
            table[m] = self.base.add(table[m], c) if m in table else c
        return self._seal(table)

    def neg(self, a):
        return tuple((m, self.base.neg(c)) for m, c in a)

    def mul(self, a, b):
        table = {}
        for m1, c1 in a:
            for m2, c2 in b:
                m = _mono_mul(m1, m2)
                c = self.base.mul(c1, c2)
                table[m] = self.base.add(table[m], c) if m in table else c
        return self._seal(table)

    def eq(self, a, b):
        return len(a) == len(b) and all(
            m1 == m2 and self.base.eq(c1, c2)
            for (m1, c1), (m2, c2) in zip(a, b))

    def hash_payload(self, a):
        return hash(tuple((m, self.base.hash_payload(c)) for m, c in a))

    def from_int(self, n):
        return self._seal({(): self.base.from_int(n)})

    def _constant(self, c):
        return self._seal({(): c})

    def try_inverse(self, a):
        if not a:
            return None
        table = dict(a)
        c0 = table.pop((), None)
        if c0 is None:
            return None
        u = self.base.try_inverse(c0)
        if u is None:
            return None
        if not table:
            return self._constant(u)
        if not all(self.base.is_nilpotent(c) for c in table.values()):
            return None
        # unit times (1 + nilpotent): invert by the terminating
        # geometric series, exactly as in one variable
        m = self.sub(self.mul(self._constant(u), a), self.one)
        acc = self.one
        term = self.one
        for _ in range(512):
            term = self.neg(self.mul(term, m))
            if not term:
                return self.mul(self._constant(u), acc)
            acc = self.add(acc, term)
        raise RingError("nilpotent part failed to vanish")

    def is_nilpotent(self, a):
        return all(self.base.is_nilpotent(c) for _, c in a)

    def characteristic(self):
        return self.base.characteristic()

    def cardinality(self):
        return 1 if self.base.cardinality() == 1 else None

    def elements(self):
        if self.cardinality() == 1:
            return iter([()])
        raise InfiniteRing(f"{self.name()} is not finite")

    def parse(self, text):
        from .parsing import split_top

        text = text.strip()
        if not (text.startswith("{") and text.endswith("}")):
            raise ParseError(f"expected {{coeff:monomial,...}}, got {text!r}")
        inner = text[1:-1].strip()
        if not inner:
            return ()
        table = {}
        for item in split_top(inner, ","):
            coeff_part, sep, mono_part = item.partition(":")
            if not sep:
                raise ParseError(f"missing ':' in term {item!r}")
            m = _mono_parse(mono_part)
            c = self.base.canon(self.base.parse(coeff_part.strip()))
            table[m] = self.base.add(table[m], c) if m in table else c
        return self._seal(table)

    def show(self, a):
        if not a:
            return "{}"
        inner = ",".join(
            f"{self.base.show(c)}:{_mono_show(m)}" for m, c in a)
        return "{" + inner + "}"


def _as_mpoly(f):
    if not isinstance(f, Element) or not isinstance(f.ctx, MultiPolyRing):
        raise RingError(f"expected a multivariate polynomial, got {f!r}")
    return f.ctx


def mv_ring(base):
    return MultiPolyRing(base)


def variables_of(f):
    _as_mpoly(f)
    return sorted({v for m, _ in f.val for v, _ in m})


def total_degree(f):
    _as_mpoly(f)
    if not f.val:
        return NEG_INF
    return max(_mono_degree(m) for m, _ in f.val)


def degree_in(f, var):
    _as_mpoly(f)
    if not f.val:
        return NEG_INF
    best = 0
    for m, _ in f.val:
        for v, e in m:
            if v == var:
                best = max(best, e)
    return best


def mv_eval(f, assignment):
    """Substitute a base element for every variable appearing in f."""
    ctx = _as_mpoly(f)
    base = ctx.base
    point = {}
    for v, x in assignment.items():
        point[v] = x.val if isinstance(x, Element) else base.canon(x)
    total = base.zero
    for m, c in f.val:
        term = c
        for v, e in m:
            if v not in point:
                raise MissingVariable(f"no value given for {v}")
            for _ in range(e):
                term = base.mul(term, point[v])
        total = base.add(total, term)
    return Element(base, total)


def homogeneous_components(f):
    """Split f by total degree; keys are the degrees that occur."""
    ctx = _as_mpoly(f)
    buckets = {}
    for m, c in f.val:
        buckets.setdefault(_mono_degree(m), []).append((m, c))
    return {
        d: Element(ctx, ctx.canon(terms))
        for d, terms in sorted(buckets.items())
    }


def is_homogeneous(f):
    _as_mpoly(f)
    return len(homogeneous_components(f)) <= 1


def scaling_check(f, lam):
    """Test f(lam*X) == lam^d * f(X) as polynomials, d = total degree."""
    ctx = _as_mpoly(f)
    base = ctx.base
    lv = lam.val if isinstance(lam, Element) else base.canon(lam)
    if not f.val:
        return True
    d = total_degree(f)
    scaled = {}
    for m, c in f.val:
        k = _mono_degree(m)
        factor = base.one
        for _ in range(k):
            factor = base.mul(factor, lv)
        scaled[m] = base.mul(factor, c)
    lhs = ctx._seal(scaled)
    lam_d = base.one
    for _ in range(d):
        lam_d = base.mul(lam_d, lv)
    rhs = ctx.mul(ctx._constant(lam_d), f.val)
    return ctx.eq(lhs, rhs)


def homogenize(f, newvar):
    """Pad every term with powers of a fresh variable up to total degree."""
    ctx = _as_mpoly(f)
    if not f.val:
        raise ZeroPolynomial("cannot homogenize the zero polynomial")
    if newvar in variables_of(f):
        raise VariableCollision(f"{newvar} already occurs")
    _mono_canon(((newvar, 1),))
    d = total_degree(f)
    out = []
    for m, c in f.val:
        pad = d - _mono_degree(m)
        mono = _mono_mul(m, ((newvar, pad),)) if pad else m
        out.append((mono, c))
    return Element(ctx, ctx.canon(out))


def dehomogenize(f, var):
    """Substitute var = 1 by erasing it from every monomial."""
    ctx = _as_mpoly(f)
    out = []
    for m, c in f.val:
        mono = tuple((v, e) for v, e in m if v != var)
        out.append((mono, c))
    return Element(ctx, ctx.canon(out))
