"""Truncated power series and Laurent expansions of series quotients.

A SeriesRing(base, prec) works in base[x] modulo x^prec: payloads are
tuples of exactly prec base payloads, so every element carries its full
coefficient window and equality is tuple equality.  Operations between
different precisions over the same base meet at the minimum precision
(ts_add/ts_mul below); the context's own operators require equal
contexts like everywhere else.

Orders of vanishing are only known up to the window, so ts_ord returns
either a known order (index of the first nonzero coefficient) or the
statement "at least prec" when the window is all zeros.

A Laurent expansion f = x^(-n) * (unit series) is stored as a finite
principal part (negative exponents, nonzero coefficients only) plus a
truncated tail; printing appends the O(x^N) marker for the tail window.
"""

import itertools
from dataclasses import dataclass

from .algebra import Element, RingContext
from .errors import (
    ConstantTermNotUnit,
    ContextMismatch,
    DenominatorIndistinguishableFromZero,
    InfiniteRing,
    InvalidParameters,
    NotAField,
    ParseError,
    RingError,
)
from .number_rings import IntegerRing, RationalField


class SeriesRing(RingContext):
    """base[x] truncated at x^prec, prec >= 1."""

    def __init__(self, base, prec):
        if not isinstance(base, RingContext):
            raise RingError(f"expected a ring context, got {base!r}")
        if not isinstance(prec, int) or prec < 1:
            raise InvalidParameters(f"precision must be >= 1, got {prec!r}")
        self.base = base
        self.prec = prec

    def _key(self):
        return ("Series", self.base, self.prec)

    def name(self):
        return f"Series({self.base.name()},{self.prec})"

    @property
    def is_commutative(self):
        return self.base.is_commutative

    @property
    def is_domain(self):
        return self.prec == 1 and self.base.is_domain

    @property
    def is_gcd_domain(self):
        return self.prec == 1 and self.base.is_gcd_domain

    @property
    def is_euclidean(self):
        return self.prec == 1 and self.base.is_euclidean

    @property
    def is_field(self):
        return self.prec == 1 and self.base.is_field

    @property
    def is_finite(self):
        return self.base.is_finite

    def _fit(self, coeffs):
        z = self.base.zero
        out = list(coeffs[:self.prec])
        out.extend([z] * (self.prec - len(out)))
        return tuple(out)

    @property
    def zero(self):
        return (self.base.zero,) * self.prec

    @property
    def one(self):
        return self._fit((self.base.one,))

    def canon(self, raw):
        try:
            coeffs = tuple(raw)
        except TypeError:
            raise RingError(f"expected a coefficient sequence, got {raw!r}")
        return self._fit([self.base.canon(c) for c in coeffs])

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        base = self.base
        out = [base.zero] * self.prec
        for i, x in enumerate(a):
            if base.is_zero(x):
                continue
            for j, y in enumerate(b):
                if i + j >= self.prec:
                    break
                out[i + j] = base.add(out[i + j], base.mul(x, y))
        return tuple(out)

    def eq(self, a, b):
        return all(self.base.eq(x, y) for x, y in zip(a, b))

    def hash_payload(self, a):
        return hash(tuple(self.base.hash_payload(c) for c in a))

    def from_int(self, n):
        return self._fit((self.base.from_int(n),))

    def try_inverse(self, a):
        u = self.base.try_inverse(a[0])
        if u is None:
            return None
        base = self.base
        out = [u] + [base.zero] * (self.prec - 1)
        for n in range(1, self.prec):
            s = base.zero
            for i in range(1, n + 1):
                s = base.add(s, base.mul(a[i], out[n - i]))
            out[n] = base.neg(base.mul(u, s))
        return tuple(out)

    def is_nilpotent(self, a):
        # the ideal (x) is nilpotent here, so the constant term decides
        return self.base.is_nilpotent(a[0])

    def characteristic(self):
        return self.base.characteristic()

    def cardinality(self):
        n = self.base.cardinality()
        return None if n is None else n ** self.prec

    def elements(self):
        if not self.base.is_finite:
            raise InfiniteRing(f"{self.name()} is not finite")
        return itertools.product(self.base.elements(), repeat=self.prec)

    def symbols(self):
        syms = {
            name: self._fit((payload,))
            for name, payload in self.base.symbols().items()
        }
        gen = [self.base.zero, self.base.one] if self.prec > 1 \
            else [self.base.zero]
        syms["x"] = self._fit(gen)
        return syms

    def parse(self, text):
        from .parsing import eval_expr, split_top

        text = text.strip()
        if text.startswith("[") and text.endswith("]"):
            inner = text[1:-1].strip()
            if ";" in inner:
                coeff_part, _, prec_part = inner.rpartition(";")
                try:
                    int(prec_part.strip())
                except ValueError:
                    raise ParseError(f"bad precision marker in {text!r}")
            else:
                coeff_part = inner
            coeff_part = coeff_part.strip()
            if not coeff_part:
                return self.zero
            return self._fit([self.base.canon(self.base.parse(p.strip()))
                              for p in split_top(coeff_part, ",")])
        return eval_expr(self, text, self.symbols())

    def show(self, a):
        inner = ",".join(self.base.show(c) for c in a)
        return f"[{inner};{self.prec}]"


@dataclass(frozen=True)
class OrderVal:
    """Order of vanishing: an exact value or a lower bound at the window."""

    kind: str
    n: int

    @classmethod
    def known(cls, n):
        return cls("known", n)

    @classmethod
    def at_least(cls, n):
        return cls("at_least", n)

    @property
    def is_known(self):
        return self.kind == "known"

    def __str__(self):
        return str(self.n) if self.is_known else f">={self.n}"


def _as_series(x):
    if not isinstance(x, Element) or not isinstance(x.ctx, SeriesRing):
        raise RingError(f"expected a truncated series, got {x!r}")
    return x.ctx


def ts_ord(x):
    ctx = _as_series(x)
    for i, c in enumerate(x.val):
        if not ctx.base.is_zero(c):
            return OrderVal.known(i)
    return OrderVal.at_least(ctx.prec)


def ts_truncate(x, prec):
    """Project to a smaller window; growing the window would invent data."""
    ctx = _as_series(x)
    if not 1 <= prec <= ctx.prec:
        raise InvalidParameters(
            f"cannot truncate precision {ctx.prec} to {prec}")
    if prec == ctx.prec:
        return x
    small = SeriesRing(ctx.base, prec)
    return Element(small, x.val[:prec])


def _meet(f, g):
    fc, gc = _as_series(f), _as_series(g)
    if fc.base != gc.base:
        raise ContextMismatch(
            f"series over {fc.base.name()} vs {gc.base.name()}")
    m = min(fc.prec, gc.prec)
    return ts_truncate(f, m), ts_truncate(g, m)


def ts_add(f, g):
    f, g = _meet(f, g)
    return f + g


def ts_mul(f, g):
    f, g = _meet(f, g)
    return f * g


def ts_invert(x):
    ctx = _as_series(x)
    inv = ctx.try_inverse(x.val)
    if inv is None:
        raise ConstantTermNotUnit(
            f"constant term {ctx.base.show(x.val[0])} is not a unit in "
            f"{ctx.base.name()}")
    return Element(ctx, inv)


@dataclass(frozen=True)
class LaurentSeries:
    """Finitely many negative-exponent terms plus a truncated tail."""

    principal: tuple
    tail: Element

    @property
    def base(self):
        return self.tail.ctx.base

    def order(self):
        if self.principal:
            return OrderVal.known(self.principal[0][0])
        return ts_ord(self.tail)

    def __repr__(self):
        return laurent_show(self)


def laurent_show(ls):
    base = ls.base
    tailctx = ls.tail.ctx
    signed = isinstance(base, (IntegerRing, RationalField))
    out = []
    terms = list(ls.principal)
    terms.extend(
        (e, c) for e, c in enumerate(ls.tail.val) if not base.is_zero(c))
    for e, c in terms:
        if signed:
            neg = c < 0
            body = _laurent_term(str(-c if neg else c), e)
            sign = "-" if neg else ("+" if out else "")
        else:
            cs = base.show(c)
            if not cs.isdigit():
                cs = f"({cs})"
            body = _laurent_term(cs, e)
            sign = "+" if out else ""
        out.append(sign + body)
    marker = f"O(x^{tailctx.prec})"
    if not out:
        return marker
    return "".join(out) + "+" + marker


def _laurent_term(cstr, e):
    if e == 0:
        return cstr
    xpow = "x" if e == 1 else f"x^{e}"
    if cstr == "1":
        return xpow
    return f"{cstr}*{xpow}"


def laurent_from_fraction(num, den):
    """Expand num/den as x^(-n) times a unit series.

    den must have a nonzero coefficient inside its window (otherwise it
    is indistinguishable from zero and the quotient is meaningless) and
    the base must be a field so the shifted denominator inverts.
    """
    nctx, dctx = _as_series(num), _as_series(den)
    if nctx.base != dctx.base:
        raise ContextMismatch(
            f"series over {nctx.base.name()} vs {dctx.base.name()}")
    base = nctx.base
    if not base.is_field:
        raise NotAField(f"{base.name()} is not a field")
    o = ts_ord(den)
    if not o.is_known:
        raise DenominatorIndistinguishableFromZero(
            f"denominator vanishes to order >= {dctx.prec}")
    n = o.n
    shifted_prec = dctx.prec - n
    window = min(nctx.prec, shifted_prec)
    tail_prec = window - n
    if tail_prec < 1:
        raise InvalidParameters(
            "window too small to see any nonnegative exponents")
    shifted = Element(SeriesRing(base, shifted_prec), den.val[n:])
    inv = ts_invert(shifted)
    prod = ts_mul(ts_truncate(num, window), ts_truncate(inv, window))
    principal = tuple(
        (k - n, c) for k, c in enumerate(prod.val[:n])
        if not base.is_zero(c))
    tail = Element(SeriesRing(base, tail_prec), prod.val[n:])
    return LaurentSeries(principal=principal, tail=tail)


def series_ring(base, prec):
    return SeriesRing(base, prec)
