"""Ring contexts, elements, and the generic algorithms every ring shares.

A RingContext is a runtime descriptor of an ambient ring: it knows the
ring's capability flags and implements the arithmetic on raw payloads.
Payloads are plain immutable Python values (ints, tuples, Fractions) kept
in a canonical form chosen per context, so payload equality is ring
equality everywhere except where a context overrides eq() (fractions over
bases with no canonical gcd compare by cross-multiplication).

An Element pairs one payload with one context and overloads the usual
operators.  Binary operations require equal contexts; plain ints coerce
via n . 1.

Capability flags form a chain: is_field implies is_euclidean implies
is_gcd_domain implies is_domain implies is_commutative.  The flags
describe what this package can compute in the context, not the full
mathematical truth (e.g. real quadratic rings are never flagged
Euclidean because no division is implemented for them).
"""

import itertools
from dataclasses import dataclass

from .errors import (
    ContextMismatch,
    ContextNotEuclidean,
    DivisionByZero,
    InfiniteRing,
    NotInvertible,
    NotPrimeCharacteristic,
    RingError,
    TooLarge,
)
from .intutil import is_prime

ENUMERATION_CAP = 10**6


class RingContext:
    """Base class for all ring descriptors.

    Subclasses implement the payload kernel: zero/one, add/neg/mul,
    canon, parse/show, and the capability flags.  Everything else
    (sub, powers, integer scaling, enumeration-based classification)
    is generic.
    """

    is_commutative = True
    is_domain = False
    is_gcd_domain = False
    is_euclidean = False
    is_field = False
    is_finite = False

    # -- identity ---------------------------------------------------

    def _key(self):
        raise NotImplementedError

    def __eq__(self, other):
        return type(self) is type(other) and self._key() == other._key()

    def __hash__(self):
        return hash((type(self).__name__, self._key()))

    def __repr__(self):
        return self.name()

    def name(self):
        """Canonical context literal, parseable by parse_context."""
        raise NotImplementedError

    # -- payload kernel ----------------------------------------------

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def canon(self, raw):
        """Normalize a raw payload into canonical form (validating it)."""
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b):
        return a == b

    def hash_payload(self, a):
        return hash(a)

    def is_zero(self, a):
        return self.eq(a, self.zero)

    def from_int(self, n):
        """The image of the integer n, i.e. n . 1."""
        return int_scale_payload(self, n, self.one)

    # -- units ---------------------------------------------------------

    def try_inverse(self, a):
        """Multiplicative inverse payload, or None when a is not a unit."""
        raise NotImplementedError

    def is_unit(self, a):
        return self.try_inverse(a) is not None

    def inverse(self, a):
        inv = self.try_inverse(a)
        if inv is None:
            raise NotInvertible(f"{self.show(a)} is not a unit in {self.name()}")
        return inv

    def is_nilpotent(self, a):
        # Repeated squaring reaches 0 iff some power does.
        if self.is_domain:
            return self.is_zero(a)
        if self.is_finite:
            seen = set()
            x = a
            while True:
                if self.is_zero(x):
                    return True
                h = self.hash_payload(x)
                if h in seen:
                    return False
                seen.add(h)
                x = self.mul(x, x)
        raise RingError(f"cannot decide nilpotence in {self.name()}")

    # -- size ------------------------------------------------------------

    def cardinality(self):
        """Number of elements, or None when infinite."""
        return None

    def elements(self):
        """Iterator over all payloads in deterministic order."""
        raise InfiniteRing(f"{self.name()} is not finite")

    def characteristic(self):
        raise NotImplementedError

    # -- Euclidean hooks (Z, polynomials over a field, Gaussian integers;
    #    fields get the trivial division for free)

    def divmod_(self, a, b):
        if self.is_field:
            if self.is_zero(b):
                raise DivisionByZero("division by zero")
            return self.mul(a, self.inverse(b)), self.zero
        raise ContextNotEuclidean(f"no division with remainder in {self.name()}")

    def euclid_size(self, a):
        if self.is_field:
            return 0 if self.is_zero(a) else 1
        raise ContextNotEuclidean(f"no Euclidean size in {self.name()}")

    def canon_unit(self, a):
        """Unit u such that u*a is the canonical associate of a."""
        if self.is_field:
            return self.one if self.is_zero(a) else self.inverse(a)
        raise ContextNotEuclidean(f"no canonical associate in {self.name()}")

    # -- text ---------------------------------------------------------

    def symbols(self):
        """Named payloads usable in expression literals (i, j, k, s, x)."""
        return {}

    def parse(self, text):
        raise NotImplementedError

    def show(self, a):
        raise NotImplementedError

    # -- Element conveniences -------------------------------------------

    def element(self, raw):
        return Element(self, self.canon(raw))

    def embed(self, n):
        return Element(self, self.from_int(n))

    def parse_element(self, text):
        return Element(self, self.parse(text))


class Element:
    """One value of one ring context, with operator sugar.

    Mixed-context arithmetic raises ContextMismatch; ints coerce through
    the context's from_int.
    """

    __slots__ = ("ctx", "val")

    def __init__(self, ctx, val):
        self.ctx = ctx
        self.val = val

    def _coerce(self, other):
        if isinstance(other, Element):
            if other.ctx != self.ctx:
                raise ContextMismatch(
                    f"{self.ctx.name()} vs {other.ctx.name()}")
            return other.val
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ctx, self.ctx.add(self.val, v))

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ctx, self.ctx.sub(self.val, v))

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ctx, self.ctx.sub(v, self.val))

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ctx, self.ctx.mul(self.val, v))

    def __rmul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ctx, self.ctx.mul(v, self.val))

    def __neg__(self):
        return Element(self.ctx, self.ctx.neg(self.val))

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ctx, self.ctx.mul(self.val, self.ctx.inverse(v)))

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return Element(self.ctx, self.ctx.mul(v, self.ctx.inverse(self.val)))

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        return Element(self.ctx, ring_pow_payload(self.ctx, self.val, n))

    def __divmod__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        q, r = self.ctx.divmod_(self.val, v)
        return Element(self.ctx, q), Element(self.ctx, r)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Element):
            return self.ctx == other.ctx and self.ctx.eq(self.val, other.val)
        if isinstance(other, int):
            return self.ctx.eq(self.val, self.ctx.from_int(other))
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.ctx.hash_payload(self.val)))

    def __bool__(self):
        return not self.ctx.is_zero(self.val)

    def __repr__(self):
        return self.ctx.show(self.val)

    def is_unit(self):
        return self.ctx.is_unit(self.val)

    def inverse(self):
        return Element(self.ctx, self.ctx.inverse(self.val))


# ----------------------------------------------------------------- generic

def ring_pow_payload(ctx, a, n):
    """a**n by binary exponentiation; a**0 is one; negative n inverts."""
    if n < 0:
        return ring_pow_payload(ctx, ctx.inverse(a), -n)
    result = ctx.one
    base = a
    while n:
        if n & 1:
            result = ctx.mul(result, base)
        base = ctx.mul(base, base)
        n >>= 1
    return result


def ring_pow(x, n):
    return Element(x.ctx, ring_pow_payload(x.ctx, x.val, n))


def int_scale_payload(ctx, n, a):
    """n . a = a + ... + a (n times), by binary doubling; negative n negates."""
    if n < 0:
        return ctx.neg(int_scale_payload(ctx, -n, a))
    result = ctx.zero
    base = a
    while n:
        if n & 1:
            result = ctx.add(result, base)
        base = ctx.add(base, base)
        n >>= 1
    return result


def int_scale(n, x):
    return Element(x.ctx, int_scale_payload(x.ctx, n, x.val))


def characteristic(ctx):
    """Least m > 0 with m . 1 = 0, or 0 when no such m exists."""
    return ctx.characteristic()


def frobenius(x):
    """The p-th power map in a commutative context of prime characteristic."""
    ctx = x.ctx
    if not ctx.is_commutative:
        raise NotPrimeCharacteristic(f"{ctx.name()} is not commutative")
    p = ctx.characteristic()
    if not is_prime(p):
        raise NotPrimeCharacteristic(
            f"characteristic of {ctx.name()} is {p}, not prime")
    return ring_pow(x, p)


def enumerate_elements(ctx):
    """All elements of a finite context, deterministic order, capped."""
    if not ctx.is_finite:
        raise InfiniteRing(f"{ctx.name()} is not finite")
    n = ctx.cardinality()
    if n is not None and n > ENUMERATION_CAP:
        raise TooLarge(f"|{ctx.name()}| = {n} exceeds the enumeration cap")
    return [Element(ctx, v) for v in ctx.elements()]


@dataclass(frozen=True)
class Classification:
    units: tuple
    zero_divisors: tuple
    nilpotents: tuple
    idempotents: tuple


def units_of(ctx):
    """Units by definition-checking: a with a.b = b.a = 1 for some b.

    The trivial ring has no units under the usual 1 != 0 convention.
    """
    if ctx.is_zero(ctx.one):
        return ()
    elems = [e.val for e in enumerate_elements(ctx)]
    out = []
    for a in elems:
        for b in elems:
            if ctx.eq(ctx.mul(a, b), ctx.one) and ctx.eq(ctx.mul(b, a), ctx.one):
                out.append(a)
                break
    return tuple(Element(ctx, a) for a in out)


def zero_divisors_of(ctx):
    """Nonzero a annihilating some nonzero b on either side."""
    elems = [e.val for e in enumerate_elements(ctx)]
    out = []
    for a in elems:
        if ctx.is_zero(a):
            continue
        for b in elems:
            if ctx.is_zero(b):
                continue
            if ctx.is_zero(ctx.mul(a, b)) or ctx.is_zero(ctx.mul(b, a)):
                out.append(a)
                break
    return tuple(Element(ctx, a) for a in out)


def nilpotents_of(ctx):
    return tuple(e for e in enumerate_elements(ctx)
                 if ctx.is_nilpotent(e.val))


def idempotents_of(ctx):
    return tuple(e for e in enumerate_elements(ctx)
                 if ctx.eq(ctx.mul(e.val, e.val), e.val))


def classify(ctx):
    """Exhaustive unit/zero-divisor/nilpotent/idempotent classification."""
    return Classification(
        units=units_of(ctx),
        zero_divisors=zero_divisors_of(ctx),
        nilpotents=nilpotents_of(ctx),
        idempotents=idempotents_of(ctx),
    )


# ----------------------------------------------------------------- products

class ProductRing(RingContext):
    """Finite direct product with componentwise operations.

    Payload: tuple of component payloads.  Units are the componentwise
    units; the characteristic is the lcm of the component characteristics,
    absorbing 0.
    """

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise RingError("empty product")
        self.components = components

    def _key(self):
        return self.components

    def name(self):
        return "Prod(" + ",".join(c.name() for c in self.components) + ")"

    @property
    def is_commutative(self):
        return all(c.is_commutative for c in self.components)

    @property
    def is_domain(self):
        if len(self.components) == 1:
            return self.components[0].is_domain
        return False

    @property
    def is_gcd_domain(self):
        return len(self.components) == 1 and self.components[0].is_gcd_domain

    @property
    def is_euclidean(self):
        return len(self.components) == 1 and self.components[0].is_euclidean

    @property
    def is_field(self):
        return len(self.components) == 1 and self.components[0].is_field

    @property
    def is_finite(self):
        return all(c.is_finite for c in self.components)

    @property
    def zero(self):
        return tuple(c.zero for c in self.components)

    @property
    def one(self):
        return tuple(c.one for c in self.components)

    def canon(self, raw):
        raw = tuple(raw)
        if len(raw) != len(self.components):
            raise ContextMismatch("component count mismatch")
        return tuple(c.canon(v) for c, v in zip(self.components, raw))

    def add(self, a, b):
        return tuple(c.add(x, y) for c, x, y in zip(self.components, a, b))

    def neg(self, a):
        return tuple(c.neg(x) for c, x in zip(self.components, a))

    def mul(self, a, b):
        return tuple(c.mul(x, y) for c, x, y in zip(self.components, a, b))

    def eq(self, a, b):
        return all(c.eq(x, y) for c, x, y in zip(self.components, a, b))

    def hash_payload(self, a):
        return hash(tuple(c.hash_payload(x) for c, x in zip(self.components, a)))

    def from_int(self, n):
        return tuple(c.from_int(n) for c in self.components)

    def try_inverse(self, a):
        invs = []
        for c, x in zip(self.components, a):
            ix = c.try_inverse(x)
            if ix is None:
                return None
            invs.append(ix)
        return tuple(invs)

    def is_nilpotent(self, a):
        return all(c.is_nilpotent(x) for c, x in zip(self.components, a))

    def cardinality(self):
        total = 1
        for c in self.components:
            n = c.cardinality()
            if n is None:
                return None
            total *= n
        return total

    def elements(self):
        return itertools.product(*(c.elements() for c in self.components))

    def characteristic(self):
        m = 1
        for c in self.components:
            k = c.characteristic()
            if k == 0:
                return 0
            # lcm accumulation
            g, a = m, k
            while a:
                g, a = a, g % a
            m = m * k // g
        return m

    def parse(self, text):
        from .parsing import split_top
        from .errors import ParseError
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise ParseError(f"product literal must be parenthesized: {text!r}")
        parts = split_top(text[1:-1], ",")
        if len(parts) != len(self.components):
            raise ParseError("component count mismatch")
        return tuple(c.parse(p) for c, p in zip(self.components, parts))

    def show(self, a):
        return "(" + ",".join(c.show(x) for c, x in zip(self.components, a)) + ")"


def product_ring(contexts):
    return ProductRing(contexts)
