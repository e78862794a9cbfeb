"""Quotients of Euclidean contexts by a principal ideal.

A QuotientRing stores the canonically associated modulus m and keeps
every payload as the remainder of division by m, which is a unique
coset representative in all three Euclidean contexts (least nonnegative
residue in Z, remainder of lower degree for polynomials, the
nearest-integer remainder for Gaussian integers, whose rounding is
translation invariant).  Units invert through the extended Euclidean
algorithm on representatives.

iso_check_crt tests the splitting Z/n = Z/f1 x ... x Z/fr by brute
force: the factors must multiply to n, and the residue map is checked
for bijectivity on all of Z/n and for respecting + and * (every pair
for small n, a seeded sample otherwise).
"""

import itertools
import random

from .algebra import Element, RingContext
from .errors import (
    ContextNotEuclidean,
    FactorsMismatch,
    InfiniteRing,
    InvalidParameters,
    NotInvertible,
    RingError,
    TooLarge,
)
from .euclid import xgcd_payload
from .intutil import is_prime
from .number_rings import IntegerRing, ModRing, QuadIntRing
from .poly import PolyRing

ISO_CHECK_CAP = 10**4


class QuotientRing(RingContext):
    """base modulo the principal ideal of a nonzero non-unit."""

    def __init__(self, base, modulus):
        if not isinstance(base, RingContext):
            raise RingError(f"expected a ring context, got {base!r}")
        if not base.is_euclidean:
            raise ContextNotEuclidean(
                f"{base.name()} has no Euclidean division")
        m = modulus.val if isinstance(modulus, Element) else base.canon(modulus)
        if base.is_zero(m):
            raise InvalidParameters("modulus must be nonzero")
        if base.is_unit(m):
            raise InvalidParameters("modulus must not be a unit")
        self.base = base
        self.modulus = base.mul(base.canon_unit(m), m)

    def _key(self):
        return ("Quot", self.base, self.modulus)

    def name(self):
        return f"Quot({self.base.name()},{self.base.show(self.modulus)})"

    def _reduce(self, x):
        return self.base.divmod_(x, self.modulus)[1]

    @property
    def is_commutative(self):
        return self.base.is_commutative

    @property
    def is_field(self):
        return self._modulus_is_prime()

    @property
    def is_euclidean(self):
        return self._modulus_is_prime()

    @property
    def is_gcd_domain(self):
        return self._modulus_is_prime()

    @property
    def is_domain(self):
        # in these principal ideal contexts nonzero primes are maximal
        return self._modulus_is_prime()

    def _modulus_is_prime(self):
        base, m = self.base, self.modulus
        if isinstance(base, IntegerRing):
            return is_prime(m)
        if isinstance(base, PolyRing):
            coeff = base.base
            deg = len(m) - 1
            if deg == 1:
                return True
            if isinstance(coeff, ModRing) and coeff.is_field:
                from .factor import poly_is_irreducible_fp

                return poly_is_irreducible_fp(Element(base, m))
            from .number_rings import RationalField

            if isinstance(coeff, RationalField) and deg in (2, 3):
                from .factor import rational_roots

                return not rational_roots(Element(base, m))
            return False
        if isinstance(base, QuadIntRing) and base.d == -1:
            n = base.norm(m)
            if is_prime(n):
                return True
            a, b = m
            if a == 0 or b == 0:
                p = abs(a) or abs(b)
                return is_prime(p) and p % 4 == 3
            return False
        return False

    @property
    def is_finite(self):
        base = self.base
        if isinstance(base, IntegerRing):
            return True
        if isinstance(base, PolyRing):
            return base.base.is_finite
        if isinstance(base, QuadIntRing):
            return True
        return base.is_finite

    @property
    def zero(self):
        return self._reduce(self.base.zero)

    @property
    def one(self):
        return self._reduce(self.base.one)

    def canon(self, raw):
        return self._reduce(self.base.canon(raw))

    def add(self, a, b):
        return self._reduce(self.base.add(a, b))

    def neg(self, a):
        return self._reduce(self.base.neg(a))

    def mul(self, a, b):
        return self._reduce(self.base.mul(a, b))

    def eq(self, a, b):
        return self.base.eq(a, b)

    def hash_payload(self, a):
        return self.base.hash_payload(a)

    def from_int(self, n):
        return self._reduce(self.base.from_int(n))

    def try_inverse(self, a):
        g, x, _ = xgcd_payload(self.base, a, self.modulus)
        u = self.base.try_inverse(g)
        if u is None:
            return None
        return self._reduce(self.base.mul(x, u))

    def is_nilpotent(self, a):
        base = self.base
        if isinstance(base, PolyRing) and base.base.characteristic() == 0:
            from .euclid import gcd_payload
            from .poly import derivative

            m = Element(base, self.modulus)
            rad = base.divmod_(
                self.modulus,
                gcd_payload(base, self.modulus, derivative(m).val))[0]
            return base.is_zero(base.divmod_(a, rad)[1])
        return super().is_nilpotent(a)

    def characteristic(self):
        base = self.base
        if isinstance(base, IntegerRing):
            return self.modulus
        if isinstance(base, PolyRing):
            return base.characteristic()
        x = self.one
        k = 1
        cap = self.cardinality() or 10**6
        while not base.is_zero(x):
            x = self.add(x, self.one)
            k += 1
            if k > cap + 1:
                raise RingError("failed to find the additive order of 1")
        return k

    def cardinality(self):
        base = self.base
        if isinstance(base, IntegerRing):
            return self.modulus
        if isinstance(base, PolyRing):
            q = base.base.cardinality()
            return None if q is None else q ** (len(self.modulus) - 1)
        if isinstance(base, QuadIntRing) and base.d == -1:
            return base.norm(self.modulus)
        return None

    def elements(self):
        base = self.base
        if isinstance(base, IntegerRing):
            return iter(range(self.modulus))
        if isinstance(base, PolyRing):
            coeff = base.base
            if not coeff.is_finite:
                raise InfiniteRing(f"{self.name()} is not finite")
            d = len(self.modulus) - 1
            pool = list(coeff.elements())

            def gen():
                for tup in itertools.product(pool, repeat=d):
                    yield base._strip(tuple(reversed(tup)))

            return gen()
        if isinstance(base, QuadIntRing) and base.d == -1:
            n = base.norm(self.modulus)

            def gen():
                seen = set()
                for a in range(n):
                    for b in range(n):
                        r = self._reduce((a, b))
                        if r not in seen:
                            seen.add(r)
                            yield r

            return gen()
        raise InfiniteRing(f"cannot enumerate {self.name()}")

    def symbols(self):
        return {
            name: self._reduce(payload)
            for name, payload in self.base.symbols().items()
        }

    def parse(self, text):
        return self._reduce(self.base.parse(text))

    def show(self, a):
        return self.base.show(a)


def quotient_ring(base, modulus):
    return QuotientRing(base, modulus)


def q_reduce(qctx, x):
    if isinstance(x, Element):
        if x.ctx != qctx.base:
            raise RingError("element does not live in the quotient's base")
        return Element(qctx, qctx._reduce(x.val))
    return Element(qctx, qctx.canon(x))


def q_lift(x):
    """The canonical representative, as an element of the base."""
    return Element(x.ctx.base, x.val)


def q_is_unit(x):
    return x.ctx.is_unit(x.val)


def q_inverse(x):
    inv = x.ctx.try_inverse(x.val)
    if inv is None:
        from .euclid import gcd_payload

        g = gcd_payload(x.ctx.base, x.val, x.ctx.modulus)
        raise NotInvertible(
            f"{x!r} shares the factor {x.ctx.base.show(g)} with the modulus",
            gcd=Element(x.ctx.base, g))
    return Element(x.ctx, inv)


def q_cardinality(qctx):
    return qctx.cardinality()


def iso_check_crt(n, factors, sample=200):
    """Does x -> (x mod f_i) identify Z/n with the product of the Z/f_i?"""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameters(f"need a positive modulus, got {n!r}")
    factors = list(factors)
    if not factors:
        raise FactorsMismatch("no factors given")
    prod = 1
    for f in factors:
        if not isinstance(f, int) or f < 1:
            raise InvalidParameters(f"bad factor {f!r}")
        prod *= f
    if prod != n:
        raise FactorsMismatch(f"factors multiply to {prod}, not {n}")
    if n > ISO_CHECK_CAP:
        raise TooLarge(f"{n} exceeds the iso-check cap {ISO_CHECK_CAP}")

    def phi(x):
        return tuple(x % f for f in factors)

    images = {phi(x) for x in range(n)}
    if len(images) != n:
        return False
    pairs = itertools.product(range(n), repeat=2)
    if n > 100:
        rng = random.Random(0)
        pairs = ((rng.randrange(n), rng.randrange(n)) for _ in range(sample))
    for x, y in pairs:
        fx, fy = phi(x), phi(y)
        if phi((x + y) % n) != tuple(
                (a + b) % f for a, b, f in zip(fx, fy, factors)):
            return False
        if phi((x * y) % n) != tuple(
                (a * b) % f for a, b, f in zip(fx, fy, factors)):
            return False
    return True


def ideal_divisor_lattice(n):
    """All ideals of Z/n as divisor generators, with prime/maximal flags."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameters(f"need a positive modulus, got {n!r}")
    out = []
    for d in range(1, n + 1):
        if n % d == 0:
            flag = is_prime(d)
            out.append((d, flag, flag))
    return out
