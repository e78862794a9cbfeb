"""Numeric contexts: Z, Q, Z/n, quadratic rings and fields, quaternions.

Payload conventions:

  * IntegerRing       -- int
  * RationalField     -- fractions.Fraction (always reduced by the stdlib)
  * ModRing(n)        -- int in range(n)
  * QuadIntRing(d)    -- pair (a, b) of ints meaning a + b*sqrt(d)
  * QuadFieldRing(d)  -- pair (a, b) of Fractions
  * QuaternionAlgebra -- 4-tuple of Fractions (coefficients of 1, i, j, k)

d must be squarefree and not 1.  QuadIntRing(-1) is the Gaussian
integers and is the only quadratic integer context that carries the
Euclidean hooks; its canonical gcd representative is the associate in
the first quadrant (positive real part, nonnegative imaginary part).
"""

import itertools
import math
from fractions import Fraction

from .algebra import Element, RingContext
from .errors import (
    DivisionByZero,
    InvalidParameters,
    NotInvertible,
    ParseError,
    RingError,
)
from .intutil import is_prime, is_squarefree


class IntegerRing(RingContext):
    """The rational integers with ordinary division-with-remainder."""

    is_commutative = True
    is_domain = True
    is_gcd_domain = True
    is_euclidean = True

    def _key(self):
        return ("Z",)

    def name(self):
        return "Z"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def canon(self, raw):
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise RingError(f"expected an integer, got {raw!r}")
        return raw

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return n

    def try_inverse(self, a):
        return a if a in (1, -1) else None

    def characteristic(self):
        return 0

    def divmod_(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        q, r = divmod(a, b)
        if r < 0:
            # divmod already gives 0 <= r < |b| for b > 0; fix b < 0
            q += 1
            r -= b
        return q, r

    def euclid_size(self, a):
        return abs(a)

    def canon_unit(self, a):
        return -1 if a < 0 else 1

    def parse(self, text):
        try:
            return int(text)
        except ValueError:
            raise ParseError(f"not an integer literal: {text!r}")

    def show(self, a):
        return str(a)


class RationalField(RingContext):
    """The field of rational numbers, backed by fractions.Fraction."""

    is_commutative = True
    is_domain = True
    is_gcd_domain = True
    is_euclidean = True
    is_field = True

    def _key(self):
        return ("Q",)

    def name(self):
        return "Q"

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def canon(self, raw):
        if isinstance(raw, bool):
            raise RingError(f"expected a rational, got {raw!r}")
        if isinstance(raw, int):
            return Fraction(raw)
        if isinstance(raw, Fraction):
            return raw
        raise RingError(f"expected a rational, got {raw!r}")

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def from_int(self, n):
        return Fraction(n)

    def try_inverse(self, a):
        return None if a == 0 else 1 / a

    def characteristic(self):
        return 0

    def parse(self, text):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational literal: {text!r}")

    def show(self, a):
        return str(a)


class ModRing(RingContext):
    """Integers modulo n, with canonical residues in range(n)."""

    is_commutative = True
    is_finite = True

    def __init__(self, n):
        if not isinstance(n, int) or n < 1:
            raise InvalidParameters(f"modulus must be a positive integer, got {n!r}")
        self.n = n
        self._prime = is_prime(n)

    @property
    def is_field(self):
        return self._prime

    @property
    def is_euclidean(self):
        return self._prime

    @property
    def is_gcd_domain(self):
        return self._prime

    @property
    def is_domain(self):
        return self._prime

    def _key(self):
        return ("Mod", self.n)

    def name(self):
        return f"Fp:{self.n}" if self._prime else f"Zn:{self.n}"

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1 % self.n

    def canon(self, raw):
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise RingError(f"expected an integer residue, got {raw!r}")
        return raw % self.n

    def add(self, a, b):
        return (a + b) % self.n

    def neg(self, a):
        return -a % self.n

    def mul(self, a, b):
        return (a * b) % self.n

    def from_int(self, n):
        return n % self.n

    def try_inverse(self, a):
        if math.gcd(a, self.n) != 1:
            return None
        return pow(a, -1, self.n)

    def inverse(self, a):
        g = math.gcd(a % self.n, self.n)
        if g != 1:
            raise NotInvertible(
                f"{a % self.n} is not invertible modulo {self.n} "
                f"(gcd {g})", gcd=g)
        return pow(a, -1, self.n)

    def is_nilpotent(self, a):
        # a is nilpotent mod n exactly when every prime of n divides a
        x = a % self.n
        for _ in range(self.n.bit_length() + 1):
            if x == 0:
                return True
            x = (x * x) % self.n
        return x == 0

    def characteristic(self):
        return self.n

    def cardinality(self):
        return self.n

    def elements(self):
        return iter(range(self.n))

    def parse(self, text):
        try:
            return int(text) % self.n
        except ValueError:
            raise ParseError(f"not an integer literal: {text!r}")

    def show(self, a):
        return str(a % self.n)


class QuadIntRing(RingContext):
    """Z[sqrt(d)] for squarefree d != 1, elements a + b*sqrt(d)."""

    is_commutative = True
    is_domain = True

    def __init__(self, d):
        if not isinstance(d, int) or d == 1 or not is_squarefree(d):
            raise InvalidParameters(f"d must be a squarefree integer != 1, got {d!r}")
        self.d = d

    @property
    def is_euclidean(self):
        return self.d == -1

    @property
    def is_gcd_domain(self):
        return self.d == -1

    def _key(self):
        return ("QuadInt", self.d)

    def name(self):
        return f"Quad:{self.d}"

    @property
    def zero(self):
        return (0, 0)

    @property
    def one(self):
        return (1, 0)

    def canon(self, raw):
        try:
            a, b = raw
        except (TypeError, ValueError):
            raise RingError(f"expected a coefficient pair, got {raw!r}")
        if not isinstance(a, int) or not isinstance(b, int):
            raise RingError(f"expected integer coefficients, got {raw!r}")
        return (a, b)

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def neg(self, x):
        return (-x[0], -x[1])

    def mul(self, x, y):
        a, b = x
        c, e = y
        return (a * c + self.d * b * e, a * e + b * c)

    def from_int(self, n):
        return (n, 0)

    def norm(self, x):
        a, b = x
        return a * a - self.d * b * b

    def conj(self, x):
        return (x[0], -x[1])

    def try_inverse(self, x):
        n = self.norm(x)
        if n == 1:
            return self.conj(x)
        if n == -1:
            return self.neg(self.conj(x))
        return None

    def characteristic(self):
        return 0

    def divmod_(self, x, y):
        if self.d != -1:
            return super().divmod_(x, y)
        if y == (0, 0):
            raise DivisionByZero("division by zero")
        n = self.norm(y)
        num = self.mul(x, self.conj(y))
        # nearest integer to t/n, ties broken upward: floor(t/n + 1/2)
        q = tuple((2 * t + n) // (2 * n) for t in num)
        r = self.sub(x, self.mul(q, y))
        return q, r

    def euclid_size(self, x):
        return self.norm(x)

    def canon_unit(self, x):
        if self.d != -1:
            return super().canon_unit(x)
        if x == (0, 0):
            return (1, 0)
        for u in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            a, b = self.mul(u, x)
            if a > 0 and b >= 0:
                return u
        raise RingError("unreachable: no first-quadrant associate")

    def symbols(self):
        sym = (0, 1)
        names = {"s": sym}
        if self.d == -1:
            names["i"] = sym
        return names

    def parse(self, text):
        from .parsing import eval_expr

        return eval_expr(self, text, self.symbols())

    def show(self, x):
        return _show_quad(x, "i" if self.d == -1 else "s")


class QuadFieldRing(RingContext):
    """Q(sqrt(d)) for squarefree d != 1, with Fraction coefficients."""

    is_commutative = True
    is_domain = True
    is_gcd_domain = True
    is_euclidean = True
    is_field = True

    def __init__(self, d):
        if not isinstance(d, int) or d == 1 or not is_squarefree(d):
            raise InvalidParameters(f"d must be a squarefree integer != 1, got {d!r}")
        self.d = d

    def _key(self):
        return ("QuadField", self.d)

    def name(self):
        return f"QuadF:{self.d}"

    @property
    def zero(self):
        return (Fraction(0), Fraction(0))

    @property
    def one(self):
        return (Fraction(1), Fraction(0))

    def canon(self, raw):
        try:
            a, b = raw
        except (TypeError, ValueError):
            raise RingError(f"expected a coefficient pair, got {raw!r}")
        return (Fraction(a), Fraction(b))

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def neg(self, x):
        return (-x[0], -x[1])

    def mul(self, x, y):
        a, b = x
        c, e = y
        return (a * c + self.d * b * e, a * e + b * c)

    def from_int(self, n):
        return (Fraction(n), Fraction(0))

    def norm(self, x):
        a, b = x
        return a * a - self.d * b * b

    def conj(self, x):
        return (x[0], -x[1])

    def try_inverse(self, x):
        n = self.norm(x)
        if n == 0:
            return None
        return (x[0] / n, -x[1] / n)

    def characteristic(self):
        return 0

    def symbols(self):
        sym = (Fraction(0), Fraction(1))
        names = {"s": sym}
        if self.d == -1:
            names["i"] = sym
        return names

    def parse(self, text):
        from .parsing import eval_expr

        return eval_expr(self, text, self.symbols())

    def show(self, x):
        return _show_quad(x, "i" if self.d == -1 else "s")


def _show_quad(x, sym):
    a, b = x
    if b == 0:
        return str(a)
    if b == 1:
        bpart = sym
    elif b == -1:
        bpart = f"-{sym}"
    else:
        bstr = str(b)
        bpart = f"{bstr}*{sym}"
    if a == 0:
        return bpart
    joiner = "+" if not bpart.startswith("-") else ""
    return f"{a}{joiner}{bpart}"


class QuaternionAlgebra(RingContext):
    """Hamilton's quaternions over Q: a noncommutative division ring."""

    is_commutative = False

    def _key(self):
        return ("H",)

    def name(self):
        return "H"

    @property
    def zero(self):
        z = Fraction(0)
        return (z, z, z, z)

    @property
    def one(self):
        z = Fraction(0)
        return (Fraction(1), z, z, z)

    def canon(self, raw):
        try:
            a, b, c, d = raw
        except (TypeError, ValueError):
            raise RingError(f"expected four coefficients, got {raw!r}")
        return (Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    def add(self, x, y):
        return tuple(p + q for p, q in zip(x, y))

    def neg(self, x):
        return tuple(-p for p in x)

    def mul(self, x, y):
        a1, b1, c1, d1 = x
        a2, b2, c2, d2 = y
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def from_int(self, n):
        z = Fraction(0)
        return (Fraction(n), z, z, z)

    def norm_sq(self, x):
        return sum(p * p for p in x)

    def conj(self, x):
        return (x[0], -x[1], -x[2], -x[3])

    def try_inverse(self, x):
        n = self.norm_sq(x)
        if n == 0:
            return None
        return tuple(p / n for p in self.conj(x))

    def is_nilpotent(self, x):
        return self.is_zero(x)

    def characteristic(self):
        return 0

    def symbols(self):
        z = Fraction(0)
        o = Fraction(1)
        return {
            "i": (z, o, z, z),
            "j": (z, z, o, z),
            "k": (z, z, z, o),
        }

    def parse(self, text):
        from .parsing import eval_expr

        return eval_expr(self, text, self.symbols())

    def show(self, x):
        parts = []
        for coef, sym in zip(x, ("", "i", "j", "k")):
            if coef == 0:
                continue
            if sym == "":
                parts.append(str(coef))
            elif coef == 1:
                parts.append(sym)
            elif coef == -1:
                parts.append(f"-{sym}")
            else:
                parts.append(f"{coef}*{sym}")
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out


ZZ = IntegerRing()
QQ = RationalField()
HH = QuaternionAlgebra()

GAUSSIAN = QuadIntRing(-1)


def mod_inv(x):
    """Inverse of a unit in Z/n; raises NotInvertible with the gcd witness."""
    if not isinstance(x.ctx, ModRing):
        raise RingError("mod_inv needs an element of some Z/n")
    return Element(x.ctx, x.ctx.inverse(x.val))


def field_div(x, y):
    """Division in Z/p for prime p."""
    ctx = x.ctx
    if not isinstance(ctx, ModRing):
        raise RingError("field_div needs elements of some Z/p")
    if not ctx.is_field:
        from .errors import NotAField

        raise NotAField(f"{ctx.name()} is not a field")
    if y.ctx != ctx:
        from .errors import ContextMismatch

        raise ContextMismatch(f"{x.ctx.name()} vs {y.ctx.name()}")
    if y.val == 0:
        raise DivisionByZero("division by zero")
    return x * y.inverse()


def euler_phi(n):
    """Count of units in Z/n."""
    if not isinstance(n, int) or n < 1:
        raise InvalidParameters(f"need a positive integer, got {n!r}")
    result = 1
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            result *= (p - 1) * p ** (e - 1)
        p += 1 if p == 2 else 2
    if m > 1:
        result *= m - 1
    return result


def _quad_ctx(x):
    if not isinstance(x.ctx, (QuadIntRing, QuadFieldRing)):
        raise RingError("expected an element of a quadratic ring or field")
    return x.ctx


def quad_norm(x):
    """Multiplicative norm a^2 - d*b^2 as a plain int or Fraction."""
    return _quad_ctx(x).norm(x.val)


def quad_conj(x):
    return Element(x.ctx, _quad_ctx(x).conj(x.val))


def quad_is_unit(x):
    return _quad_ctx(x).try_inverse(x.val) is not None


def quad_inverse(x):
    inv = _quad_ctx(x).try_inverse(x.val)
    if inv is None:
        raise NotInvertible(f"{x!r} has norm {quad_norm(x)}, not a unit")
    return Element(x.ctx, inv)


def imaginary_unit_group(d):
    """All units of Z[sqrt(d)] for d < 0, by norm-equation exhaustion."""
    if not isinstance(d, int) or d >= 0:
        raise InvalidParameters(f"need a negative squarefree d, got {d!r}")
    ctx = QuadIntRing(d)
    units = [(1, 0), (-1, 0)]
    b = 1
    while -d * b * b <= 1:
        if -d * b * b == 1:
            units.extend([(0, b), (0, -b)])
        b += 1
    return [Element(ctx, u) for u in units]


def _quad_real_less(u, v, d):
    # compare a1 + b1*sqrt(d) < a2 + b2*sqrt(d) exactly, d > 0
    p = u[0] - v[0]
    q = u[1] - v[1]
    # sign of p + q*sqrt(d)
    if p >= 0 and q >= 0:
        return False
    if p <= 0 and q <= 0:
        return p != 0 or q != 0
    if q > 0:
        return p * p > q * q * d
    return p * p < q * q * d


def fundamental_unit_search(d, bound):
    """Smallest unit greater than 1 in Z[sqrt(d)], d > 1, within a box."""
    if not isinstance(d, int) or d <= 1 or not is_squarefree(d):
        raise InvalidParameters(f"need a squarefree d > 1, got {d!r}")
    if bound < 1:
        raise InvalidParameters("bound must be at least 1")
    ctx = QuadIntRing(d)
    best = None
    for b in range(1, bound + 1):
        for a in range(0, bound + 1):
            if abs(a * a - d * b * b) == 1:
                cand = (a, b)
                if best is None or _quad_real_less(cand, best, d):
                    best = cand
    return None if best is None else Element(ctx, best)


def gaussian_divmod(x, y):
    """Nearest-integer quotient and remainder in Z[i], N(r) <= N(y)/2."""
    if x.ctx != GAUSSIAN or y.ctx != GAUSSIAN:
        raise RingError("gaussian_divmod needs Gaussian integers")
    q, r = GAUSSIAN.divmod_(x.val, y.val)
    return Element(GAUSSIAN, q), Element(GAUSSIAN, r)


def sum_of_two_squares(p):
    """Write prime p as a Gaussian integer a+bi with a^2+b^2 = p, or None."""
    if not is_prime(p):
        raise InvalidParameters(f"need a prime, got {p!r}")
    if p % 4 == 3:
        return None
    a = 0
    while a * a * 2 <= p:
        b2 = p - a * a
        b = math.isqrt(b2)
        if b * b == b2:
            return Element(GAUSSIAN, (a, b))
        a += 1
    return None


def quat_conj(x):
    return Element(HH, HH.conj(x.val))


def quat_norm_sq(x):
    return HH.norm_sq(x.val)


def quat_inverse(x):
    inv = HH.try_inverse(x.val)
    if inv is None:
        raise DivisionByZero("zero quaternion has no inverse")
    return Element(HH, inv)


def pythagorean_triple(m, n):
    """Classic parametrization (m^2-n^2, 2mn, m^2+n^2) for m > n > 0."""
    if not (isinstance(m, int) and isinstance(n, int) and m > n > 0):
        raise InvalidParameters("need integers m > n > 0")
    return (m * m - n * n, 2 * m * n, m * m + n * n)


def quat_from_pair(z, w):
    """Embed a pair of Gaussian integers as z + w*j."""
    if z.ctx != GAUSSIAN or w.ctx != GAUSSIAN:
        raise RingError("expected Gaussian integers")
    a, b = z.val
    c, d = w.val
    return Element(HH, HH.canon((a, b, c, d)))
