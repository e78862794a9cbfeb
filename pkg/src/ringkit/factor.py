"""Factorization by exhaustion and irreducibility certificates.

Everything here is exact and certificate-driven.  Integers factor by
trial division below a hard cap; polynomials over a prime field factor
against a cached sieve of monic irreducibles built degree by degree;
elements of imaginary quadratic rings are tested by exhausting the
divisors allowed by the norm.  For Z[x] and Q[x], where no complete
factorization is attempted, irreducibility is reported as a verdict
carrying a checkable certificate (Eisenstein after a shift, reduction
mod p, a rational root, a trial divisor) or as an honest INCONCLUSIVE.

verify_certificate replays any certificate against the element it
claims to describe, so a verdict never has to be taken on faith.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .algebra import Element
from .errors import (
    ConstantPolynomial,
    DegreeDrops,
    DegreeOutOfRange,
    InvalidParameters,
    NotAField,
    NotPrimitive,
    RingError,
    TooLarge,
    ZeroInput,
)
from .euclid import gcd_payload
from .intutil import is_prime, primes_up_to
from .number_rings import (
    QQ,
    ZZ,
    IntegerRing,
    ModRing,
    QuadIntRing,
    RationalField,
)
from .poly import PolyRing, derivative

TRIAL_DIVISION_CAP = 10**12
SIEVE_CANDIDATE_CAP = 10**6

DEFAULT_PRIME_BOUND = 50
DEFAULT_SHIFT_BOUND = 10
REDUCTION_PRIME_COUNT = 10


# --------------------------------------------------------------- results

@dataclass(frozen=True)
class Factorization:
    """unit * prod(factor^multiplicity) with payload-level parts."""

    ctx: object
    unit: object
    factors: tuple

    def value(self):
        acc = self.unit
        for f, m in self.factors:
            for _ in range(m):
                acc = self.ctx.mul(acc, f)
        return Element(self.ctx, acc)

    def __str__(self):
        parts = []
        if not self.ctx.eq(self.unit, self.ctx.one) or not self.factors:
            parts.append(self._piece(self.unit, 1, unit=True))
        for f, m in self.factors:
            parts.append(self._piece(f, m))
        return " * ".join(parts)

    def _piece(self, payload, mult, unit=False):
        text = self.ctx.show(payload)
        if isinstance(self.ctx, PolyRing) and not unit:
            text = f"({text})"
        return text if mult == 1 else f"{text}^{mult}"


@dataclass(frozen=True)
class IrreducibilityVerdict:
    """IRREDUCIBLE / REDUCIBLE / INCONCLUSIVE plus its certificate."""

    status: str
    cert: str | None = None
    data: tuple = ()

    def serialize(self):
        head = self.status.upper()
        if self.cert is None:
            return head
        parts = [f"cert={self.cert}"]
        parts.extend(f"{k}={v}" for k, v in self.data)
        return head + " " + " ".join(parts)

    def __str__(self):
        return self.serialize()

    @property
    def is_irreducible(self):
        return self.status == "irreducible"

    @property
    def is_reducible(self):
        return self.status == "reducible"

    @property
    def is_inconclusive(self):
        return self.status == "inconclusive"


def _irr(cert, **kv):
    return IrreducibilityVerdict(
        "irreducible", cert, tuple((k, str(v)) for k, v in kv.items()))


def _red(cert, **kv):
    return IrreducibilityVerdict(
        "reducible", cert, tuple((k, str(v)) for k, v in kv.items()))


INCONCLUSIVE = IrreducibilityVerdict("inconclusive")


# --------------------------------------------------------------- integers

def factor_integer(n):
    """Trial-division factorization of a nonzero integer below the cap."""
    if isinstance(n, Element):
        if not isinstance(n.ctx, IntegerRing):
            raise RingError("factor_integer needs an integer")
        n = n.val
    if not isinstance(n, int):
        raise RingError(f"factor_integer needs an integer, got {n!r}")
    if n == 0:
        raise ZeroInput("0 has no factorization into primes")
    if abs(n) > TRIAL_DIVISION_CAP:
        raise TooLarge(f"|{n}| exceeds the trial division cap")
    unit = -1 if n < 0 else 1
    m = abs(n)
    factors = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(ZZ, unit, tuple(factors))


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def squarefree_part_int(n):
    """Product of the primes dividing n to an odd power, positive."""
    fac = factor_integer(n)
    out = 1
    for p, e in fac.factors:
        if e % 2:
            out *= p
    return out


# ------------------------------------------------- prime-field polynomials

_IRR_CACHE = {}


def _irr_table(p, maxdeg):
    ctx = PolyRing(ModRing(p))
    table = _IRR_CACHE.setdefault(p, [])
    while len(table) < maxdeg:
        d = len(table) + 1
        if p ** d > SIEVE_CANDIDATE_CAP:
            raise TooLarge(
                f"sieving degree {d} over F_{p} needs {p ** d} candidates")
        divisors = [g for dd in range(1, d // 2 + 1) for g in table[dd - 1]]
        found = []
        for tup in itertools.product(range(p), repeat=d):
            cand = tup + (1,)
            if any(not ctx.divmod_(cand, g)[1] for g in divisors):
                continue
            found.append(cand)
        table.append(found)
    return table


def monic_irreducibles(p, maxdeg):
    """All monic irreducibles over F_p of degree 1..maxdeg, sieve order."""
    if not is_prime(p):
        raise InvalidParameters(f"{p} is not prime")
    if not isinstance(maxdeg, int) or maxdeg < 1:
        raise InvalidParameters(f"need a degree bound >= 1, got {maxdeg!r}")
    table = _irr_table(p, maxdeg)
    ctx = PolyRing(ModRing(p))
    return [Element(ctx, pl) for d in range(maxdeg) for pl in table[d]]


def _fp_poly_ctx(f):
    if (isinstance(f, Element) and isinstance(f.ctx, PolyRing)
            and isinstance(f.ctx.base, ModRing) and f.ctx.base.is_field):
        return f.ctx
    raise RingError("expected a polynomial over a prime field")


def _fp_divisor(f):
    """A monic irreducible proper divisor, or None when f is irreducible."""
    ctx = _fp_poly_ctx(f)
    deg = len(f.val) - 1
    if deg < 1:
        raise ConstantPolynomial("constants are not tested for divisors")
    monic = ctx.mul(ctx.canon_unit(f.val), f.val)
    table = _irr_table(ctx.base.n, max(deg // 2, 1))
    for d in range(1, deg // 2 + 1):
        for g in table[d - 1]:
            if not ctx.divmod_(monic, g)[1]:
                return g
    return None


def poly_is_irreducible_fp(f):
    return _fp_divisor(f) is None


def factor_poly_fp(f):
    """Complete factorization over a prime field, by sieve exhaustion."""
    ctx = _fp_poly_ctx(f)
    if not f.val:
        raise ZeroInput("0 has no factorization")
    unit = ctx._strip((f.val[-1],))
    work = ctx.mul(ctx.canon_unit(f.val), f.val)
    factors = []
    d = 1
    while 2 * d <= len(work) - 1:
        for g in _irr_table(ctx.base.n, d)[d - 1]:
            e = 0
            while True:
                q, r = ctx.divmod_(work, g)
                if r:
                    break
                work = q
                e += 1
            if e:
                factors.append((g, e))
            if 2 * d > len(work) - 1:
                break
        d += 1
    if len(work) - 1 >= 1:
        factors.append((work, 1))
    return Factorization(ctx, unit, tuple(factors))


# ----------------------------------------------------- Z[x] and Q[x] tools

def _z_poly_ctx(f):
    if (isinstance(f, Element) and isinstance(f.ctx, PolyRing)
            and isinstance(f.ctx.base, IntegerRing)):
        return f.ctx
    raise RingError("expected a polynomial with integer coefficients")


def _zq_poly(f):
    if isinstance(f, Element) and isinstance(f.ctx, PolyRing):
        if isinstance(f.ctx.base, (IntegerRing, RationalField)):
            return f.ctx
    raise RingError("expected a polynomial over Z or Q")


def content(f):
    """Positive gcd of the integer coefficients; the zero poly is refused."""
    _z_poly_ctx(f)
    if not f.val:
        raise ZeroInput("the zero polynomial has no content")
    g = 0
    for c in f.val:
        g = math.gcd(g, c)
    return g


def primitive_part(f):
    ctx = _z_poly_ctx(f)
    c = content(f)
    return Element(ctx, tuple(x // c for x in f.val))


def primitive_associate(f):
    """The primitive integer polynomial with positive lead, from Z or Q."""
    ctx = _zq_poly(f)
    if not f.val:
        raise ZeroInput("the zero polynomial has no primitive associate")
    if isinstance(ctx.base, IntegerRing):
        ints = list(f.val)
    else:
        scale = 1
        for c in f.val:
            scale = scale * c.denominator // math.gcd(scale, c.denominator)
        ints = [int(c * scale) for c in f.val]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    zctx = PolyRing(ZZ)
    return Element(zctx, tuple(ints))


def rational_roots(f):
    """All rational roots, ascending, via the rational root theorem."""
    _zq_poly(f)
    if not f.val:
        raise ZeroInput("every rational is a root of the zero polynomial")
    if len(f.val) == 1:
        return []
    g = primitive_associate(f)
    coeffs = list(g.val)
    roots = set()
    if coeffs[0] == 0:
        roots.add(Fraction(0))
        while coeffs[0] == 0:
            coeffs.pop(0)
    if len(coeffs) > 1:
        a0, an = abs(coeffs[0]), abs(coeffs[-1])
        for p in _divisors(a0):
            for q in _divisors(an):
                for cand in (Fraction(p, q), Fraction(-p, q)):
                    val = Fraction(0)
                    for c in reversed(coeffs):
                        val = val * cand + c
                    if val == 0:
                        roots.add(cand)
    return sorted(roots)


def low_degree_test(f):
    """Degree 2 and 3 over a field: reducible exactly when a root exists."""
    if not (isinstance(f, Element) and isinstance(f.ctx, PolyRing)):
        raise RingError("expected a polynomial element")
    base = f.ctx.base
    deg = len(f.val) - 1
    if deg not in (2, 3):
        raise DegreeOutOfRange(
            f"root existence decides irreducibility only in degree 2 and 3, "
            f"got degree {deg}")
    if isinstance(base, RationalField):
        found = rational_roots(f)
        if found:
            return _red("rational-root", root=found[0])
        return _irr("low-degree-no-root")
    if isinstance(base, ModRing) and base.is_field:
        from .poly import roots_over_finite

        found = roots_over_finite(f)
        if found:
            return _red("rational-root", root=found[0])
        return _irr("low-degree-no-root")
    raise NotAField(f"no root search implemented over {base.name()}")


def _shift_payload(ctx, coeffs, a):
    """Substitute x -> x + a."""
    shift = (ctx.base.from_int(a), ctx.base.one)
    acc = ()
    for c in reversed(coeffs):
        acc = ctx.add(ctx.mul(acc, shift), ctx._strip((c,)))
    return acc


def _eisenstein_holds(coeffs, p):
    if coeffs[-1] % p == 0:
        return False
    if any(c % p for c in coeffs[:-1]):
        return False
    return coeffs[0] % (p * p) != 0


def eisenstein_check(f, p):
    """Eisenstein's criterion at p, no shift."""
    _require_primitive(f)
    if not is_prime(p):
        raise InvalidParameters(f"{p} is not prime")
    if _eisenstein_holds(f.val, p):
        return _irr("eisenstein", p=p, shift=0)
    return INCONCLUSIVE


def _require_primitive(f):
    ctx = _z_poly_ctx(f)
    if len(f.val) < 2:
        raise ConstantPolynomial("need degree at least 1")
    if content(f) != 1:
        raise NotPrimitive("coefficients share a common factor")
    return ctx


def eisenstein_translate_search(f, prime_bound=DEFAULT_PRIME_BOUND,
                                shift_bound=DEFAULT_SHIFT_BOUND):
    """Try Eisenstein on f(x+a) for a = 0, 1, -1, ... within the bounds.

    Candidate primes for each shift are the primes up to the bound that
    divide the shifted constant term; shifts with constant term 0 prove
    reducibility is possible only through other routes and are skipped.
    """
    ctx = _require_primitive(f)
    primes = primes_up_to(prime_bound)
    shifts = [0]
    for a in range(1, shift_bound + 1):
        shifts.extend((a, -a))
    for a in shifts:
        g = _shift_payload(ctx, f.val, a) if a else f.val
        if g[0] == 0:
            continue
        for p in primes:
            if g[0] % p == 0 and _eisenstein_holds(g, p):
                return _irr("eisenstein", p=p, shift=a)
    return INCONCLUSIVE


def reduction_mod_p_check(f, p):
    """Irreducibility transfer from F_p when the degree is preserved."""
    _require_primitive(f)
    if not is_prime(p):
        raise InvalidParameters(f"{p} is not prime")
    if f.val[-1] % p == 0:
        raise DegreeDrops(f"{p} divides the leading coefficient")
    ctx = PolyRing(ModRing(p))
    g = Element(ctx, ctx.canon(f.val))
    if poly_is_irreducible_fp(g):
        return _irr("reduction", p=p)
    return INCONCLUSIVE


# ------------------------------------------------------------- squarefree

def squarefree_part(x):
    """The odd-multiplicity part: x = unit * square * squarefree_part.

    Integers get the product of their odd-power primes; polynomials over
    a prime field go through the complete factorization; over Q (or Z,
    mapped through Q) the decomposition comes from the gcd chain of f
    and f', which needs no factorization at all.
    """
    if isinstance(x, int) or (isinstance(x, Element)
                              and isinstance(x.ctx, IntegerRing)):
        return squarefree_part_int(x if isinstance(x, int) else x.val)
    if not (isinstance(x, Element) and isinstance(x.ctx, PolyRing)):
        raise RingError(f"no squarefree decomposition for {x!r}")
    base = x.ctx.base
    if isinstance(base, ModRing) and base.is_field:
        fac = factor_poly_fp(x)
        ctx = x.ctx
        out = ctx.one
        for g, e in fac.factors:
            if e % 2:
                out = ctx.mul(out, g)
        return Element(ctx, out)
    if isinstance(base, (IntegerRing, RationalField)):
        return _squarefree_part_q(x)
    raise RingError(f"no squarefree decomposition over {base.name()}")


def _squarefree_decomposition_q(f):
    """Yun's gcd chain: monic f over Q as prod a_i^i with a_i squarefree."""
    qctx = PolyRing(QQ)
    if isinstance(f.ctx.base, IntegerRing):
        coeffs = tuple(Fraction(c) for c in f.val)
    else:
        coeffs = f.val
    if not coeffs:
        raise ZeroInput("the zero polynomial has no squarefree part")
    monic = qctx.mul(qctx.canon_unit(coeffs), coeffs)
    d_monic = derivative(Element(qctx, monic)).val
    g = gcd_payload(qctx, monic, d_monic)
    c = qctx.divmod_(monic, g)[0]
    d = qctx.sub(qctx.divmod_(d_monic, g)[0],
                 derivative(Element(qctx, c)).val)
    parts = []
    i = 1
    while len(c) - 1 > 0:
        a = gcd_payload(qctx, c, d)
        parts.append((a, i))
        c = qctx.divmod_(c, a)[0]
        d = qctx.sub(qctx.divmod_(d, a)[0], derivative(Element(qctx, c)).val)
        i += 1
    return qctx, parts


def _squarefree_part_q(f):
    qctx, parts = _squarefree_decomposition_q(f)
    out = qctx.one
    for a, i in parts:
        if i % 2:
            out = qctx.mul(out, a)
    result = Element(qctx, out)
    if isinstance(f.ctx.base, IntegerRing):
        return primitive_associate(result)
    return result


# ------------------------------------------------- imaginary quadratic

def quad_irreducible_check(x):
    """Irreducibility in Z[sqrt(d)], d < 0, by norm-divisor exhaustion."""
    if not (isinstance(x, Element) and isinstance(x.ctx, QuadIntRing)):
        raise RingError("expected a quadratic integer")
    ctx = x.ctx
    if ctx.d >= 0:
        raise InvalidParameters(
            "norm exhaustion needs an imaginary quadratic ring")
    n = ctx.norm(x.val)
    if n == 0:
        raise ZeroInput("0 is not tested for irreducibility")
    if n == 1:
        raise InvalidParameters("units are not tested for irreducibility")
    if is_prime(n):
        return _irr("prime-norm", n=n)
    d = abs(ctx.d)
    for t in _divisors(n)[1:-1]:
        b = 0
        while d * b * b <= t:
            rest = t - d * b * b
            a = math.isqrt(rest)
            if a * a == rest:
                for cand in ((a, b), (a, -b)) if b else ((a, b),):
                    if cand == (0, 0):
                        continue
                    num = ctx.mul(x.val, ctx.conj(cand))
                    if num[0] % t == 0 and num[1] % t == 0:
                        return _red(
                            "trial-divisor", divisor=ctx.show(cand))
            b += 1
    return _irr("exhaustive")


# ------------------------------------------------------------ verification

def verify_certificate(f, verdict):
    """Replay a verdict's certificate against f."""
    if not isinstance(verdict, IrreducibilityVerdict):
        raise InvalidParameters("expected an IrreducibilityVerdict")
    if verdict.is_inconclusive:
        return True
    data = dict(verdict.data)
    kind = verdict.cert
    if kind == "eisenstein":
        g = primitive_associate(f)
        p = int(data["p"])
        a = int(data["shift"])
        if not is_prime(p):
            return False
        ctx = g.ctx
        coeffs = _shift_payload(ctx, g.val, a) if a else g.val
        return verdict.is_irreducible and _eisenstein_holds(coeffs, p)
    if kind == "reduction":
        g = primitive_associate(f)
        p = int(data["p"])
        if not is_prime(p) or g.val[-1] % p == 0:
            return False
        ctx = PolyRing(ModRing(p))
        red = Element(ctx, ctx.canon(g.val))
        return verdict.is_irreducible and poly_is_irreducible_fp(red)
    if kind == "rational-root":
        if not verdict.is_reducible or len(f.val) - 1 < 2:
            return False
        base = f.ctx.base
        if isinstance(base, (IntegerRing, RationalField)):
            root = Fraction(data["root"])
            val = Fraction(0)
            for c in reversed(f.val):
                val = val * root + Fraction(c)
            return val == 0
        r = base.parse(data["root"])
        acc = base.zero
        for c in reversed(f.val):
            acc = base.add(base.mul(acc, r), c)
        return base.is_zero(acc)
    if kind == "low-degree-no-root":
        g = f
        if isinstance(f.ctx.base, IntegerRing):
            qctx = PolyRing(QQ)
            g = Element(qctx, qctx.canon(tuple(Fraction(c) for c in f.val)))
        try:
            return verdict.is_irreducible and low_degree_test(
                g).serialize() == verdict.serialize()
        except DegreeOutOfRange:
            return False
    if kind == "trial-divisor":
        if not verdict.is_reducible:
            return False
        ctx = f.ctx
        g = ctx.parse(data["divisor"])
        if isinstance(ctx, PolyRing):
            if not 1 <= len(g) - 1 < len(f.val) - 1:
                return False
            return not ctx.divmod_(f.val, g)[1]
        if isinstance(ctx, QuadIntRing):
            t = ctx.norm(g)
            n = ctx.norm(f.val)
            if not 1 < abs(t) < abs(n):
                return False
            num = ctx.mul(f.val, ctx.conj(g))
            return num[0] % t == 0 and num[1] % t == 0
        return False
    if kind == "prime-norm":
        if not isinstance(f.ctx, QuadIntRing):
            return False
        return verdict.is_irreducible and is_prime(
            f.ctx.norm(f.val)) and str(f.ctx.norm(f.val)) == data["n"]
    if kind == "exhaustive":
        if isinstance(f.ctx, QuadIntRing):
            return quad_irreducible_check(f).serialize() == \
                verdict.serialize()
        if isinstance(f.ctx, PolyRing):
            base = f.ctx.base
            if isinstance(base, ModRing) and base.is_field:
                return verdict.is_irreducible and poly_is_irreducible_fp(f)
            return verdict.is_irreducible and len(f.val) - 1 == 1
        return False
    raise InvalidParameters(f"unknown certificate kind {kind!r}")


# ------------------------------------------------------------- pipeline

def irreducibility_pipeline(f, prime_bound=DEFAULT_PRIME_BOUND,
                            shift_bound=DEFAULT_SHIFT_BOUND):
    """Best-effort verdict for Q[x]/Z[x], F_p[x], or quadratic integers.

    Over Q the stages are: primitive associate, degree screen, rational
    roots, Eisenstein with shifts, reduction mod small primes; anything
    that survives is INCONCLUSIVE.  Over F_p and imaginary quadratic
    rings exhaustion decides outright.
    """
    if isinstance(f, Element) and isinstance(f.ctx, QuadIntRing):
        return quad_irreducible_check(f)
    if not (isinstance(f, Element) and isinstance(f.ctx, PolyRing)):
        raise RingError(f"no irreducibility test for {f!r}")
    base = f.ctx.base
    if isinstance(base, ModRing) and base.is_field:
        deg = len(f.val) - 1
        if deg < 1:
            raise ConstantPolynomial("constants are not tested")
        g = _fp_divisor(f)
        if g is None:
            return _irr("exhaustive")
        return _red("trial-divisor", divisor=f.ctx.show(g))
    if not isinstance(base, (IntegerRing, RationalField)):
        raise RingError(f"no irreducibility test over {base.name()}")
    prim = primitive_associate(f)
    deg = len(prim.val) - 1
    if deg < 1:
        raise ConstantPolynomial("constants are not tested")
    if deg == 1:
        return _irr("exhaustive")
    if deg in (2, 3):
        qctx = PolyRing(QQ)
        return low_degree_test(
            Element(qctx, qctx.canon([Fraction(c) for c in prim.val])))
    roots = rational_roots(prim)
    if roots:
        return _red("rational-root", root=roots[0])
    verdict = eisenstein_translate_search(prim, prime_bound, shift_bound)
    if not verdict.is_inconclusive:
        return verdict
    count = 0
    p = 2
    while count < REDUCTION_PRIME_COUNT:
        if is_prime(p):
            count += 1
            if prim.val[-1] % p and p ** (deg // 2) <= SIEVE_CANDIDATE_CAP:
                v = reduction_mod_p_check(prim, p)
                if v.is_irreducible:
                    return v
        p += 1
    return INCONCLUSIVE
