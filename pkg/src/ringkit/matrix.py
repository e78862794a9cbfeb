"""Square matrices over a commutative ring, with exact inversion.

Payload: an n-tuple of n-tuples of base payloads, row major.  The
determinant is computed by cofactor expansion (the context refuses
n > 8 at construction, which keeps that honest), and a matrix is
invertible exactly when its determinant is a unit of the base; the
inverse is det^-1 times the adjugate, and Cramer's rule solves linear
systems under the same condition, with the solution re-checked against
the system before it is returned.
"""

from .algebra import Element, RingContext
from .errors import (
    DeterminantNotUnit,
    InfiniteRing,
    InvalidParameters,
    ParseError,
    RingError,
    ShapeMismatch,
    TooLarge,
)

MAX_DIMENSION = 8


class MatrixRing(RingContext):
    """n x n matrices over a commutative base context."""

    def __init__(self, base, n):
        if not isinstance(base, RingContext):
            raise RingError(f"expected a ring context, got {base!r}")
        if not base.is_commutative:
            raise InvalidParameters("matrix entries must commute")
        if not isinstance(n, int) or n < 1:
            raise InvalidParameters(f"dimension must be >= 1, got {n!r}")
        if n > MAX_DIMENSION:
            raise TooLarge(
                f"cofactor expansion is capped at {MAX_DIMENSION} x "
                f"{MAX_DIMENSION}")
        self.base = base
        self.n = n

    def _key(self):
        return ("Mat", self.base, self.n)

    def name(self):
        return f"Mat({self.base.name()},{self.n})"

    @property
    def is_commutative(self):
        return self.n == 1

    @property
    def is_domain(self):
        return self.n == 1 and self.base.is_domain

    @property
    def is_gcd_domain(self):
        return self.n == 1 and self.base.is_gcd_domain

    @property
    def is_euclidean(self):
        return self.n == 1 and self.base.is_euclidean

    @property
    def is_field(self):
        return self.n == 1 and self.base.is_field

    @property
    def is_finite(self):
        return self.base.is_finite

    @property
    def zero(self):
        z = self.base.zero
        return tuple((z,) * self.n for _ in range(self.n))

    @property
    def one(self):
        z, o = self.base.zero, self.base.one
        return tuple(
            tuple(o if i == j else z for j in range(self.n))
            for i in range(self.n))

    def canon(self, raw):
        try:
            rows = tuple(tuple(self.base.canon(x) for x in row)
                         for row in raw)
        except TypeError:
            raise RingError(f"expected rows of entries, got {raw!r}")
        if len(rows) != self.n or any(len(r) != self.n for r in rows):
            raise ShapeMismatch(
                f"expected a {self.n} x {self.n} matrix")
        return rows

    def add(self, a, b):
        return tuple(
            tuple(self.base.add(x, y) for x, y in zip(ra, rb))
            for ra, rb in zip(a, b))

    def neg(self, a):
        return tuple(tuple(self.base.neg(x) for x in row) for row in a)

    def mul(self, a, b):
        base = self.base
        n = self.n
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = base.zero
                for k in range(n):
                    acc = base.add(acc, base.mul(a[i][k], b[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return tuple(out)

    def eq(self, a, b):
        return all(
            self.base.eq(x, y)
            for ra, rb in zip(a, b) for x, y in zip(ra, rb))

    def hash_payload(self, a):
        return hash(tuple(
            tuple(self.base.hash_payload(x) for x in row) for row in a))

    def from_int(self, n):
        v = self.base.from_int(n)
        z = self.base.zero
        return tuple(
            tuple(v if i == j else z for j in range(self.n))
            for i in range(self.n))

    def try_inverse(self, a):
        d = det_payload(self.base, a)
        dinv = self.base.try_inverse(d)
        if dinv is None:
            return None
        adj = adjugate_payload(self.base, a)
        return tuple(
            tuple(self.base.mul(dinv, x) for x in row) for row in adj)

    def characteristic(self):
        return self.base.characteristic()

    def cardinality(self):
        c = self.base.cardinality()
        return None if c is None else c ** (self.n * self.n)

    def elements(self):
        if not self.base.is_finite:
            raise InfiniteRing(f"{self.name()} is not finite")
        import itertools

        n = self.n
        pool = list(self.base.elements())

        def gen():
            for flat in itertools.product(pool, repeat=n * n):
                yield tuple(flat[i * n:(i + 1) * n] for i in range(n))

        return gen()

    def parse(self, text):
        from .parsing import split_top

        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ParseError(f"expected [[...],[...]], got {text!r}")
        rows = []
        for part in split_top(text[1:-1].strip(), ","):
            part = part.strip()
            if not (part.startswith("[") and part.endswith("]")):
                raise ParseError(f"expected a row [...], got {part!r}")
            rows.append(tuple(
                self.base.canon(self.base.parse(x.strip()))
                for x in split_top(part[1:-1], ",")))
        return self.canon(rows)

    def show(self, a):
        return "[" + ",".join(
            "[" + ",".join(self.base.show(x) for x in row) + "]"
            for row in a) + "]"


def det_payload(base, rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    acc = base.zero
    for j in range(n):
        if base.is_zero(rows[0][j]):
            continue
        minor = tuple(
            tuple(row[k] for k in range(n) if k != j) for row in rows[1:])
        term = base.mul(rows[0][j], det_payload(base, minor))
        acc = base.add(acc, base.neg(term) if j % 2 else term)
    return acc


def adjugate_payload(base, rows):
    n = len(rows)
    if n == 1:
        return ((base.one,),)
    out = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = tuple(
                tuple(rows[r][c] for c in range(n) if c != j)
                for r in range(n) if r != i)
            cof = det_payload(base, minor)
            out[j][i] = base.neg(cof) if (i + j) % 2 else cof
    return tuple(tuple(row) for row in out)


def _as_matrix(a):
    if not isinstance(a, Element) or not isinstance(a.ctx, MatrixRing):
        raise RingError(f"expected a matrix element, got {a!r}")
    return a.ctx


def matrix_ring(base, n):
    return MatrixRing(base, n)


def det(a):
    ctx = _as_matrix(a)
    return Element(ctx.base, det_payload(ctx.base, a.val))


def trace(a):
    ctx = _as_matrix(a)
    acc = ctx.base.zero
    for i in range(ctx.n):
        acc = ctx.base.add(acc, a.val[i][i])
    return Element(ctx.base, acc)


def transpose(a):
    ctx = _as_matrix(a)
    return Element(ctx, tuple(zip(*a.val)))


def adjugate(a):
    ctx = _as_matrix(a)
    return Element(ctx, adjugate_payload(ctx.base, a.val))


def mat_inverse(a):
    """det^-1 times the adjugate; the determinant must be a unit."""
    ctx = _as_matrix(a)
    d = det_payload(ctx.base, a.val)
    dinv = ctx.base.try_inverse(d)
    if dinv is None:
        raise DeterminantNotUnit(
            f"determinant {ctx.base.show(d)} is not a unit in "
            f"{ctx.base.name()}", det=Element(ctx.base, d))
    adj = adjugate_payload(ctx.base, a.val)
    return Element(ctx, tuple(
        tuple(ctx.base.mul(dinv, x) for x in row) for row in adj))


def cramer_solve(a, rhs):
    """Solve A x = b by determinant ratios when det(A) is a unit.

    The solution is substituted back into the system before returning;
    over a ring with zero divisors a non-unit determinant means Cramer
    gives no answer, and DeterminantNotUnit reports that determinant.
    """
    ctx = _as_matrix(a)
    base = ctx.base
    b = []
    for x in rhs:
        if isinstance(x, Element):
            if x.ctx != base:
                raise RingError("right-hand side must live in the base ring")
            b.append(x.val)
        else:
            b.append(base.canon(x))
    if len(b) != ctx.n:
        raise ShapeMismatch(f"expected {ctx.n} right-hand side entries")
    d = det_payload(base, a.val)
    dinv = base.try_inverse(d)
    if dinv is None:
        raise DeterminantNotUnit(
            f"determinant {base.show(d)} is not a unit in {base.name()}",
            det=Element(base, d))
    out = []
    for j in range(ctx.n):
        cols = tuple(
            tuple(b[i] if k == j else a.val[i][k] for k in range(ctx.n))
            for i in range(ctx.n))
        out.append(base.mul(dinv, det_payload(base, cols)))
    for i in range(ctx.n):
        acc = base.zero
        for k in range(ctx.n):
            acc = base.add(acc, base.mul(a.val[i][k], out[k]))
        if not base.eq(acc, b[i]):
            raise RingError("Cramer solution failed verification")
    return [Element(base, x) for x in out]
