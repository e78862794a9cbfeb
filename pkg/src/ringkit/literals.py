"""The ring-context literal grammar shared by the CLI and tests.

  Z | Q | H | Zn:<n> | Fp:<p> | Quad:<d> | QuadF:<d>
  Poly(ctx) | Series(ctx,N) | Frac(ctx) | Quot(ctx,modulus)
  Mat(ctx,n) | Prod(ctx,ctx,...)

Fp: insists on a prime modulus where Zn: takes any n >= 1, so a context
literal documents whether field structure is being relied on.  Any
mathematically invalid parameter inside a literal (composite Fp, a
non-squarefree d, a unit modulus) is reported as a parse error: the
literal, not the arithmetic, is what is wrong.
"""

from .errors import ParseError, RingError
from .fracfield import FracField
from .intutil import is_prime
from .matrix import MatrixRing
from .number_rings import (
    HH,
    QQ,
    ZZ,
    ModRing,
    QuadFieldRing,
    QuadIntRing,
)
from .poly import PolyRing
from .quotient import QuotientRing
from .series import SeriesRing
from .algebra import ProductRing


def _int(text, what):
    try:
        return int(text.strip())
    except ValueError:
        raise ParseError(f"bad {what}: {text!r}")


def parse_context(text):
    """Parse a ring-context literal into a RingContext."""
    try:
        return _parse(text.strip())
    except ParseError:
        raise
    except RingError as e:
        raise ParseError(str(e))


def _parse(text):
    from .parsing import split_top

    if text == "Z":
        return ZZ
    if text == "Q":
        return QQ
    if text == "H":
        return HH
    if text.startswith("Zn:"):
        return ModRing(_int(text[3:], "modulus"))
    if text.startswith("Fp:"):
        p = _int(text[3:], "modulus")
        if not is_prime(p):
            raise ParseError(f"Fp: needs a prime modulus, got {p}")
        return ModRing(p)
    if text.startswith("QuadF:"):
        return QuadFieldRing(_int(text[6:], "discriminant"))
    if text.startswith("Quad:"):
        return QuadIntRing(_int(text[5:], "discriminant"))
    head, sep, rest = text.partition("(")
    if not sep or not text.endswith(")"):
        raise ParseError(f"unknown context literal {text!r}")
    args = split_top(rest[:-1], ",")
    if head == "Poly":
        if len(args) != 1:
            raise ParseError("Poly takes one context argument")
        return PolyRing(_parse(args[0].strip()))
    if head == "Series":
        if len(args) != 2:
            raise ParseError("Series takes a context and a precision")
        return SeriesRing(_parse(args[0].strip()),
                          _int(args[1], "precision"))
    if head == "Frac":
        if len(args) != 1:
            raise ParseError("Frac takes one context argument")
        return FracField(_parse(args[0].strip()))
    if head == "Quot":
        if len(args) != 2:
            raise ParseError("Quot takes a context and a modulus literal")
        base = _parse(args[0].strip())
        mod = args[1].strip()
        # a poly-literal modulus over a scalar context means the
        # quotient of the polynomial ring: Quot(Fp:2,[1,1,1])
        if mod.startswith("[") and not isinstance(base, PolyRing):
            base = PolyRing(base)
        return QuotientRing(base, base.canon(base.parse(mod)))
    if head == "Mat":
        if len(args) != 2:
            raise ParseError("Mat takes a context and a dimension")
        return MatrixRing(_parse(args[0].strip()), _int(args[1], "dimension"))
    if head == "Prod":
        if len(args) < 2:
            raise ParseError("Prod takes at least two context arguments")
        return ProductRing(_parse(a.strip()) for a in args)
    raise ParseError(f"unknown context literal {text!r}")
