"""Scalar backends: exact rationals and 64-bit floats with a tolerance context.

Every algorithm in this package is generic over the scalar type.  The exact
backend uses gmpy2 rationals (``Fraction`` as a fallback) and compares with
``==``; the float backend routes every zero/equality decision through a
context ``eps`` scaled by a caller-supplied magnitude reference.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq

    def rational(a, b=1):
        return _mpq(a, b)

    RATIONAL_TYPES = (type(_mpq(0)), Fraction)
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    def rational(a, b=1):
        return Fraction(a, b)

    RATIONAL_TYPES = (Fraction,)

RAT_ZERO = rational(0)
RAT_ONE = rational(1)


def _isqrt_exact(n: int) -> int | None:
    r = math.isqrt(n)
    return r if r * r == n else None


def rational_sqrt(s) -> object | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    if s < 0:
        raise ValueError("square root of a negative scalar")
    num, den = s.numerator, s.denominator
    rn = _isqrt_exact(num)
    rd = _isqrt_exact(den)
    if rn is None or rd is None:
        return None
    return rational(rn, rd)


@dataclass(frozen=True)
class Context:
    """Backend selector plus the tolerances used in algorithm control flow.

    eps          zero tolerance: is_zero(x, scale) <=> |x| <= eps*scale
    cluster_tol  absolute radius used when merging float root clusters;
                 sized to absorb multiple-root scatter for roots of O(1)
                 magnitude (a 6-fold root of a double-precision polynomial
                 scatters by roughly 1e-14**(1/6) ~ 5e-3)
    real_tol     threshold on norm2 - trace^2/4 below which a float cluster
                 counts as a real class
    """

    kind: str = "exact"
    eps: object = field(default=RAT_ZERO)
    cluster_tol: float = 0.02
    real_tol: float = 5e-4

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def scalar(self, value):
        """Coerce a number (int, str 'p/q', Fraction, float) to this backend."""
        if self.is_exact:
            if isinstance(value, float):
                if not value.is_integer():
                    raise TypeError(
                        "refusing to coerce a non-integral float to the exact "
                        "backend; pass a Fraction or 'p/q' string"
                    )
                return rational(int(value))
            if isinstance(value, str):
                return rational(Fraction(value))
            return rational(value)
        return float(value)

    def is_zero(self, s, scale=1) -> bool:
        if self.is_exact:
            return s == 0
        return abs(s) <= self.eps * scale

    def scalars_equal(self, a, b, scale=1) -> bool:
        return self.is_zero(a - b, scale)

    def sqrt(self, s):
        """Square root; returns None on the exact backend if irrational."""
        if self.is_exact:
            return rational_sqrt(s)
        if s < 0:
            raise ValueError("square root of a negative scalar")
        return math.sqrt(s)

    def with_eps(self, eps) -> "Context":
        return replace(self, eps=eps)


EXACT = Context(kind="exact", eps=RAT_ZERO)
FLOAT64 = Context(kind="float64", eps=1e-10)


def context(kind: str, eps=None) -> Context:
    if kind == "exact":
        if eps not in (None, 0):
            raise ValueError("the exact backend forces eps = 0")
        return EXACT
    if kind == "float64":
        return FLOAT64 if eps is None else Context(kind="float64", eps=float(eps))
    raise ValueError(f"unknown backend {kind!r}")
