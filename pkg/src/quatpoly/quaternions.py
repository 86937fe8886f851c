"""Quaternions, conjugacy classes and spherical chains.

A quaternion w + x*i + y*j + z*k is stored componentwise over one scalar
backend (all four components exact rationals, or all four floats).  Two
quaternions are conjugate exactly when their real parts and absolute values
agree, so a conjugacy class is the pair (trace, norm2) = (2*Re, |.|^2).
"""

from __future__ import annotations

from .errors import IrrationalRepresentative
from .scalars import EXACT, Context


class Quaternion:
    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w, x, y, z):
        self.w = w
        self.x = x
        self.y = y
        self.z = z

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        if not isinstance(other, Quaternion):
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            a, b, c, d = self.w, self.x, self.y, self.z
            e, f, g, h = other.w, other.x, other.y, other.z
            return Quaternion(
                a * e - b * f - c * g - d * h,
                a * f + b * e + c * h - d * g,
                a * g - b * h + c * e + d * f,
                a * h + b * g - c * f + d * e,
            )
        if isinstance(other, (int, *_SCALARS)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central, so only the scalar case lands here
        if isinstance(other, (int, *_SCALARS)):
            return Quaternion(self.w * other, self.x * other,
                              self.y * other, self.z * other)
        return NotImplemented

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def norm2(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    def im_norm2(self):
        return self.x * self.x + self.y * self.y + self.z * self.z

    def abs1(self):
        """Cheap magnitude proxy: sum of component absolute values."""
        return abs(self.w) + abs(self.x) + abs(self.y) + abs(self.z)

    def inverse(self) -> "Quaternion":
        n2 = self.norm2()
        if n2 == 0:
            raise ZeroDivisionError("inverse of a zero quaternion")
        return Quaternion(self.w / n2, -self.x / n2, -self.y / n2, -self.z / n2)

    def __pow__(self, n: int) -> "Quaternion":
        if n < 0:
            return self.inverse() ** (-n)
        acc = Quaternion(self.w - self.w + 1, self.w * 0, self.w * 0, self.w * 0)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    # -- comparison / hashing (exact componentwise) ------------------------

    def __eq__(self, other):
        return (isinstance(other, Quaternion)
                and self.w == other.w and self.x == other.x
                and self.y == other.y and self.z == other.z)

    def __hash__(self):
        return hash((self.w, self.x, self.y, self.z))

    def __repr__(self):
        from .parsing import quat_str
        return f"Quaternion({quat_str(self)})"

    def __str__(self):
        from .parsing import quat_str
        return quat_str(self)

    def is_exactly_zero(self) -> bool:
        return self.w == 0 and self.x == 0 and self.y == 0 and self.z == 0


try:
    from gmpy2 import mpq as _mpq
    _SCALARS = (float, type(_mpq(0)),)
except ImportError:  # pragma: no cover
    from fractions import Fraction
    _SCALARS = (float, Fraction)


def quat(w=0, x=0, y=0, z=0, ctx: Context = EXACT) -> Quaternion:
    """Build a quaternion, coercing the components to the context's backend."""
    return Quaternion(ctx.scalar(w), ctx.scalar(x), ctx.scalar(y), ctx.scalar(z))


def quat_mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product (noncommutative; |ab| = |a||b|)."""
    return a * b


def quat_inverse(a: Quaternion) -> Quaternion:
    return a.inverse()


def is_zero_quat(q: Quaternion, ctx: Context, scale=1) -> bool:
    if ctx.is_exact:
        return q.is_exactly_zero()
    return q.abs1() <= ctx.eps * scale


def quat_close(a: Quaternion, b: Quaternion, ctx: Context, scale=1) -> bool:
    return is_zero_quat(a - b, ctx, scale)


class ConjugacyClass:
    """A conjugacy class, i.e. the 2-sphere of all h^-1 a h: the pair
    (2*Re a, |a|^2).  Real points are singleton classes."""

    __slots__ = ("trace", "norm2", "is_real")

    def __init__(self, trace, norm2, is_real: bool):
        self.trace = trace
        self.norm2 = norm2
        self.is_real = is_real

    def key(self):
        return (self.trace, self.norm2)

    def __eq__(self, other):
        return (isinstance(other, ConjugacyClass)
                and self.trace == other.trace and self.norm2 == other.norm2)

    def __hash__(self):
        return hash((self.trace, self.norm2))

    def __repr__(self):
        return f"ConjugacyClass(trace={self.trace}, norm2={self.norm2})"

    def real_point(self):
        """The single point of a real class, as a scalar (trace/2)."""
        return self.trace / 2

    def char_poly(self, ctx: Context = EXACT):
        """The characteristic polynomial z^2 - trace*z + norm2, vanishing on
        the whole class (equal to (z-x)^2 for a real class)."""
        from .polynomials import QPolynomial
        zero = ctx.scalar(0)
        one = ctx.scalar(1)
        return QPolynomial((
            Quaternion(self.norm2, zero, zero, zero),
            Quaternion(-self.trace, zero, zero, zero),
            Quaternion(one, zero, zero, zero),
        ))


def class_of(a: Quaternion, ctx: Context = EXACT) -> ConjugacyClass:
    t = a.w + a.w
    n2 = a.norm2()
    im2 = a.im_norm2()
    if ctx.is_exact:
        real = im2 == 0
    else:
        real = im2 <= max(ctx.eps, ctx.real_tol) * (1 + n2)
    return ConjugacyClass(t, n2, real)


def classes_equal(u: ConjugacyClass, v: ConjugacyClass, ctx: Context, scale=1) -> bool:
    return (ctx.scalars_equal(u.trace, v.trace, scale)
            and ctx.scalars_equal(u.norm2, v.norm2, scale))


def class_contains(v: ConjugacyClass, a: Quaternion, ctx: Context, scale=1) -> bool:
    return classes_equal(v, class_of(a, ctx), ctx, scale)


def class_representative(v: ConjugacyClass, ctx: Context = EXACT) -> Quaternion:
    """The canonical complex-like point trace/2 + m*i with m >= 0.

    On the exact backend this raises IrrationalRepresentative when m is not
    rational; callers that know an in-class point should use it as a probe.
    """
    four = ctx.scalar(4)
    m2 = v.norm2 - v.trace * v.trace / four
    if m2 < 0:
        raise ValueError("norm2 < trace^2/4: not a conjugacy class")
    m = ctx.sqrt(m2)
    if m is None:
        raise IrrationalRepresentative(
            f"class (trace={v.trace}, norm2={v.norm2}) has no rational "
            "canonical point; supply an in-class probe")
    zero = ctx.scalar(0)
    return Quaternion(v.trace / 2, m, zero, zero)


def in_class_point(v: ConjugacyClass, ctx: Context, probe: Quaternion | None = None) -> Quaternion:
    """A point of the class: the probe if given (validated), else the
    canonical representative."""
    if probe is not None:
        if not class_contains(v, probe, ctx, scale=1 + abs(v.norm2)):
            raise ValueError("probe does not lie in the class")
        return probe
    return class_representative(v, ctx)


def validate_spherical_chain(chain, ctx: Context = EXACT) -> bool:
    """True iff all points share one class and no point is the quaternion
    conjugate of its predecessor."""
    pts = list(chain)
    if not pts:
        return True
    v = class_of(pts[0], ctx)
    scale = 1 + abs(v.norm2)
    for p in pts[1:]:
        if not classes_equal(v, class_of(p, ctx), ctx, scale):
            return False
    for a, b in zip(pts, pts[1:]):
        if quat_close(b, a.conjugate(), ctx, scale):
            return False
    return True
