"""The ring of quaternion polynomials in one central variable.

Coefficients are stored ascending and written to the right of the variable:
f(z) = sum z^j f_j.  With z central the product convolves coefficients in
order, (fg)_n = sum_{a+b=n} f_a g_b, which is noncommutative.

Left and right evaluation substitute a quaternion for z with the powers
collected on the corresponding side; the matching backward shifts satisfy

    f = f^el(a) + (z - a) * (L_a f)   and   f = f^br(a) + (R_a f) * (z - a).
"""

from __future__ import annotations

import math

from .errors import NonRealResult
from .quaternions import ConjugacyClass, Quaternion, class_of, in_class_point, is_zero_quat
from .scalars import EXACT, Context

NEG_INF = float("-inf")


class QPolynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = list(coeffs)
        while cs and cs[-1].is_exactly_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    # -- basic queries -------------------------------------------------------

    @property
    def degree(self):
        """Degree as an int; -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Quaternion:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def constant(self) -> Quaternion | None:
        return self.coeffs[0] if self.coeffs else None

    def coeff(self, k: int) -> Quaternion:
        if not self.coeffs:
            raise ValueError("zero polynomial")
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        zero = self.coeffs[0]
        return Quaternion(zero.w * 0, zero.w * 0, zero.w * 0, zero.w * 0)

    def is_monic(self) -> bool:
        if not self.coeffs:
            return False
        c = self.coeffs[-1]
        return c.w == 1 and c.x == 0 and c.y == 0 and c.z == 0

    def abs1(self):
        """Sum of componentwise absolute values over all coefficients."""
        return sum(c.abs1() for c in self.coeffs) if self.coeffs else 0

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return QPolynomial(out)

    def __sub__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return QPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, QPolynomial):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return QPolynomial(())
            zero = (a[0].w * 0)
            out = [Quaternion(zero, zero, zero, zero) for _ in range(len(a) + len(b) - 1)]
            for i, fa in enumerate(a):
                for j, gb in enumerate(b):
                    out[i + j] = out[i + j] + fa * gb
            return QPolynomial(out)
        if isinstance(other, Quaternion):
            return QPolynomial([c * other for c in self.coeffs])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, Quaternion):
            return QPolynomial([other * c for c in self.coeffs])
        return NotImplemented

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        acc = one_like(self)
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __eq__(self, other):
        return isinstance(other, QPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        from .parsing import poly_str
        return f"QPolynomial({poly_str(self)})"

    def __str__(self):
        from .parsing import poly_str
        return poly_str(self)

    # -- evaluation and shifts ---------------------------------------------------

    def eval_left(self, a: Quaternion) -> Quaternion:
        """sum a^k f_k."""
        if not self.coeffs:
            return Quaternion(a.w * 0, a.w * 0, a.w * 0, a.w * 0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = a * acc + c
        return acc

    def eval_right(self, a: Quaternion) -> Quaternion:
        """sum f_k a^k."""
        if not self.coeffs:
            return Quaternion(a.w * 0, a.w * 0, a.w * 0, a.w * 0)
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * a + c
        return acc

    def shift_left(self, a: Quaternion) -> "QPolynomial":
        """L_a f, with f = f^el(a) + (z-a) * (L_a f)."""
        n = len(self.coeffs)
        if n <= 1:
            return QPolynomial(())
        out = [None] * (n - 1)
        acc = self.coeffs[-1]
        out[n - 2] = acc
        for k in range(n - 2, 0, -1):
            acc = self.coeffs[k] + a * acc
            out[k - 1] = acc
        return QPolynomial(out)

    def shift_right(self, a: Quaternion) -> "QPolynomial":
        """R_a f, with f = f^br(a) + (R_a f) * (z-a)."""
        n = len(self.coeffs)
        if n <= 1:
            return QPolynomial(())
        out = [None] * (n - 1)
        acc = self.coeffs[-1]
        out[n - 2] = acc
        for k in range(n - 2, 0, -1):
            acc = self.coeffs[k] + acc * a
            out[k - 1] = acc
        return QPolynomial(out)

    def sharp(self) -> "QPolynomial":
        """Coefficientwise quaternion conjugation; (fg)# = g# f#."""
        return QPolynomial([c.conjugate() for c in self.coeffs])

    def derivative(self, k: int = 1) -> "QPolynomial":
        f = self
        for _ in range(k):
            f = QPolynomial([f.coeffs[j] * j for j in range(1, len(f.coeffs))])
        return f

    # -- division ---------------------------------------------------------------

    def divide_right(self, g: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Return (q, r) with self = g*q + r, deg r < deg g.

        r = 0 iff self lies in the right ideal generated by g.
        """
        return _divmod(self, g, left_divisor=True)

    def divide_left(self, g: "QPolynomial") -> tuple["QPolynomial", "QPolynomial"]:
        """Return (q, r) with self = q*g + r, deg r < deg g."""
        return _divmod(self, g, left_divisor=False)

    def monic_right(self) -> tuple["QPolynomial", Quaternion]:
        """(self * c^-1, c) for the leading coefficient c; keeps <f>_r."""
        c = self.leading()
        return self * c.inverse(), c


def _divmod(f: QPolynomial, g: QPolynomial, left_divisor: bool):
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    m = len(g.coeffs) - 1
    if len(f.coeffs) - 1 < m:
        return QPolynomial(()), f
    ginv = g.coeffs[-1].inverse()
    rem = list(f.coeffs)
    qlen = len(f.coeffs) - m
    qz = f.coeffs[-1].w * 0
    q = [Quaternion(qz, qz, qz, qz)] * qlen
    for t in range(qlen - 1, -1, -1):
        top = rem[m + t]
        if top.is_exactly_zero():
            continue
        qt = (ginv * top) if left_divisor else (top * ginv)
        q[t] = qt
        for a in range(m + 1):
            ga = g.coeffs[a]
            rem[a + t] = rem[a + t] - (ga * qt if left_divisor else qt * ga)
    return QPolynomial(q), QPolynomial(rem[:m])


# -- constructors ---------------------------------------------------------------


def poly(coeffs) -> QPolynomial:
    return QPolynomial(coeffs)


def zero_poly() -> QPolynomial:
    return QPolynomial(())


def const_poly(c: Quaternion) -> QPolynomial:
    return QPolynomial((c,))


def one_like(f: QPolynomial) -> QPolynomial:
    if f.coeffs:
        z = f.coeffs[0].w * 0
    else:
        z = 0
    return QPolynomial((Quaternion(z + 1, z, z, z),))


def one_poly(ctx: Context = EXACT) -> QPolynomial:
    return QPolynomial((Quaternion(ctx.scalar(1), ctx.scalar(0), ctx.scalar(0), ctx.scalar(0)),))


def rho(a: Quaternion) -> QPolynomial:
    """The monic linear factor z - a."""
    z = a.w * 0
    return QPolynomial((-a, Quaternion(z + 1, z, z, z)))


def from_roots(roots) -> QPolynomial:
    """Ordered product (z-r1)(z-r2)...; r1 is a left zero, rn a right zero."""
    roots = list(roots)
    if not roots:
        raise ValueError("need at least one root")
    f = rho(roots[0])
    for r in roots[1:]:
        f = f * rho(r)
    return f


def char_poly_power(v: ConjugacyClass, k: int, ctx: Context = EXACT) -> QPolynomial:
    return v.char_poly(ctx) ** k


# -- module-level operation names -------------------------------------------------


def poly_mul(f: QPolynomial, g: QPolynomial) -> QPolynomial:
    return f * g


def sharp(f: QPolynomial) -> QPolynomial:
    return f.sharp()


def eval_left(f: QPolynomial, a: Quaternion) -> Quaternion:
    return f.eval_left(a)


def eval_right(f: QPolynomial, a: Quaternion) -> Quaternion:
    return f.eval_right(a)


def shift_left(f: QPolynomial, a: Quaternion) -> QPolynomial:
    return f.shift_left(a)


def shift_right(f: QPolynomial, a: Quaternion) -> QPolynomial:
    return f.shift_right(a)


def divide_right(f: QPolynomial, g: QPolynomial):
    return f.divide_right(g)


def divide_left(f: QPolynomial, g: QPolynomial):
    return f.divide_left(g)


def derivative(f: QPolynomial, k: int = 1) -> QPolynomial:
    return f.derivative(k)


def eval_scale(f: QPolynomial, a: Quaternion, ctx: Context):
    """Magnitude reference for zero tests on evaluations of f at a."""
    if ctx.is_exact:
        return 1
    m = max(1.0, math.sqrt(float(a.norm2())))
    s = 0.0
    p = 1.0
    for c in f.coeffs:
        s += float(c.abs1()) * p
        p *= m
    return 1.0 + s


def real_coeffs(f: QPolynomial, ctx: Context = EXACT):
    """The scalar coefficient list of a real polynomial.

    Raises NonRealResult if some imaginary component exceeds tolerance.
    """
    scale = 1 + f.abs1()
    out = []
    for c in f.coeffs:
        if not (ctx.is_zero(c.x, scale) and ctx.is_zero(c.y, scale) and ctx.is_zero(c.z, scale)):
            raise NonRealResult(f"coefficient {c} has imaginary residue")
        out.append(c.w)
    return out


def is_real_poly(f: QPolynomial, ctx: Context = EXACT) -> bool:
    try:
        real_coeffs(f, ctx)
        return True
    except NonRealResult:
        return False


def companion_real(f: QPolynomial, ctx: Context = EXACT) -> QPolynomial:
    """f * f#, which has real coefficients and degree 2*deg f."""
    p = f * f.sharp()
    real_coeffs(p, ctx)
    return p


def scalar_poly(scalars, ctx: Context = EXACT) -> QPolynomial:
    z = ctx.scalar(0)
    return QPolynomial([Quaternion(ctx.scalar(s), z, z, z) for s in scalars])


def mult_left(alpha: Quaternion, f: QPolynomial, ctx: Context = EXACT) -> int:
    """Least k with the left evaluation of the k-th derivative nonzero at alpha."""
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial")
    g = f
    for k in range(len(f.coeffs)):
        if not is_zero_quat(g.eval_left(alpha), ctx, eval_scale(g, alpha, ctx)):
            return k
        g = g.derivative()
    raise AssertionError("unreachable: a nonzero polynomial has finite multiplicity")


def mult_right(alpha: Quaternion, f: QPolynomial, ctx: Context = EXACT) -> int:
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial")
    g = f
    for k in range(len(f.coeffs)):
        if not is_zero_quat(g.eval_right(alpha), ctx, eval_scale(g, alpha, ctx)):
            return k
        g = g.derivative()
    raise AssertionError("unreachable")


def mult_spherical(v: ConjugacyClass, f: QPolynomial, ctx: Context = EXACT,
                   probe: Quaternion | None = None) -> int:
    """Least k such that the k-th derivative has a nonzero left evaluation at
    one of two distinct points of the class (the probe and its conjugate)."""
    if f.is_zero():
        raise ValueError("multiplicity of the zero polynomial")
    a = in_class_point(v, ctx, probe)
    ab = a.conjugate()
    g = f
    for k in range(len(f.coeffs)):
        s = eval_scale(g, a, ctx)
        if (not is_zero_quat(g.eval_left(a), ctx, s)
                or not is_zero_quat(g.eval_left(ab), ctx, s)):
            return k
        g = g.derivative()
    raise AssertionError("unreachable")


def eval_product_formula(g: QPolynomial, f: QPolynomial, alpha: Quaternion,
                         ctx: Context = EXACT) -> Quaternion:
    """Left evaluation of g*f at alpha through the evaluation of g alone:
    zero when g^el(alpha) = 0, else g^el(alpha) * f^el(conjugated alpha)."""
    ga = g.eval_left(alpha)
    if is_zero_quat(ga, ctx, eval_scale(g, alpha, ctx)):
        return Quaternion(alpha.w * 0, alpha.w * 0, alpha.w * 0, alpha.w * 0)
    return ga * f.eval_left(ga.inverse() * alpha * ga)


def eval_product_formula_right(g: QPolynomial, f: QPolynomial, alpha: Quaternion,
                               ctx: Context = EXACT) -> Quaternion:
    """Right-evaluation mirror of eval_product_formula, driven by f^br."""
    fa = f.eval_right(alpha)
    if is_zero_quat(fa, ctx, eval_scale(f, alpha, ctx)):
        return Quaternion(alpha.w * 0, alpha.w * 0, alpha.w * 0, alpha.w * 0)
    return g.eval_right(fa * alpha * fa.inverse()) * fa


def class_of_poly_root(a: Quaternion, ctx: Context = EXACT) -> ConjugacyClass:
    return class_of(a, ctx)
