"""Spherical divisors: the per-class zero structure of a polynomial.

For every conjugacy class V meeting Z(f), f factors two ways,

    f = X_V^kappa * (z-a_1)...(z-a_s) * P      (left divisor times cofactor)
    f = P~ * (z-a~_s)...(z-a~_1) * X_V^kappa   (cofactor times right divisor)

with X_V the class's characteristic quadratic, (a_1..a_s) and (a~_1..a~_s)
spherical chains in V, and cofactors without zeros in V.  Both chains are
extracted by repeated in-class root formulas plus backward shifts after
kappa applications of the spherical backward shift; the right chain is
stored in extraction order, so its induced polynomial multiplies reversed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ChainBroken, PreconditionViolated
from .polynomials import (
    QPolynomial,
    companion_real,
    eval_scale,
    from_roots,
    mult_spherical,
    one_poly,
    real_coeffs,
    rho,
)
from .quaternions import (
    ConjugacyClass,
    Quaternion,
    class_of,
    classes_equal,
    in_class_point,
    is_zero_quat,
)
from .realroots import s_divmod, s_trim
from .scalars import Context, EXACT


# -- multiplicity of a real factor in a real polynomial -------------------------


def _real_divides(p, factor, ctx: Context, scale):
    q, r = s_divmod(p, factor)
    if ctx.is_exact:
        return (q, True) if not r else (None, False)
    bound = ctx.eps * scale * 8 * (len(p) + 1)
    if all(abs(c) <= bound for c in r):
        return q, True
    return None, False


def xv_mult(real_scalars, v: ConjugacyClass, ctx: Context = EXACT) -> int:
    """Largest k with X_V^k dividing the given real polynomial."""
    p = s_trim(list(real_scalars))
    one = v.trace * 0 + 1
    factor = [v.norm2, -v.trace, one]
    scale = 1 + sum(abs(c) for c in p) if not ctx.is_exact else 1
    count = 0
    while len(p) > len(factor) - 1:
        q, ok = _real_divides(p, factor, ctx, scale)
        if not ok:
            break
        p = q
        count += 1
    return count


def real_root_mult(real_scalars, x, ctx: Context = EXACT) -> int:
    """Largest k with (z-x)^k dividing the given real polynomial."""
    p = s_trim(list(real_scalars))
    one = x * 0 + 1
    factor = [-x, one]
    scale = 1 + sum(abs(c) for c in p) if not ctx.is_exact else 1
    count = 0
    while len(p) > 1:
        q, ok = _real_divides(p, factor, ctx, scale)
        if not ok:
            break
        p = q
        count += 1
    return count


def has_zero_in_class(f: QPolynomial, v: ConjugacyClass, ctx: Context = EXACT) -> bool:
    """Whether Z(f) meets V, via the multiplicity of X_V in f*f#."""
    if f.is_zero():
        return True
    if f.is_constant():
        return False
    scalars = real_coeffs(companion_real(f, ctx), ctx)
    if v.is_real:
        return real_root_mult(scalars, v.real_point(), ctx) > 0
    return xv_mult(scalars, v, ctx) > 0


# -- spherical backward shift ----------------------------------------------------


def shift_weights(v: ConjugacyClass, count: int):
    """The real weights r_0..r_{count-1}: r_0 = 1, r_1 = trace,
    r_{j+1} = r_j*trace - r_{j-1}*norm2 (equal to sum a^i conj(a)^(m-i))."""
    one = v.trace * 0 + 1
    rs = [one]
    if count > 1:
        rs.append(v.trace)
    for _ in range(count - 2):
        rs.append(rs[-1] * v.trace - rs[-2] * v.norm2)
    return rs[:count]


def spherical_shift(f: QPolynomial, v: ConjugacyClass) -> QPolynomial:
    """S_V f, the two-step backward shift with X_V * (S_V f) = f whenever
    X_V divides f; equals L_a(L_conj(a) f) for every a in V."""
    n = len(f.coeffs)
    if n <= 2:
        return QPolynomial(())
    rs = shift_weights(v, n - 2)
    out = []
    for k in range(n - 2):
        acc = f.coeffs[k + 2] * rs[0]
        for i in range(1, n - k - 2):
            acc = acc + f.coeffs[i + k + 2] * rs[i]
        out.append(acc)
    return QPolynomial(out)


def spherical_shift_power(f: QPolynomial, v: ConjugacyClass, k: int) -> QPolynomial:
    for _ in range(k):
        f = spherical_shift(f, v)
    return f


# -- chain extraction -------------------------------------------------------------


def extract_left_chain(f: QPolynomial, v: ConjugacyClass, k: int,
                       ctx: Context = EXACT, probe: Quaternion | None = None):
    """k in-class left roots peeled off the front: f = (z-b_1)...(z-b_k) * Q
    with (b_1..b_k) a spherical chain in V and Z(Q) disjoint from V."""
    alpha = in_class_point(v, ctx, probe)
    ab = alpha.conjugate()
    q = f
    chain = []
    for _ in range(k):
        scale = eval_scale(q, alpha, ctx)
        ea = q.eval_left(alpha)
        if is_zero_quat(ea, ctx, scale):
            beta = alpha
        else:
            eab = q.eval_left(ab)
            den = ea + eab
            if is_zero_quat(den, ctx, scale):
                raise ChainBroken("no in-class left root for an intermediate cofactor")
            beta = (ab * ea + alpha * eab) * den.inverse()
        chain.append(beta)
        q = q.shift_left(beta)
    return tuple(chain), q


def extract_right_chain(f: QPolynomial, v: ConjugacyClass, k: int,
                        ctx: Context = EXACT, probe: Quaternion | None = None):
    """k in-class right roots peeled off the back:
    f = Q * (z-b_k)...(z-b_1), chain returned in extraction order (b_1..b_k)."""
    alpha = in_class_point(v, ctx, probe)
    ab = alpha.conjugate()
    q = f
    chain = []
    for _ in range(k):
        scale = eval_scale(q, alpha, ctx)
        ea = q.eval_left(alpha)
        eab = q.eval_left(ab)
        if is_zero_quat(ea, ctx, scale):
            if is_zero_quat(eab, ctx, scale):
                raise ChainBroken("cofactor still vanishes on the whole class")
            beta = eab.inverse() * alpha * eab
        else:
            den = ea - eab
            if is_zero_quat(den, ctx, scale):
                raise ChainBroken("no in-class right root for an intermediate cofactor")
            beta = den.inverse() * (ab * ea - alpha * eab)
        chain.append(beta)
        q = q.shift_right(beta)
    return tuple(chain), q


# -- divisor pairs ---------------------------------------------------------------


@dataclass(frozen=True)
class SphericalDivisorPair:
    """The left and right zero structure of f inside one class.

    left_chain is in product order; right_chain is in extraction order, so
    right_divisor multiplies it reversed.  For a real class x the "chains"
    are (x,)*k with kappa = 0 and the divisor is (z-x)^k on both sides.
    """

    cls: ConjugacyClass
    kappa: int
    left_chain: tuple[Quaternion, ...]
    right_chain: tuple[Quaternion, ...]
    left_cofactor: QPolynomial
    right_cofactor: QPolynomial

    def char_power(self, ctx: Context = EXACT) -> QPolynomial:
        if self.cls.is_real:
            return one_poly(ctx)
        return self.cls.char_poly(ctx) ** self.kappa

    def left_divisor(self, ctx: Context = EXACT) -> QPolynomial:
        d = self.char_power(ctx)
        for a in self.left_chain:
            d = d * rho(a)
        return d

    def right_divisor(self, ctx: Context = EXACT) -> QPolynomial:
        d = one_poly(ctx)
        for a in reversed(self.right_chain):
            d = d * rho(a)
        return d * self.char_power(ctx)

    def reconstruct_left(self, ctx: Context = EXACT) -> QPolynomial:
        return self.left_divisor(ctx) * self.left_cofactor

    def reconstruct_right(self, ctx: Context = EXACT) -> QPolynomial:
        return self.right_cofactor * self.right_divisor(ctx)


def spherical_divisors(f: QPolynomial, v: ConjugacyClass, ctx: Context = EXACT,
                       probe: Quaternion | None = None) -> SphericalDivisorPair:
    """Extract the divisor pair of f at the class V.

    kappa is the least derivative order with a nonzero left evaluation at a
    conjugate pair in V; after kappa spherical shifts the residual chain
    length is the multiplicity of X_V in the shifted companion polynomial.
    """
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    if v.is_real:
        x = v.real_point()
        scalars = real_coeffs(companion_real(f, ctx), ctx)
        m = real_root_mult(scalars, x, ctx) // 2
        zero = x * 0
        xq = Quaternion(x, zero, zero, zero)
        q, r = f.divide_right(rho(xq) ** m)
        chain = (xq,) * m
        return SphericalDivisorPair(v, 0, chain, chain, q, q)
    kappa = mult_spherical(v, f, ctx, probe)
    g = spherical_shift_power(f, v, kappa)
    n = xv_mult(real_coeffs(companion_real(g, ctx), ctx), v, ctx)
    if n == 0:
        return SphericalDivisorPair(v, kappa, (), (), g, g)
    left_chain, p = extract_left_chain(g, v, n, ctx, probe)
    right_chain, pt = extract_right_chain(g, v, n, ctx, probe)
    return SphericalDivisorPair(v, kappa, left_chain, right_chain, p, pt)


def zero_structure(f: QPolynomial, ctx: Context = EXACT, probes=None) -> list[SphericalDivisorPair]:
    """Divisor pairs of f for every class of Z(f), sorted by class key."""
    from .realroots import real_poly_complex_roots

    if f.degree < 1:
        raise ValueError("need degree >= 1")
    clusters, _ = real_poly_complex_roots(companion_real(f, ctx), ctx)
    out = []
    for cl in clusters:
        v = cl.conjugacy_class()
        probe = None
        if probes and not cl.is_real:
            scale = 1 + abs(v.norm2)
            for p in probes:
                if classes_equal(v, class_of(p, ctx), ctx, scale):
                    probe = p
                    break
        out.append(spherical_divisors(f, v, ctx, probe))
    out.sort(key=lambda d: (d.cls.trace, d.cls.norm2))
    return out


# -- moving one linear factor across a V-free polynomial ---------------------------


def commute_factor_left_to_right(gamma: Quaternion, f: QPolynomial,
                                 ctx: Context = EXACT) -> tuple[QPolynomial, Quaternion]:
    """Rewrite (z-gamma)*F as Q*(z-beta) when Z(F) misses [gamma].

    beta is gamma conjugated by the left evaluation of F at conj(gamma);
    Q has no zeros in [gamma] either.
    """
    if f.is_zero():
        raise PreconditionViolated("F must be nonzero")
    v = class_of(gamma, ctx)
    if has_zero_in_class(f, v, ctx):
        raise PreconditionViolated("F has a zero in the class of gamma")
    e = f.eval_left(gamma.conjugate())
    if is_zero_quat(e, ctx, eval_scale(f, gamma, ctx)):
        raise PreconditionViolated("F vanishes at conj(gamma)")
    beta = e.inverse() * gamma * e
    q = (rho(gamma) * f).shift_right(beta)
    return q, beta


def commute_factor_right_to_left(q: QPolynomial, beta: Quaternion,
                                 ctx: Context = EXACT) -> tuple[Quaternion, QPolynomial]:
    """Rewrite Q*(z-beta) as (z-gamma)*F when Z(Q) misses [beta]."""
    if q.is_zero():
        raise PreconditionViolated("Q must be nonzero")
    v = class_of(beta, ctx)
    if has_zero_in_class(q, v, ctx):
        raise PreconditionViolated("Q has a zero in the class of beta")
    e = q.eval_right(beta.conjugate())
    if is_zero_quat(e, ctx, eval_scale(q, beta, ctx)):
        raise PreconditionViolated("Q vanishes at conj(beta)")
    gamma = e * beta * e.inverse()
    f = (q * rho(beta)).shift_left(gamma)
    return gamma, f


# -- converting between the left and the right zero structure ----------------------


def left_divisor_to_right(v: ConjugacyClass, kappa: int, chain, p: QPolynomial,
                          ctx: Context = EXACT):
    """From f = X^kappa*(z-a_1)..(z-a_n)*P compute (P~, (a~_1..a~_n)) with
    f = P~*(z-a~_n)..(z-a~_1)*X^kappa."""
    chain = tuple(chain)
    if p.is_zero():
        raise PreconditionViolated("cofactor must be nonzero")
    if chain and has_zero_in_class(p, v, ctx):
        raise PreconditionViolated("cofactor has a zero in the class")
    cur = p
    tilde = []
    n = len(chain)
    for j in range(n):
        a = chain[n - 1 - j]
        e = cur.eval_left(a.conjugate())
        if is_zero_quat(e, ctx, eval_scale(cur, a, ctx)):
            raise PreconditionViolated("intermediate cofactor vanishes at a conjugate point")
        at = e.inverse() * a * e
        cur = (rho(a) * cur).shift_right(at)
        tilde.append(at)
    return cur, tuple(tilde)


def right_divisor_to_left(v: ConjugacyClass, kappa: int, right_chain, pt: QPolynomial,
                          ctx: Context = EXACT):
    """Inverse of left_divisor_to_right: from f = P~*(z-a~_n)..(z-a~_1)*X^kappa
    compute ((a_1..a_n), P)."""
    right_chain = tuple(right_chain)
    if pt.is_zero():
        raise PreconditionViolated("cofactor must be nonzero")
    if right_chain and has_zero_in_class(pt, v, ctx):
        raise PreconditionViolated("cofactor has a zero in the class")
    cur = pt
    chain = []
    n = len(right_chain)
    for j in range(n):
        at = right_chain[n - 1 - j]
        e = cur.eval_right(at.conjugate())
        if is_zero_quat(e, ctx, eval_scale(cur, at, ctx)):
            raise PreconditionViolated("intermediate cofactor vanishes at a conjugate point")
        a = e * at * e.inverse()
        cur = (cur * rho(at)).shift_left(a)
        chain.append(a)
    return tuple(chain), cur
