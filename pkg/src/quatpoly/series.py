"""Truncated power series over the quaternions and finite Blaschke products.

The Cauchy kernel k_a = sum a^n z^n is the formal inverse of 1 - z*a; the
Blaschke factor b_a = (z - a) * k_conj(a) is bi-inner (it preserves the
coefficient two-norm under multiplication from either side).  Given an
ordered root list inside the open unit ball, the completion routine finds
kernel parameters beta_i and Blaschke parameters gamma_i, classwise
conjugate to the roots, with

    (z-a_1)...(z-a_m) k_{b_1}...k_{b_m} = B_{g_1}...B_{g_m} psi,  |psi| = 1,

so the left-hand side is a finite Blaschke product with prescribed zero
structure.  Real roots and spherical (characteristic) content split off
first; their kernels have real coefficients and commute with everything.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .divisors import extract_left_chain, spherical_shift_power, xv_mult
from .errors import PreconditionViolated, SingularPivot, SingularUpsilon
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
    is_zero_quat,
    quat,
    quat_close,
)
from .scalars import Context, EXACT


class TruncatedSeries:
    """Coefficients 0..order of a formal power series; arithmetic is closed
    at the truncation order (coefficient n of a product depends only on
    inputs' coefficients up to n)."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int):
        cs = list(coeffs)[: order + 1]
        if not cs:
            raise ValueError("need at least the constant coefficient")
        zero_s = cs[0].w * 0
        zero = Quaternion(zero_s, zero_s, zero_s, zero_s)
        while len(cs) < order + 1:
            cs.append(zero)
        self.coeffs = tuple(cs)
        self.order = order

    @staticmethod
    def from_poly(f: QPolynomial, order: int, ctx: Context = EXACT) -> "TruncatedSeries":
        if f.is_zero():
            return TruncatedSeries([quat(0, ctx=ctx)], order)
        return TruncatedSeries(f.coeffs, order)

    @staticmethod
    def constant(q: Quaternion, order: int) -> "TruncatedSeries":
        return TruncatedSeries([q], order)

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries(
            [a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries(
            [a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return TruncatedSeries([c * other for c in self.coeffs], self.order)
        self._check(other)
        n = self.order
        a, b = self.coeffs, other.coeffs
        out = []
        for m in range(n + 1):
            acc = a[0] * b[m]
            for t in range(1, m + 1):
                acc = acc + a[t] * b[m - t]
            out.append(acc)
        return TruncatedSeries(out, n)

    def __rmul__(self, other):
        if isinstance(other, Quaternion):
            return TruncatedSeries([other * c for c in self.coeffs], self.order)
        return NotImplemented

    def _check(self, other):
        if not isinstance(other, TruncatedSeries) or other.order != self.order:
            raise ValueError("series orders must match")

    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries)
                and self.order == other.order and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def max_coeff_dev(self, other) -> float:
        self._check(other)
        return max(float((a - b).abs1()) for a, b in zip(self.coeffs, other.coeffs))


def series_product(items, order: int, ctx: Context = EXACT) -> TruncatedSeries:
    """Ordered product of polynomials, series and quaternion constants."""
    acc = TruncatedSeries.constant(quat(1, ctx=ctx), order)
    for it in items:
        if isinstance(it, TruncatedSeries):
            acc = acc * it
        elif isinstance(it, QPolynomial):
            acc = acc * TruncatedSeries.from_poly(it, order, ctx)
        elif isinstance(it, Quaternion):
            acc = acc * it
        else:
            raise TypeError(f"cannot multiply {type(it).__name__} into a series")
    return acc


def cauchy_kernel(alpha: Quaternion, order: int) -> TruncatedSeries:
    """k_alpha, coefficients alpha^n; (1 - z*alpha) * k_alpha = 1 at any
    truncation order."""
    out = [None] * (order + 1)
    zero = alpha.w * 0
    acc = Quaternion(zero + 1, zero, zero, zero)
    for n in range(order + 1):
        out[n] = acc
        acc = alpha * acc
    return TruncatedSeries(out, order)


def kernel_eval(alpha: Quaternion, gamma: Quaternion, side: str = "left",
                ctx: Context = EXACT) -> Quaternion:
    """Closed-form evaluation of the Cauchy kernel k_alpha at gamma.

    Writing U = 1 - (alpha + conj alpha)*gamma + |alpha|^2 gamma^2, the left
    value is U^-1 (1 - gamma conj(alpha)) and the right value mirrors it;
    U is invertible whenever |alpha|,|gamma| < 1.
    """
    t = alpha.w + alpha.w
    n2 = alpha.norm2()
    zero = gamma.w * 0
    one = Quaternion(zero + 1, zero, zero, zero)
    upsilon = one - gamma * t + (gamma * gamma) * n2
    if is_zero_quat(upsilon, ctx, 1 + abs(t) + abs(n2)):
        raise SingularUpsilon("kernel evaluation denominator vanishes")
    if side == "left":
        return upsilon.inverse() * (one - gamma * alpha.conjugate())
    if side == "right":
        return (one - alpha.conjugate() * gamma) * upsilon.inverse()
    raise ValueError("side must be 'left' or 'right'")


def blaschke_factor(alpha: Quaternion, order: int) -> TruncatedSeries:
    """b_alpha = (z - alpha) * k_conj(alpha): constant term -alpha, then
    (1 - |alpha|^2) * conj(alpha)^(n-1)."""
    n2 = alpha.norm2()
    zero = alpha.w * 0
    out = [-alpha]
    acc = Quaternion(zero + 1 - n2, zero, zero, zero)
    ab = alpha.conjugate()
    for _ in range(order):
        out.append(acc)
        acc = ab * acc
    return TruncatedSeries(out, order)


def norm_preservation_check(alpha: Quaternion, d: Quaternion, c: Quaternion,
                            k: int) -> tuple[object, object]:
    """Both sides of the exact norm identity for b_alpha * (d + c z^k), the
    geometric tail summed in closed form.  k >= 1; requires |alpha| < 1 only
    for the analytic reading, the identity itself is algebraic."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n2 = alpha.norm2()
    one = n2 * 0 + 1
    d2 = d.norm2()
    c2 = c.norm2()
    geo = n2 * 0
    p = one
    for _ in range(k - 1):
        geo = geo + p
        p = p * n2
    abk1 = alpha.conjugate() ** (k - 1)
    mid_vec = abk1 * d * (one - n2) - alpha * c
    tail_vec = alpha.conjugate() * abk1 * d + c
    lhs = (n2 * d2
           + (one - n2) * (one - n2) * d2 * geo
           + mid_vec.norm2()
           + (one - n2) * tail_vec.norm2())
    rhs = c2 + d2
    return lhs, rhs


# -- completion to a finite Blaschke product ------------------------------------


@dataclass(frozen=True)
class CompletionStep:
    """One pivot of the completion recursion; the exact polynomial identity

        (1 - z*delta) phi (z - alpha_prime)
            = phi_next (z - alpha_prime_next) (1 - z*beta)

    holds at every step."""

    delta: Quaternion
    phi: Quaternion
    alpha_prime: Quaternion
    beta: Quaternion
    phi_next: Quaternion
    alpha_prime_next: Quaternion


@dataclass(frozen=True)
class BlaschkeCompletion:
    """Kernel parameters, Blaschke parameters and the unimodular phase for
    an ordered root list: the identity

        prod (z - a_t) * prod k_{betas[t]} = prod b_{gammas[t]} * phase

    holds with betas[t], gammas[t] in the class of ordered_roots[t]."""

    ordered_roots: tuple[Quaternion, ...]
    betas: tuple[Quaternion, ...]
    gammas: tuple[Quaternion, ...]
    phase: Quaternion
    steps: tuple[CompletionStep, ...]
    phase_drift: float = 0.0

    def residual(self, order: int, ctx: Context = EXACT) -> float:
        """Max coefficient deviation of the defining identity, truncated."""
        if not self.ordered_roots:
            return 0.0
        lhs = series_product(
            [rho(a) for a in self.ordered_roots]
            + [cauchy_kernel(b, order) for b in self.betas], order, ctx)
        rhs = series_product(
            [blaschke_factor(g, order) for g in self.gammas] + [self.phase], order, ctx)
        return lhs.max_coeff_dev(rhs)


def _unit_norm(q: Quaternion, ctx: Context):
    """Float backend: pull a unimodular quaternion back onto the unit sphere."""
    if ctx.is_exact:
        return q, 0.0
    import math
    n = math.sqrt(float(q.norm2()))
    return q * (1.0 / n), abs(n - 1.0)


def _completion_core(roots, ctx: Context):
    """The induction over the root list; returns (deltas, gammas, phase, steps,
    drift) for roots with no real or spherical content."""
    deltas: list[Quaternion] = []
    gammas: list[Quaternion] = []
    one = quat(1, ctx=ctx)
    phase = one
    steps: list[CompletionStep] = []
    drift = 0.0
    for a in roots:
        alpha_p = a
        phi = one
        new_deltas: list[Quaternion] = []
        for delta in deltas:
            c = phi.inverse() * delta * phi
            pivot = one - alpha_p.conjugate() * c
            if is_zero_quat(pivot, ctx, 1 + c.abs1()):
                raise SingularPivot("completion pivot vanished; roots must lie "
                                    "in the open unit ball")
            piv_inv = pivot.inverse()
            beta = pivot * c * piv_inv
            alpha_next = pivot * alpha_p * piv_inv
            phi_next = phi * (one - c * alpha_p.conjugate()) * piv_inv
            phi_next, d = _unit_norm(phi_next, ctx)
            drift = max(drift, d)
            steps.append(CompletionStep(delta, phi, alpha_p, beta, phi_next, alpha_next))
            new_deltas.append(beta)
            alpha_p, phi = alpha_next, phi_next
        beta_last = alpha_p.conjugate()
        psi = phase * phi
        psi, d = _unit_norm(psi, ctx)
        drift = max(drift, d)
        gamma = psi * alpha_p * psi.inverse()
        # the two closed forms of the phase must coincide
        alt = gamma.inverse() * phase * a
        if not quat_close(alt, psi, ctx, 1 + psi.abs1()):
            raise AssertionError("phase consistency check failed")
        new_deltas.append(beta_last)
        deltas = new_deltas
        gammas.append(gamma)
        phase = psi
    return deltas, gammas, phase, steps, drift


def _split_central(roots, ctx: Context):
    """Separate real roots and spherical (characteristic) content from an
    ordered root list; both kinds have central kernels and Blaschke factors.

    Returns (central_params, core_roots) where central_params lists the
    beta = gamma values contributed by the central part."""
    roots = list(roots)
    real_part = [a for a in roots
                 if ctx.is_zero(a.x, 1) and ctx.is_zero(a.y, 1) and ctx.is_zero(a.z, 1)]
    rest = [a for a in roots
            if not (ctx.is_zero(a.x, 1) and ctx.is_zero(a.y, 1) and ctx.is_zero(a.z, 1))]
    central = list(real_part)
    if not rest:
        return central, []
    g = from_roots(rest)
    classes: list[tuple[ConjugacyClass, Quaternion]] = []
    for a in rest:
        v = class_of(a, ctx)
        if not any(classes_equal(v, u, ctx, 1 + abs(v.norm2)) for u, _ in classes):
            classes.append((v, a))
    spherical_found = False
    for v, probe in classes:
        kappa = mult_spherical(v, g, ctx, probe)
        if kappa:
            spherical_found = True
            g = spherical_shift_power(g, v, kappa)
            for _ in range(kappa):
                central.extend([probe, probe.conjugate()])
    if not spherical_found:
        return central, rest
    core: list[Quaternion] = []
    for v, probe in classes:
        if g.degree < 1:
            break
        n = xv_mult(real_coeffs(companion_real(g, ctx), ctx), v, ctx)
        if n == 0:
            continue
        chain, g = extract_left_chain(g, v, n, ctx, probe)
        core.extend(chain)
    if not g.is_constant():
        raise AssertionError("central split left a nonconstant cofactor")
    return central, core


def complete_to_blaschke(roots, ctx: Context = EXACT) -> BlaschkeCompletion:
    """Find kernel parameters completing an ordered root list to a finite
    Blaschke product.

    Every root must lie in the open unit ball.  Real roots and spherical
    content contribute their own (central) kernel parameters; the remaining
    core runs through the pivot recursion.  The returned ordered_roots
    reorders the input (central factors first) without changing the product
    polynomial.
    """
    roots = list(roots)
    for a in roots:
        if not float(a.norm2()) < 1.0:
            raise PreconditionViolated("roots must lie inside the open unit ball")
    if not roots:
        return BlaschkeCompletion((), (), (), quat(1, ctx=ctx), ())
    central, core = _split_central(roots, ctx)
    deltas, gammas, phase, steps, drift = _completion_core(core, ctx)
    ordered = tuple(central) + tuple(core)
    betas = tuple(central) + tuple(deltas)
    gams = tuple(central) + tuple(gammas)
    if len(central) != len(roots) - len(core):
        raise AssertionError("central split lost roots")
    if from_roots(ordered) != from_roots(roots) and ctx.is_exact:
        raise AssertionError("reordering changed the product polynomial")
    return BlaschkeCompletion(ordered, betas, gams, phase, tuple(steps), drift)


def step_identity_sides(step: CompletionStep, ctx: Context = EXACT):
    """Both polynomials of the per-step identity, for exactness checks."""
    one = one_poly(ctx)
    z = QPolynomial((quat(0, ctx=ctx), quat(1, ctx=ctx)))
    lhs = (one - z * step.delta) * (step.phi * rho(step.alpha_prime))
    rhs = (step.phi_next * rho(step.alpha_prime_next)) * (one - z * step.beta)
    return lhs, rhs
