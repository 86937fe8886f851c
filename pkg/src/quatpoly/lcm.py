"""Least common multiples of quaternion polynomials.

The constructions split by where the zeros live:

* one class, left-coprime indecomposables: a closed-form product;
* one class, general: greatest-common-left-divisor reduction of the chain
  family after splitting each divisor into two indecomposables;
* distinct classes: iterated commuting of one indecomposable across a
  class-free polynomial;
* arbitrary collections: per-class divisor extraction, per-class lcm, then
  cross-class assembly.

Least *left* common multiples go through the coefficientwise-conjugation
duality h = llcm(...) <=> h# = lrcm(of the conjugated inputs).
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import SphericalDivisorPair, has_zero_in_class, zero_structure
from .errors import ClassCollision, ClassMismatch, NotCoprime, PreconditionViolated
from .polynomials import QPolynomial, eval_scale, one_poly, rho
from .quaternions import (
    ConjugacyClass,
    Quaternion,
    class_of,
    classes_equal,
    in_class_point,
    is_zero_quat,
    quat_close,
    validate_spherical_chain,
)
from .scalars import Context, EXACT


@dataclass(frozen=True)
class IndecomposableFactor:
    """A monic polynomial with a unique left zero: the ordered product of
    z - a over a spherical chain in one class."""

    cls: ConjugacyClass
    chain: tuple[Quaternion, ...]
    poly: QPolynomial

    @property
    def degree(self) -> int:
        return len(self.chain)

    def sharp(self) -> "IndecomposableFactor":
        chain = tuple(a.conjugate() for a in reversed(self.chain))
        return IndecomposableFactor(self.cls, chain, self.poly.sharp())


def factor_from_chain(chain, ctx: Context = EXACT) -> IndecomposableFactor:
    chain = tuple(chain)
    if not chain:
        raise ValueError("need a nonempty chain")
    if not validate_spherical_chain(chain, ctx):
        raise ValueError("points do not form a spherical chain")
    poly = one_poly(ctx)
    for a in chain:
        poly = poly * rho(a)
    return IndecomposableFactor(class_of(chain[0], ctx), chain, poly)


@dataclass(frozen=True)
class PrescribedDivisor:
    """Normal form of a polynomial with all zeros in one class:
    X_V^kappa * (z-a_1)...(z-a_n); a real class x is encoded as kappa = 0
    with chain (x,)*k."""

    cls: ConjugacyClass
    kappa: int
    chain: tuple[Quaternion, ...]

    @property
    def degree(self) -> int:
        return 2 * self.kappa + len(self.chain)

    def poly(self, ctx: Context = EXACT) -> QPolynomial:
        p = self.cls.char_poly(ctx) ** self.kappa if self.kappa else one_poly(ctx)
        for a in self.chain:
            p = p * rho(a)
        return p


def divisor_of_pair(pair: SphericalDivisorPair) -> PrescribedDivisor:
    kappa = 0 if pair.cls.is_real else pair.kappa
    return PrescribedDivisor(pair.cls, kappa, pair.left_chain)


# -- same class ------------------------------------------------------------------


def _require_same_class(factors, ctx: Context):
    v = factors[0].cls
    scale = 1 + abs(v.norm2)
    for g in factors[1:]:
        if not classes_equal(v, g.cls, ctx, scale):
            raise ClassMismatch("factors span several conjugacy classes")
    return v


def lrcm_same_class_coprime(g: IndecomposableFactor, h: IndecomposableFactor,
                            ctx: Context = EXACT) -> QPolynomial:
    """lrcm of two left-coprime indecomposables in one class:
    X^k for equal degrees, else X^k times the first n-k points of the longer
    chain (n = deg g >= k = deg h)."""
    v = _require_same_class([g, h], ctx)
    if g.degree < h.degree:
        g, h = h, g
    scale = 1 + abs(v.norm2)
    if quat_close(g.chain[0], h.chain[0], ctx, scale):
        raise NotCoprime("equal left zeros")
    n, k = g.degree, h.degree
    out = v.char_poly(ctx) ** k
    for a in g.chain[: n - k]:
        out = out * rho(a)
    return out


def llcm_same_class_coprime(g: IndecomposableFactor, h: IndecomposableFactor,
                            ctx: Context = EXACT) -> QPolynomial:
    """Right-coprime mirror: X^k, or X^k times the last n-k points of the
    longer chain."""
    v = _require_same_class([g, h], ctx)
    if g.degree < h.degree:
        g, h = h, g
    scale = 1 + abs(v.norm2)
    if quat_close(g.chain[-1], h.chain[-1], ctx, scale):
        raise NotCoprime("equal right zeros")
    n, k = g.degree, h.degree
    out = v.char_poly(ctx) ** k
    for a in g.chain[k:]:
        out = out * rho(a)
    return out


def glcd_indecomposable(g: IndecomposableFactor, h: IndecomposableFactor,
                        ctx: Context = EXACT) -> IndecomposableFactor:
    """Greatest common left divisor: every left divisor of an indecomposable
    is a chain prefix, so take the longest prefix of g's chain whose product
    still divides h from the left (confirmed by division)."""
    _require_same_class([g, h], ctx)
    scale = 1 + float(abs(g.cls.norm2)) if not ctx.is_exact else 1
    n = 0
    prefix = one_poly(ctx)
    best = prefix
    limit = min(g.degree, h.degree)
    while n < limit:
        if not quat_close(g.chain[n], h.chain[n], ctx, scale):
            break
        cand = best * rho(g.chain[n])
        _, r = h.poly.divide_right(cand)
        if not _poly_small(r, ctx, 1 + h.poly.abs1()):
            break
        best = cand
        n += 1
    return IndecomposableFactor(g.cls, g.chain[:n], best)


def _poly_small(f: QPolynomial, ctx: Context, scale) -> bool:
    if ctx.is_exact:
        return f.is_zero()
    return all(is_zero_quat(c, ctx, scale) for c in f.coeffs)


def _rep_point(v: ConjugacyClass, ctx: Context, hints) -> Quaternion:
    for h in hints:
        return h
    return in_class_point(v, ctx)


def lrcm_same_class_divisor(divisors, ctx: Context = EXACT) -> PrescribedDivisor:
    """lrcm of polynomials X^kappa_j * p_j with all zeros in one class,
    in normal form.

    Each input splits into two indecomposables (the chain extended by its
    last point kappa times, and the conjugate of its first point to the
    power kappa); the family then reduces by greatest common left divisors
    against a maximal-degree member g1, and the answer is X^k times a prefix
    of g1's chain, k the largest cofactor degree."""
    divisors = list(divisors)
    if not divisors:
        raise ValueError("need at least one divisor")
    v = divisors[0].cls
    scale = 1 + abs(v.norm2)
    for d in divisors[1:]:
        if not classes_equal(v, d.cls, ctx, scale):
            raise ClassMismatch("divisors span several conjugacy classes")
    if v.is_real:
        k = max(len(d.chain) for d in divisors)
        x = divisors[0].chain[0] if divisors[0].chain else None
        for d in divisors:
            if d.kappa:
                raise ValueError("real divisors encode powers in the chain")
            if d.chain:
                x = d.chain[0]
        if x is None or k == 0:
            raise ValueError("empty real divisor")
        return PrescribedDivisor(v, 0, (x,) * k)

    chainful = [d for d in divisors if d.chain]
    pure_kappa = max((d.kappa for d in divisors if not d.chain), default=0)
    hints = [d.chain[0] for d in chainful]
    factors: list[IndecomposableFactor] = []
    for d in chainful:
        ext = d.chain + (d.chain[-1],) * d.kappa
        factors.append(factor_from_chain(ext, ctx))
        if d.kappa:
            factors.append(factor_from_chain((d.chain[0].conjugate(),) * d.kappa, ctx))
    if pure_kappa:
        a = _rep_point(v, ctx, hints)
        factors.append(factor_from_chain((a,) * pure_kappa, ctx))
        factors.append(factor_from_chain((a.conjugate(),) * pure_kappa, ctx))
    if not factors:
        raise ValueError("empty divisor family")
    factors.sort(key=lambda g: -g.degree)
    g1 = factors[0]
    k = 0
    for gj in factors[1:]:
        p = glcd_indecomposable(gj, g1, ctx)
        k = max(k, gj.degree - p.degree)
    return PrescribedDivisor(v, k, g1.chain[: g1.degree - k])


def lrcm_same_class(divisors, ctx: Context = EXACT) -> QPolynomial:
    return lrcm_same_class_divisor(divisors, ctx).poly(ctx)


# -- distinct classes --------------------------------------------------------------


def lrcm_cross_class(f: IndecomposableFactor, q: QPolynomial, ctx: Context = EXACT):
    """lrcm of an indecomposable F and a polynomial Q with no zeros in F's
    class.  Returns (lcm, tail_chain, cofactor) where

        lcm = F.poly * cofactor = Q * (z-t_1)...(z-t_k)

    and both factorizations are checked to agree."""
    if q.is_zero():
        raise PreconditionViolated("Q must be nonzero")
    if has_zero_in_class(q, f.cls, ctx):
        raise PreconditionViolated("Q has a zero in the class of F")
    cur = q
    tail = []
    for a in f.chain:
        e = cur.eval_left(a)
        if is_zero_quat(e, ctx, eval_scale(cur, a, ctx)):
            raise PreconditionViolated("intermediate cofactor acquired a class zero")
        at = e.inverse() * a * e
        cur = (cur * rho(at)).shift_left(a)
        tail.append(at)
    lcm = f.poly * cur
    other = q
    for at in tail:
        other = other * rho(at)
    if not _poly_small(lcm - other, ctx, 1 + lcm.abs1()):
        raise AssertionError("the two factorizations of the lcm disagree")
    return lcm, tuple(tail), cur


def lrcm_distinct_classes(factors, ctx: Context = EXACT) -> QPolynomial:
    """lrcm of indecomposables with pairwise distinct classes, built by
    folding lrcm_cross_class; the degree adds up."""
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    for i, a in enumerate(factors):
        for b in factors[i + 1:]:
            if classes_equal(a.cls, b.cls, ctx, 1 + abs(a.cls.norm2)):
                raise ClassCollision("two factors share a conjugacy class")
    acc = factors[0].poly
    for f in factors[1:]:
        acc, _, _ = lrcm_cross_class(f, acc, ctx)
    return acc


def synthesize_from_divisors(divisors, ctx: Context = EXACT) -> QPolynomial:
    """The unique monic polynomial whose left divisor at each given class is
    the prescribed one: the lrcm of the chain parts times every real factor
    (characteristic powers and real-root powers commute with everything)."""
    divisors = sorted(divisors, key=lambda d: (d.cls.trace, d.cls.norm2))
    for i, a in enumerate(divisors):
        for b in divisors[i + 1:]:
            if classes_equal(a.cls, b.cls, ctx, 1 + abs(a.cls.norm2)):
                raise ClassCollision("two divisors share a conjugacy class")
    chain_parts = [factor_from_chain(d.chain, ctx)
                   for d in divisors if d.chain and not d.cls.is_real]
    out = lrcm_distinct_classes(chain_parts, ctx) if chain_parts else one_poly(ctx)
    for d in divisors:
        if not d.cls.is_real and d.kappa:
            out = out * (d.cls.char_poly(ctx) ** d.kappa)
        elif d.cls.is_real and d.chain:
            p = one_poly(ctx)
            for x in d.chain:
                p = p * rho(x)
            out = out * p
    return out


# -- the general drivers --------------------------------------------------------------


def _merge_class_lists(per_input, ctx: Context):
    """Union of the classes seen across inputs, tolerantly deduplicated."""
    merged = []
    for pairs in per_input:
        for pair in pairs:
            v = pair.cls
            if not any(classes_equal(v, u.cls, ctx, 1 + abs(v.norm2)) for u in merged):
                merged.append(pair)
    return [p.cls for p in merged]


def lrcm_general(polys, ctx: Context = EXACT, probes=None) -> QPolynomial:
    """Least right common multiple of any finite family.

    Inputs are made monic by a right unit; per class, the left spherical
    divisors of the inputs combine by the same-class construction, and the
    per-class results assemble across classes."""
    polys = list(polys)
    if not polys or any(p.is_zero() for p in polys):
        raise ValueError("need nonzero polynomials")
    monics = [p.monic_right()[0] for p in polys]
    structures = []
    for p in monics:
        structures.append([] if p.is_constant() else zero_structure(p, ctx, probes))
    classes = _merge_class_lists(structures, ctx)
    per_class: list[PrescribedDivisor] = []
    for v in classes:
        divs = []
        for pairs in structures:
            for pair in pairs:
                if classes_equal(v, pair.cls, ctx, 1 + abs(v.norm2)):
                    d = divisor_of_pair(pair)
                    if d.degree > 0:
                        divs.append(d)
        if divs:
            per_class.append(lrcm_same_class_divisor(divs, ctx))
    if not per_class:
        return one_poly(ctx)
    return synthesize_from_divisors(per_class, ctx)


def llcm_general(polys, ctx: Context = EXACT, probes=None) -> QPolynomial:
    """Least left common multiple, through conjugation duality:
    (g*h)# = h# g# turns left multiples into right multiples."""
    return lrcm_general([p.sharp() for p in polys], ctx, probes).sharp()
