"""Indecomposability tests and decompositions into relatively prime
indecomposable factors.

A monic polynomial is indecomposable exactly when its linear factorization
is unique, i.e. its roots form a spherical chain in one class.  Every monic
f is the least right common multiple of indecomposables: one per class with
isolated zeros (the left spherical divisor itself) and two per spherical
class (a chain extension and a conjugate power).  Real-root powers (z-x)^k
generate irreducible right ideals and are kept whole, flagged "real-power";
their repeated-point tuple is not a spherical chain in the strict sense.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import SphericalDivisorPair, zero_structure
from .polynomials import QPolynomial, one_poly, rho
from .quaternions import ConjugacyClass, Quaternion, in_class_point
from .scalars import Context, EXACT


@dataclass(frozen=True)
class DecompositionPart:
    poly: QPolynomial
    cls: ConjugacyClass
    role: str  # "chain" | "chain-extension" | "conjugate-power" | "real-power"
    chain: tuple[Quaternion, ...]


@dataclass(frozen=True)
class IrreducibleDecomposition:
    side: str  # "left" | "right"
    parts: tuple[DecompositionPart, ...]

    def polys(self):
        return [p.poly for p in self.parts]


def is_indecomposable(f: QPolynomial, ctx: Context = EXACT, probes=None):
    """(flag, witness chain): True iff all zeros of f lie in one class with
    spherical multiplicity zero and trivial cofactor.

    A real power (z-x)^k counts as indecomposable (its right ideal is
    irreducible: lcm's of its divisors are again powers of z-x); the witness
    is then the repeated tuple (x,)*k.
    """
    if not f.is_monic() or f.degree < 1:
        raise ValueError("need a monic polynomial of positive degree")
    pairs = zero_structure(f, ctx, probes)
    if len(pairs) != 1:
        return False, None
    pair = pairs[0]
    if pair.cls.is_real:
        if pair.left_cofactor.is_constant():
            return True, pair.left_chain
        return False, None
    if pair.kappa == 0 and pair.left_cofactor.is_constant():
        return True, pair.left_chain
    return False, None


def _chain_poly(chain, ctx):
    p = one_poly(ctx)
    for a in chain:
        p = p * rho(a)
    return p


def _left_parts(pairs: list[SphericalDivisorPair], ctx: Context, probes=None):
    parts = []
    for pair in pairs:
        v = pair.cls
        if v.is_real:
            parts.append(DecompositionPart(
                _chain_poly(pair.left_chain, ctx), v, "real-power", pair.left_chain))
            continue
        if pair.kappa == 0:
            parts.append(DecompositionPart(
                _chain_poly(pair.left_chain, ctx), v, "chain", pair.left_chain))
            continue
        if pair.left_chain:
            first, last = pair.left_chain[0], pair.left_chain[-1]
            g_chain = pair.left_chain + (last,) * pair.kappa
        else:
            probe = None
            if probes:
                from .quaternions import class_of, classes_equal
                for p in probes:
                    if classes_equal(v, class_of(p, ctx), ctx, 1 + abs(v.norm2)):
                        probe = p
                        break
            a = in_class_point(v, ctx, probe)
            first = a
            g_chain = (a,) * pair.kappa
        h_chain = (first.conjugate(),) * pair.kappa
        parts.append(DecompositionPart(_chain_poly(g_chain, ctx), v, "chain-extension", g_chain))
        parts.append(DecompositionPart(_chain_poly(h_chain, ctx), v, "conjugate-power", h_chain))
    parts.sort(key=lambda p: (p.cls.trace, p.cls.norm2, p.role))
    return tuple(parts)


def decompose(f: QPolynomial, side: str = "left", ctx: Context = EXACT,
              probes=None) -> IrreducibleDecomposition:
    """Split f into relatively prime indecomposable parts.

    side="left": the parts recombine through the least right common
    multiple; side="right" mirrors through coefficientwise conjugation.
    """
    if not f.is_monic() or f.degree < 1:
        raise ValueError("need a monic polynomial of positive degree")
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if side == "right":
        mirrored = decompose(f.sharp(), "left", ctx, probes)
        parts = tuple(
            DecompositionPart(p.poly.sharp(), p.cls, p.role,
                              tuple(a.conjugate() for a in reversed(p.chain)))
            for p in mirrored.parts)
        return IrreducibleDecomposition("right", parts)
    pairs = zero_structure(f, ctx, probes)
    return IrreducibleDecomposition("left", _left_parts(pairs, ctx, probes))
