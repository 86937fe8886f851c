"""Left, right and spherical zeros of a quaternion polynomial.

The driver evaluates f at a conjugate pair of each root class of f*f# and
either declares the class spherical (both evaluations vanish) or produces
the unique left and right zero in the class from the two evaluations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegenerateEvaluations
from .polynomials import QPolynomial, companion_real, eval_scale
from .quaternions import (
    ConjugacyClass,
    Quaternion,
    class_of,
    classes_equal,
    in_class_point,
    is_zero_quat,
)
from .realroots import real_poly_complex_roots
from .scalars import Context, EXACT


@dataclass(frozen=True)
class ClassRoots:
    """Roots of f inside one conjugacy class of Z(f f#)."""

    cls: ConjugacyClass
    multiplicity: int  # pair multiplicity in f*f# (single for a real class)
    kind: str  # "spherical" | "isolated" | "real"
    left_root: Quaternion | None
    right_root: Quaternion | None


@dataclass(frozen=True)
class RootReport:
    classes: tuple[ClassRoots, ...]
    warnings: tuple[str, ...] = field(default=())

    def by_kind(self, kind: str):
        return [c for c in self.classes if c.kind == kind]


def in_class_roots_left_eval(f: QPolynomial, alpha: Quaternion,
                             ctx: Context = EXACT) -> tuple[Quaternion, Quaternion]:
    """The unique left and right zero of f in [alpha], from two left
    evaluations at alpha and its conjugate.

    Requires f^el(alpha) != 0 and assumes f has a root in the class; a zero
    inverse raises DegenerateEvaluations (the class was misclassified).
    """
    scale = eval_scale(f, alpha, ctx)
    fa = f.eval_left(alpha)
    if is_zero_quat(fa, ctx, scale):
        raise DegenerateEvaluations("left evaluation at the probe vanishes")
    ab = alpha.conjugate()
    fab = f.eval_left(ab)
    den_l = fa + fab
    den_r = fa - fab
    if is_zero_quat(den_l, ctx, scale) or is_zero_quat(den_r, ctx, scale):
        raise DegenerateEvaluations(
            "evaluations at the conjugate pair are equal up to sign; "
            "f has no isolated root in this class")
    gl = (ab * fa + alpha * fab) * den_l.inverse()
    gr = den_r.inverse() * (ab * fa - alpha * fab)
    return gl, gr


def in_class_roots_right_eval(f: QPolynomial, alpha: Quaternion,
                              ctx: Context = EXACT) -> tuple[Quaternion, Quaternion]:
    """Same contract as in_class_roots_left_eval but driven by right
    evaluations."""
    scale = eval_scale(f, alpha, ctx)
    fa = f.eval_right(alpha)
    if is_zero_quat(fa, ctx, scale):
        raise DegenerateEvaluations("right evaluation at the probe vanishes")
    ab = alpha.conjugate()
    fab = f.eval_right(ab)
    den_l = fa - fab
    den_r = fa + fab
    if is_zero_quat(den_l, ctx, scale) or is_zero_quat(den_r, ctx, scale):
        raise DegenerateEvaluations(
            "evaluations at the conjugate pair are equal up to sign; "
            "f has no isolated root in this class")
    gl = (fa * ab - fab * alpha) * den_l.inverse()
    gr = den_r.inverse() * (fa * ab + fab * alpha)
    return gl, gr


def _match_probe(v: ConjugacyClass, probes, ctx: Context) -> Quaternion | None:
    if not probes:
        return None
    scale = 1 + abs(v.norm2)
    for p in probes:
        if classes_equal(v, class_of(p, ctx), ctx, scale):
            return p
    return None


def find_all_roots(f: QPolynomial, ctx: Context = EXACT, probes=None) -> RootReport:
    """Classify every root class of f and return the point roots.

    Real classes of f*f# carry a two-sided real root; each non-real class is
    either spherical (both conjugate evaluations vanish) or holds exactly one
    left and one right root, produced by the closed-form in-class formulas.

    probes: optional in-class points, used on the exact backend when a class
    has no rational canonical representative.
    """
    if f.degree < 1:
        raise ValueError("need degree >= 1")
    clusters, warnings = real_poly_complex_roots(companion_real(f, ctx), ctx)
    out = []
    for cl in clusters:
        v = cl.conjugacy_class()
        if cl.is_real:
            x = v.real_point()
            zero = x * 0
            root = Quaternion(x, zero, zero, zero)
            out.append(ClassRoots(v, cl.multiplicity, "real", root, root))
            continue
        alpha = in_class_point(v, ctx, _match_probe(v, probes, ctx))
        ab = alpha.conjugate()
        scale = eval_scale(f, alpha, ctx)
        fa = f.eval_left(alpha)
        fab = f.eval_left(ab)
        za = is_zero_quat(fa, ctx, scale)
        zb = is_zero_quat(fab, ctx, scale)
        if za and zb:
            out.append(ClassRoots(v, cl.multiplicity, "spherical", None, None))
        elif za:
            gr = fab.inverse() * alpha * fab
            out.append(ClassRoots(v, cl.multiplicity, "isolated", alpha, gr))
        elif zb:
            gr = fa.inverse() * ab * fa
            out.append(ClassRoots(v, cl.multiplicity, "isolated", ab, gr))
        else:
            gl, gr = in_class_roots_left_eval(f, alpha, ctx)
            out.append(ClassRoots(v, cl.multiplicity, "isolated", gl, gr))
    out.sort(key=lambda c: (c.cls.trace, c.cls.norm2))
    return RootReport(tuple(out), tuple(warnings))
