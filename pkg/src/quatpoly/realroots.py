"""Complex roots of real polynomials, grouped into conjugacy-class clusters.

Two kernels sit behind one interface:

* float backend: simultaneous Aberth-Ehrlich iteration started on a
  perturbed circle, followed by single-linkage clustering of the root keys
  (2*Re z, |z|^2);
* exact backend: square-free reduction over the rationals, float seeding of
  the square-free part, rationalization of each candidate class and exact
  trial division.  Inputs whose real companion polynomial does not split
  into rational linear/quadratic factors raise NeedsFloatBackend.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from .errors import NeedsFloatBackend, NoConvergence
from .polynomials import QPolynomial, real_coeffs
from .quaternions import ConjugacyClass
from .scalars import Context, EXACT, rational

_ULP = 2.0 ** -53


@dataclass(frozen=True)
class ComplexRootCluster:
    """One conjugacy class of roots.

    multiplicity counts conjugate pairs for a non-real cluster (the exponent
    of the class's characteristic quadratic) and single roots for a real one.
    """

    trace: object
    norm2: object
    multiplicity: int
    is_real: bool

    def conjugacy_class(self) -> ConjugacyClass:
        return ConjugacyClass(self.trace, self.norm2, self.is_real)

    def key(self):
        return (self.trace, self.norm2)


# -- scalar polynomial helpers (ascending coefficient lists) -------------------


def s_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def s_deriv(a):
    return [a[k] * k for k in range(1, len(a))]


def s_monic(a):
    lead = a[-1]
    return [c / lead for c in a]


def s_divmod(a, b):
    """Polynomial divmod over a field; b nonzero."""
    b = s_trim(b)
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    m = len(b) - 1
    if len(a) - 1 < m:
        return [], s_trim(a)
    lead = b[-1]
    q = [a[0] * 0] * (len(a) - m)
    for t in range(len(a) - m - 1, -1, -1):
        c = a[m + t] / lead
        q[t] = c
        if c != 0:
            for idx in range(m + 1):
                a[idx + t] -= b[idx] * c
    return s_trim(q), s_trim(a[:m])


def s_gcd_monic(a, b):
    a, b = s_trim(a), s_trim(b)
    while b:
        _, r = s_divmod(a, b)
        a, b = b, r
    return s_monic(a) if a else a


def squarefree_part(a):
    """a / gcd(a, a') over the rationals, made monic."""
    g = s_gcd_monic(a, s_deriv(a))
    if len(g) <= 1:
        return s_monic(a)
    q, r = s_divmod(a, g)
    assert not r, "gcd must divide"
    return s_monic(q)


# -- Aberth-Ehrlich ------------------------------------------------------------


def _horner2(coeffs, z):
    p = coeffs[-1]
    dp = 0j
    for c in reversed(coeffs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def aberth_roots(coeffs, eps=1e-10, max_iter=200):
    """All complex roots of a real/complex coefficient polynomial (ascending).

    Stops when every approximation either moved less than eps*(1+|z|) or has
    a residual below the double-precision backward-error floor; raises
    NoConvergence at the iteration cap.
    """
    a = [complex(c) for c in coeffs]
    while a and abs(a[-1]) == 0.0:
        a.pop()
    if len(a) < 2:
        raise ValueError("need degree >= 1")
    zeros_at_origin = 0
    while abs(a[0]) == 0.0:
        a.pop(0)
        zeros_at_origin += 1
    n = len(a) - 1
    roots = [0j] * zeros_at_origin
    if n == 0:
        return roots
    if n == 1:
        return roots + [-a[0] / a[1]]

    lead = a[-1]
    a = [c / lead for c in a]
    radius = 1.0 + max(abs(c) for c in a[:-1])
    zs = [
        radius * cmath.exp(2j * cmath.pi * (t + 0.27) / n + 0.43j / n)
        for t in range(n)
    ]
    absa = [abs(c) for c in a]
    done = [False] * n
    for _ in range(max_iter):
        moved = False
        for t in range(n):
            if done[t]:
                continue
            z = zs[t]
            p, dp = _horner2(a, z)
            bound = 0.0
            zp = 1.0
            az = abs(z)
            for c in absa:
                bound += c * zp
                zp *= az
            if abs(p) <= 8 * _ULP * bound:
                done[t] = True
                continue
            if dp == 0:
                zs[t] = z + (1e-6 + 1e-6j) * (1.0 + az)
                moved = True
                continue
            newton = p / dp
            s = 0j
            for u in range(n):
                if u != t:
                    dz = z - zs[u]
                    if dz == 0:
                        dz = (1e-12 + 1e-12j) * (1.0 + az)
                    s += 1.0 / dz
            denom = 1.0 - newton * s
            step = newton if denom == 0 else newton / denom
            zs[t] = z - step
            if abs(step) <= eps * (1.0 + abs(zs[t])):
                done[t] = True
            else:
                moved = True
        if not moved and all(done):
            return roots + zs
    raise NoConvergence(f"no convergence after {max_iter} iterations")


# -- clustering (float backend) -------------------------------------------------


def _single_linkage(points, cutoff):
    n = len(points)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            dx = points[i][0] - points[j][0]
            dy = points[i][1] - points[j][1]
            if (dx * dx + dy * dy) ** 0.5 <= cutoff:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def cluster_roots(roots, ctx: Context, coeff_scale=1.0):
    """Group float roots into conjugacy-class clusters.

    Returns (clusters, warnings).  The cutoff is cluster_tol (absolute; the
    root sets handled here have magnitude O(1)) plus the eps-scaled term, so
    the scatter of a multiple root lands in a single cluster while classes
    separated by more than ~2*cluster_tol stay apart.
    """
    pts = [(z.real, abs(z.imag)) for z in roots]
    cutoff = float(ctx.cluster_tol) + float(ctx.eps) * (1.0 + coeff_scale)
    groups = _single_linkage(pts, cutoff)
    clusters = []
    centers = []
    warnings = []
    for idx in groups:
        members = [roots[t] for t in idx]
        t_hat = sum(2.0 * z.real for z in members) / len(members)
        n_hat = sum(abs(z) ** 2 for z in members) / len(members)
        gap = n_hat - t_hat * t_hat / 4.0
        is_real = gap <= max(float(ctx.eps), ctx.real_tol) * (1.0 + n_hat)
        if is_real:
            mult = len(members)
        else:
            if len(members) % 2:
                warnings.append(
                    f"cluster near (trace={t_hat:.6g}, norm2={n_hat:.6g}) has odd "
                    f"member count {len(members)}; rounding multiplicity up")
            mult = (len(members) + 1) // 2
        clusters.append(ComplexRootCluster(t_hat, n_hat, mult, is_real))
        centers.append((sum(pts[t][0] for t in idx) / len(idx),
                        sum(pts[t][1] for t in idx) / len(idx)))
    for s in range(len(centers)):
        for t in range(s + 1, len(centers)):
            d = ((centers[s][0] - centers[t][0]) ** 2
                 + (centers[s][1] - centers[t][1]) ** 2) ** 0.5
            if d < 2 * cutoff:
                a, b = clusters[s], clusters[t]
                warnings.append(
                    f"clusters (trace={a.trace:.6g}, norm2={a.norm2:.6g}) and "
                    f"(trace={b.trace:.6g}, norm2={b.norm2:.6g}) nearly merge")
    clusters.sort(key=lambda c: (c.trace, c.norm2))
    return clusters, warnings


# -- exact backend: rationalize and verify --------------------------------------


_DENOMINATOR_LADDER = (10 ** 3, 10 ** 6, 10 ** 9)


def _rationalize(x: float, verify) -> object | None:
    for bound in _DENOMINATOR_LADDER:
        cand = rational(Fraction(x).limit_denominator(bound))
        if verify(cand):
            return cand
    return None


def _division_count(p, factor):
    count = 0
    while True:
        q, r = s_divmod(p, factor)
        if r:
            return count, p
        count += 1
        p = q


def rational_root_clusters(scalars) -> list[ComplexRootCluster]:
    """Cluster decomposition of a rational real polynomial.

    Raises NeedsFloatBackend when the polynomial has an irreducible factor
    over the rationals that is not linear or a negative-discriminant
    quadratic (equivalently, when some root class is irrational).
    """
    p = s_monic(s_trim([rational(c) for c in scalars]))
    if len(p) < 2:
        raise ValueError("need degree >= 1")
    sf = squarefree_part(p)
    roots = aberth_roots([float(c) for c in sf], eps=1e-12, max_iter=200)

    residual = sf
    found = []
    seen = set()
    im_tol = 1e-8
    for z in roots:
        if z.imag < im_tol * (1.0 + abs(z)):
            continue  # lower-halfplane partner or a real root, handled below
        t = _rationalize(2.0 * z.real, lambda c: True)
        factor_holder = {}

        def verify_pair(n_cand, t_cand=t):
            factor = [n_cand, -t_cand, rational(1)]
            _, r = s_divmod(sf, factor)
            if r:
                return False
            factor_holder["factor"] = factor
            return True

        # trace and norm2 rationalize jointly: try the ladder on norm2 with
        # the trace candidate fixed, then widen the trace if that fails
        n = _rationalize(abs(z) ** 2, verify_pair)
        if n is None:
            ok = False
            for bound in _DENOMINATOR_LADDER:
                t = rational(Fraction(2.0 * z.real).limit_denominator(bound))
                n = _rationalize(abs(z) ** 2, verify_pair)
                if n is not None:
                    ok = True
                    break
            if not ok:
                raise NeedsFloatBackend(
                    f"root class near (trace={2 * z.real:.6g}, norm2={abs(z) ** 2:.6g}) "
                    "is not rational")
        factor = factor_holder["factor"]
        key = (factor[1], factor[0])
        if key in seen:
            continue
        seen.add(key)
        mult, _ = _division_count(p, factor)
        assert mult >= 1
        found.append(ComplexRootCluster(-factor[1], factor[0], mult, False))
        _, residual = _divmod_or_keep(residual, factor)
    for z in roots:
        if abs(z.imag) >= im_tol * (1.0 + abs(z)):
            continue
        x = _rationalize(z.real, lambda c: not s_divmod(sf, [-c, rational(1)])[1])
        if x is None:
            raise NeedsFloatBackend(f"real root near {z.real:.6g} is not rational")
        if ("real", x) in seen:
            continue
        seen.add(("real", x))
        mult, _ = _division_count(p, [-x, rational(1)])
        assert mult >= 1
        found.append(ComplexRootCluster(2 * x, x * x, mult, True))
        _, residual = _divmod_or_keep(residual, [-x, rational(1)])
    if len(residual) > 1:
        raise NeedsFloatBackend("a rational factor of degree > 2 remains")
    total = sum((2 if c.is_real is False else 1) * c.multiplicity for c in found)
    assert total == len(p) - 1, "multiplicities must add up to the degree"
    found.sort(key=lambda c: (c.trace, c.norm2))
    return found


def _divmod_or_keep(p, factor):
    q, r = s_divmod(p, factor)
    if r:
        return None, p
    return q, q


def real_poly_complex_roots(p: QPolynomial, ctx: Context = EXACT):
    """All complex roots of a real polynomial, grouped by conjugacy class.

    Returns (clusters, warnings); warnings is empty on the exact backend.
    """
    scalars = real_coeffs(p, ctx)
    scalars = s_trim(scalars)
    if len(scalars) < 2:
        raise ValueError("need degree >= 1")
    if ctx.is_exact:
        return rational_root_clusters(scalars), []
    roots = aberth_roots([float(s) for s in scalars], eps=float(ctx.eps), max_iter=200)
    coeff_scale = max(abs(float(s)) for s in scalars)
    return cluster_roots(roots, ctx, coeff_scale)
