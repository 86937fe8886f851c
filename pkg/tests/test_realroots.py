import pytest

from quatpoly.errors import NeedsFloatBackend, NoConvergence
from quatpoly.parsing import parse_poly
from quatpoly.realroots import (
    aberth_roots,
    cluster_roots,
    rational_root_clusters,
    real_poly_complex_roots,
    s_divmod,
    s_gcd_monic,
    squarefree_part,
)
from quatpoly.scalars import EXACT, FLOAT64, rational


def keys(clusters):
    return [(c.trace, c.norm2, c.multiplicity, c.is_real) for c in clusters]


def test_scalar_division():
    # (z^2 - 1) / (z - 1)
    q, r = s_divmod([rational(-1), rational(0), rational(1)], [rational(-1), rational(1)])
    assert q == [rational(1), rational(1)] and r == []


def test_scalar_gcd_and_squarefree():
    one = rational(1)
    p = [one * 4, one * 0, one * 5, one * 0, one]  # (z^2+1)(z^2+4)
    sq = [c for c in squarefree_part(p)]
    assert sq == p
    # (z-1)^2 (z+2)
    pp = [one * 2, one * -3, one * 0, one]
    assert squarefree_part(pp) == [one * -2, one * 1, one]
    assert s_gcd_monic(pp, [one * -1, one]) == [one * -1, one]


def test_aberth_simple_roots():
    roots = sorted(aberth_roots([2.0, -3.0, 1.0]), key=lambda z: z.real)
    assert abs(roots[0] - 1) < 1e-9 and abs(roots[1] - 2) < 1e-9


def test_aberth_multiple_roots_stay_clustered():
    # (z-1)^4: the scatter must stay inside one cluster
    roots = aberth_roots([1.0, -4.0, 6.0, -4.0, 1.0])
    assert all(abs(z - 1) < 1e-3 for z in roots)


def test_aberth_iteration_cap():
    with pytest.raises(NoConvergence):
        aberth_roots([2.0, -3.0, 1.0, 5.0, -2.0, 1.0], eps=1e-10, max_iter=1)


def test_aberth_needs_degree():
    with pytest.raises(ValueError):
        aberth_roots([1.0])


def test_exact_clusters_quartic():
    cl = rational_root_clusters([4, 0, 5, 0, 1])
    assert keys(cl) == [(0, 1, 1, False), (0, 4, 1, False)]


def test_exact_clusters_degree14():
    p = parse_poly("(z^2+1)^6*(z^2 - 2*z + 2)")
    cl, warn = real_poly_complex_roots(p, EXACT)
    assert warn == []
    assert keys(cl) == [(0, 1, 6, False), (2, 2, 1, False)]


def test_exact_real_root():
    cl = rational_root_clusters([-1, 1])
    assert keys(cl) == [(2, 1, 1, True)]


def test_exact_rejects_irrational_classes():
    with pytest.raises(NeedsFloatBackend):
        rational_root_clusters([2, 0, 0, 0, 1])  # z^4 + 2
    with pytest.raises(NeedsFloatBackend):
        rational_root_clusters([-2, 0, 1])  # z^2 - 2: irrational real roots


def test_exact_mixed_close_classes():
    # distinct rational classes much closer than any float cluster radius
    p = parse_poly("(z^2 + 1)*(z^2 + 400/361)")  # |im| = 1 vs 20/19
    cl, _ = real_poly_complex_roots(p, EXACT)
    assert keys(cl) == [(0, 1, 1, False), (0, rational(400, 361), 1, False)]


def test_float_clusters():
    p = parse_poly("(z^2+1)^6*(z^2 - 2*z + 2)", FLOAT64)
    cl, warnings = real_poly_complex_roots(p, FLOAT64)
    assert len(cl) == 2
    a, b = cl
    assert abs(a.trace) < 1e-2 and abs(a.norm2 - 1) < 1e-2 and a.multiplicity == 6
    assert abs(b.trace - 2) < 1e-8 and abs(b.norm2 - 2) < 1e-8 and b.multiplicity == 1
    assert not a.is_real and not b.is_real


def test_float_real_multiple_root():
    p = parse_poly("(z - 1)^6", FLOAT64)
    cl, _ = real_poly_complex_roots(p, FLOAT64)
    assert len(cl) == 1 and cl[0].is_real and cl[0].multiplicity == 6


def test_cluster_separation_warning():
    roots = [complex(0, 1.0), complex(0, -1.0), complex(0.03, 1.0), complex(0.03, -1.0)]
    clusters, warnings = cluster_roots(roots, FLOAT64, 1.0)
    assert len(clusters) == 2
    assert warnings  # centers 0.03 apart sit inside the 2*cutoff band


def test_rejects_nonreal_input():
    from quatpoly.errors import NonRealResult
    with pytest.raises(NonRealResult):
        real_poly_complex_roots(parse_poly("z^2 + i"), EXACT)
