import pytest

from quatpoly.errors import DegenerateEvaluations
from quatpoly.parsing import parse_poly, parse_quaternion
from quatpoly.polynomials import companion_real, from_roots, rho
from quatpoly.quaternions import class_of, quat, quat_close
from quatpoly.roots import find_all_roots, in_class_roots_left_eval, in_class_roots_right_eval
from quatpoly.scalars import EXACT, FLOAT64

from _samplers import (
    float_point_of_seed,
    rand_in_class,
    rand_nonreal_quat,
    rand_separated_classes,
)
from conftest import I, J, K, ONE, q

F2 = parse_poly("z^2 - z*(j + 2k) + 2i")


def test_in_class_roots_from_left_evaluations():
    gl, gr = in_class_roots_left_eval(F2, I)
    assert gl == J
    assert gr == parse_quaternion("0.8k - 0.6j")
    gl, gr = in_class_roots_left_eval(F2, 2 * I)
    assert gl == parse_quaternion("1.6j + 1.2k")
    assert gr == 2 * K


def test_in_class_right_root_of_factored_product():
    f = rho(I) * rho(J)
    _, gr = in_class_roots_left_eval(f, J)
    assert gr == J


def test_in_class_roots_from_right_evaluations_agree():
    for alpha in (I, 2 * I):
        assert in_class_roots_right_eval(F2, alpha) == in_class_roots_left_eval(F2, alpha)


def test_right_eval_variant_on_real_polynomial():
    f = parse_poly("(z^2 + z + 1)*(z - 2)")
    gl, gr = in_class_roots_right_eval(f, q("-1/2", 1))
    assert gl == gr  # left and right zeros coincide for real polynomials


def test_degenerate_error_paths():
    with pytest.raises(DegenerateEvaluations):
        in_class_roots_left_eval(rho(I) * rho(J), I)  # evaluation vanishes
    with pytest.raises(DegenerateEvaluations):
        in_class_roots_right_eval(rho(J) * rho(I), I)


def test_find_all_roots_paper_quadratic():
    report = find_all_roots(F2, EXACT)
    assert [c.kind for c in report.classes] == ["isolated", "isolated"]
    c1, c2 = report.classes
    assert c1.cls.key() == (0, 1)
    assert c1.left_root == J and c1.right_root == parse_quaternion("(4k - 3j)/5")
    assert c2.cls.key() == (0, 4)
    assert c2.left_root == parse_quaternion("(8j + 6k)/5") and c2.right_root == 2 * K
    # the two factorizations of f implied by the roots
    assert from_roots([J, 2 * K]) == F2
    assert from_roots([c2.left_root, c1.right_root]) == F2


def test_find_all_roots_spherical_and_real():
    f = parse_poly("(z^2 + 1)*(z - 1)")
    report = find_all_roots(f, EXACT)
    kinds = {c.cls.key(): c.kind for c in report.classes}
    assert kinds == {(0, 1): "spherical", (2, 1): "real"}
    real = [c for c in report.classes if c.kind == "real"][0]
    assert real.left_root == ONE and real.right_root == ONE


def test_find_all_roots_degenerate_branch():
    # the degree-7 example: f^el(i) = 0 but the class is not spherical
    f7 = parse_poly(
        "z^7 - (1+i+j+k)*z^6 + (2-i+2j)*z^5 - (3+i+2j+2k)*z^4"
        " + (1-2i+4j)*z^3 - (3-i+j+k)*z^2 + (2j-i)*z + i - 1")
    assert f7.eval_left(I).is_exactly_zero()
    assert f7.eval_left(-I).is_exactly_zero() is False
    report = find_all_roots(f7, EXACT)
    by_key = {c.cls.key(): c for c in report.classes}
    c1 = by_key[(0, 1)]
    assert c1.kind == "isolated" and c1.multiplicity == 6
    assert c1.left_root == I
    assert c1.right_root == f7.eval_left(-I).inverse() * I * f7.eval_left(-I)
    c2 = by_key[(2, 2)]
    assert c2.kind == "isolated" and c2.multiplicity == 1


def test_mirror_degenerate_branch():
    # conj(alpha) is the left zero: f = rho(-i) has f^el(-i) = 0
    f = rho(-I) * rho(q(0, 0, 2))
    report = find_all_roots(f, EXACT)
    c1 = [c for c in report.classes if c.cls.key() == (0, 1)][0]
    assert c1.left_root == -I


def test_multiplicities_sum_to_companion_degree():
    f = parse_poly("(z^2+1)^2*(z - 1)*(z - j)")
    report = find_all_roots(f, EXACT)
    total = sum((1 if c.kind == "real" else 2) * c.multiplicity for c in report.classes)
    assert total == 2 * f.degree


def test_probes_allow_irrational_classes_exactly():
    base = q(0, 1, 1)  # class (0, 2): no rational canonical point
    f = rho(base) * rho(q(1, 0, 2))
    report = find_all_roots(f, EXACT, probes=[base, q(1, 0, 2)])
    got = [c for c in report.classes if c.cls.key() == (0, 2)][0]
    assert got.left_root == base


def test_left_and_right_roots_of_random_factored(rng):
    for _ in range(25):
        roots = []
        bases = []
        while len(roots) < rng.randint(1, 4):
            cand = rand_nonreal_quat(rng)
            if all(class_of(cand) != class_of(b) for b in bases):
                bases.append(cand)
                roots.append(rand_in_class(rng, cand))
        f = from_roots(roots)
        report = find_all_roots(f, EXACT, probes=roots)
        lefts = [c.left_root for c in report.classes]
        rights = [c.right_root for c in report.classes]
        assert any(r == roots[0] for r in lefts)
        assert any(r == roots[-1] for r in rights)
        for c in report.classes:
            assert f.eval_left(c.left_root).is_exactly_zero()
            assert f.eval_right(c.right_root).is_exactly_zero()
            assert class_of(c.left_root) == c.cls


def test_float_backend_residuals(rng):
    ctx = FLOAT64
    for _ in range(20):
        seeds = rand_separated_classes(rng, rng.randint(1, 4))
        roots = [float_point_of_seed(rng, s) for s in seeds]
        f = from_roots(roots)
        report = find_all_roots(f, ctx)
        assert len(report.classes) == len(seeds)
        bound = 1e-8 * float(f.abs1())
        for c in report.classes:
            if c.kind == "real":
                continue
            scale = max(1.0, float(c.left_root.norm2()) ** 0.5) ** f.degree
            assert float(f.eval_left(c.left_root).abs1()) <= bound * scale
            assert float(f.eval_right(c.right_root).abs1()) <= bound * scale
