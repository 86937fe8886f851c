import pytest
from hypothesis import given, strategies as st

from quatpoly.errors import IrrationalRepresentative
from quatpoly.quaternions import (
    ConjugacyClass,
    Quaternion,
    class_of,
    class_representative,
    quat,
    quat_inverse,
    quat_mul,
    validate_spherical_chain,
)
from quatpoly.scalars import EXACT, rational

from conftest import I, J, K, ONE, q

rational_st = st.fractions(min_value=-3, max_value=3, max_denominator=3).map(rational)
quat_st = st.builds(Quaternion, rational_st, rational_st, rational_st, rational_st)
nonzero_quat_st = quat_st.filter(lambda a: not a.is_exactly_zero())


@pytest.mark.parametrize("a,b,expected", [
    (I, J, K),
    (J, K, I),
    (K, I, J),
    (J, I, -K),
    (I, I, -ONE),
    (J, J, -ONE),
    (K, K, -ONE),
])
def test_multiplication_table(a, b, expected):
    assert quat_mul(a, b) == expected


def test_ijk_is_minus_one():
    assert I * J * K == -ONE


def test_identity():
    a = q(2, "1/2", -3, "2/3")
    assert a * ONE == a
    assert ONE * a == a


def test_conjugation_by_unit():
    km1 = K - ONE
    assert quat_inverse(km1) * I * km1 == J


def test_inverse_values():
    km1 = K - ONE
    assert quat_inverse(km1) == q("-1/2", 0, 0, "-1/2")
    assert quat_inverse(ONE) == ONE
    with pytest.raises(ZeroDivisionError):
        quat_inverse(q(0))


@given(quat_st, quat_st)
def test_norm_is_multiplicative(a, b):
    assert (a * b).norm2() == a.norm2() * b.norm2()


@given(quat_st)
def test_conjugate_product_is_norm(a):
    n = a * a.conjugate()
    assert n == Quaternion(a.norm2(), rational(0), rational(0), rational(0))


@given(nonzero_quat_st)
def test_inverse_roundtrip(a):
    assert a * a.inverse() == ONE
    assert a.inverse() * a == ONE


def test_class_of_values():
    assert class_of(I).key() == (0, 1)
    assert class_of(q(1, 0, 1)).key() == (2, 2)
    assert class_of(q(0, 0, "-3/5", "4/5")).key() == class_of(I).key()


@given(nonzero_quat_st, quat_st)
def test_class_invariant_under_conjugation(h, a):
    assert class_of(h.inverse() * a * h) == class_of(a)


@given(nonzero_quat_st, quat_st)
def test_inner_conjugation_preserves_class_of_products(h, b):
    assert class_of(h.inverse() * b * h).key() == (2 * b.w, b.norm2())


@given(quat_st, nonzero_quat_st)
def test_conjugate_point_identity(a, h):
    # (a - b)^-1 b (a - b) = conj(a) for distinct equivalent a, b
    b = h.inverse() * a * h
    d = a - b
    if d.is_exactly_zero():
        return
    assert d.inverse() * b * d == a.conjugate()


def test_class_representative():
    assert class_representative(ConjugacyClass(rational(0), rational(1), False)) == I
    assert class_representative(ConjugacyClass(rational(2), rational(2), False)) == q(1, 1)
    with pytest.raises(IrrationalRepresentative):
        class_representative(ConjugacyClass(rational(0), rational(2), False))


def test_class_representative_requires_valid_class():
    with pytest.raises(ValueError):
        class_representative(ConjugacyClass(rational(4), rational(1), False))


def test_spherical_chain_validation():
    assert validate_spherical_chain([K, J])
    assert not validate_spherical_chain([I, -I])
    assert not validate_spherical_chain([I, q(1, 0, 1)])
    assert validate_spherical_chain([I])
    assert validate_spherical_chain([])
    # a real point conjugate-equals itself, so repeats break the chain rule
    assert not validate_spherical_chain([ONE, ONE])


def test_pow():
    assert I ** 2 == -ONE
    assert (I + J) ** 0 == ONE
    a = q(1, 2, "-1/2", 3)
    assert a ** 3 == a * a * a
