import pytest
from hypothesis import given, strategies as st

from quatpoly.parsing import (
    ParseError,
    parse_poly,
    parse_quaternion,
    poly_json,
    poly_str,
    quat_str,
    scalar_json,
)
from quatpoly.polynomials import QPolynomial, from_roots, rho
from quatpoly.quaternions import Quaternion
from quatpoly.scalars import EXACT, FLOAT64, rational

from conftest import I, J, K, ONE, q

rational_st = st.fractions(min_value=-9, max_value=9, max_denominator=12).map(rational)
quat_st = st.builds(Quaternion, rational_st, rational_st, rational_st, rational_st)
poly_st = st.lists(quat_st, min_size=0, max_size=6).map(QPolynomial)


@pytest.mark.parametrize("text,expected", [
    ("i", I),
    ("-j", -J),
    ("2k", 2 * K),
    ("1 - 12/13*i + 3/13*j", q(1, "-12/13", "3/13")),
    ("0.8k - 0.6j", q(0, 0, "-3/5", "4/5")),
    ("(2i + j - 2k)/3", q(0, "2/3", "1/3", "-2/3")),
    ("  1+ i ", q(1, 1)),
    ("3/4", q("3/4")),
])
def test_parse_quaternion(text, expected):
    assert parse_quaternion(text) == expected


def test_parse_poly_forms():
    f = parse_poly("z^2 - z*(j + 2k) + 2i")
    assert f == QPolynomial((2 * I, -(J + 2 * K), ONE))
    factored = parse_poly("(z - i)*(z - j)")
    assert factored == rho(I) * rho(J)
    implicit = parse_poly("(z - i)(z - j)")
    assert implicit == factored
    assert parse_poly("(z^2+1)^2") == parse_poly("z^4 + 2*z^2 + 1")


def test_parse_float_backend():
    f = parse_poly("z - 0.5", FLOAT64)
    assert f.coeffs[0].w == -0.5
    assert isinstance(f.coeffs[0].w, float)


@pytest.mark.parametrize("bad", [
    "z +",
    "2(z-i)",       # implicit multiplication only after ')'
    "z^i",
    "(z-i",
    "z/j",          # division needs a numeric right-hand side
    "w + 1",
])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


def test_quaternion_rejects_polynomial():
    with pytest.raises(ParseError):
        parse_quaternion("z + 1")


@given(quat_st)
def test_quaternion_round_trip(a):
    assert parse_quaternion(quat_str(a)) == a


@given(poly_st)
def test_poly_round_trip(f):
    assert parse_poly(poly_str(f)) == f


def test_printing_style():
    assert quat_str(q(0)) == "0"
    assert quat_str(-I) == "-i"
    assert quat_str(q(1, "-12/13", 0, "4/13")) == "1 - 12/13*i + 4/13*k"
    assert poly_str(from_roots([I])) == "z + (-i)"
    assert poly_str(QPolynomial(())) == "0"


def test_json_encodings():
    assert scalar_json(rational(3, 4)) == "3/4"
    assert scalar_json(0.25) == 0.25
    assert poly_json(rho(I)) == {"coeffs": ["-i", "1"]}
