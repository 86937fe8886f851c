"""Quaternion polynomials: zeros, spherical divisors, least common multiples,
indecomposable decompositions and finite Blaschke products."""

from .scalars import Context, EXACT, FLOAT64, context, rational
from .quaternions import (
    ConjugacyClass,
    Quaternion,
    class_of,
    class_representative,
    quat,
    quat_inverse,
    quat_mul,
    validate_spherical_chain,
)
from .polynomials import (
    QPolynomial,
    companion_real,
    derivative,
    divide_left,
    divide_right,
    eval_left,
    eval_product_formula,
    eval_right,
    from_roots,
    mult_left,
    mult_right,
    mult_spherical,
    poly_mul,
    rho,
    sharp,
    shift_left,
    shift_right,
)
from .parsing import parse_poly, parse_quaternion, poly_str, quat_str

__all__ = [name for name in dir() if not name.startswith("_")]
