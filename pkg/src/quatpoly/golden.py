"""Built-in worked examples with frozen expected values.

Each case runs on the exact backend and compares bit-exactly; the CLI
`golden` subcommand prints one line per case.
"""

from __future__ import annotations

from dataclasses import dataclass

from .divisors import left_divisor_to_right, spherical_divisors, spherical_shift
from .lcm import factor_from_chain, lrcm_distinct_classes
from .parsing import parse_poly, parse_quaternion, poly_str, quat_str
from .polynomials import companion_real, from_roots
from .quaternions import class_of
from .roots import find_all_roots
from .scalars import EXACT

DEGREE2 = "z^2 - z*(j + 2k) + 2i"
DEGREE7 = ("z^7 - (1+i+j+k)*z^6 + (2-i+2j)*z^5 - (3+i+2j+2k)*z^4"
           " + (1-2i+4j)*z^3 - (3-i+j+k)*z^2 + (2j-i)*z + i - 1")


@dataclass(frozen=True)
class GoldenResult:
    name: str
    ok: bool
    got: str
    expected: str


def _case(name, got, expected) -> GoldenResult:
    return GoldenResult(name, got == expected, str(got), str(expected))


def run_golden() -> list[GoldenResult]:
    ctx = EXACT
    out = []
    f2 = parse_poly(DEGREE2, ctx)
    f7 = parse_poly(DEGREE7, ctx)
    i = parse_quaternion("i", ctx)

    out.append(_case("companion(quadratic) = (z^2+1)(z^2+4)",
                     poly_str(companion_real(f2, ctx)),
                     poly_str(parse_poly("(z^2+1)*(z^2+4)", ctx))))
    out.append(_case("left evaluation of the quadratic at i",
                     quat_str(f2.eval_left(i)),
                     quat_str(parse_quaternion("-1 + 2i + 2j - k", ctx))))

    report = find_all_roots(f2, ctx)
    got_roots = [(quat_str(c.left_root), quat_str(c.right_root)) for c in report.classes]
    expected_roots = [
        (quat_str(parse_quaternion("j", ctx)), quat_str(parse_quaternion("(4k - 3j)/5", ctx))),
        (quat_str(parse_quaternion("(8j + 6k)/5", ctx)), quat_str(parse_quaternion("2k", ctx))),
    ]
    out.append(_case("quadratic root pairs in [i] and [2i]", got_roots, expected_roots))

    out.append(_case("companion(degree 7) = (z^2+1)^6 (z^2-2z+2)",
                     poly_str(companion_real(f7, ctx)),
                     poly_str(parse_poly("(z^2+1)^6*(z^2 - 2*z + 2)", ctx))))
    out.append(_case("second derivative of the degree-7 example at i",
                     quat_str(f7.derivative(2).eval_left(i)),
                     quat_str(parse_quaternion("-8 - 8i - 8j - 24k", ctx))))

    v = class_of(i, ctx)
    out.append(_case("one spherical backward shift of the degree-7 example",
                     poly_str(spherical_shift(f7, v)),
                     poly_str(parse_poly(
                         "z^5 - (1+i+j+k)*z^4 + (1-i+2j)*z^3 - (2+j+k)*z^2"
                         " + (2j-i)*z + i - 1", ctx))))
    out.append(_case("two spherical backward shifts of the degree-7 example",
                     poly_str(spherical_shift(spherical_shift(f7, v), v)),
                     poly_str(parse_poly(
                         "z^3 - (1+i+j+k)*z^2 - (i-2j)*z + i - 1", ctx))))

    pair = spherical_divisors(f7, v, ctx)
    out.append(_case("degree-7 divisor data at [i]",
                     (pair.kappa,
                      [quat_str(a) for a in pair.left_chain],
                      poly_str(pair.left_cofactor),
                      [quat_str(a) for a in pair.right_chain],
                      poly_str(pair.right_cofactor)),
                     (2,
                      ["k", "j"],
                      poly_str(parse_poly("z - 1 - i", ctx)),
                      [quat_str(parse_quaternion("(2i + j - 2k)/3", ctx)),
                       quat_str(parse_quaternion("(-2i + 26j + 29k)/39", ctx))],
                      poly_str(parse_poly("z - 1 - (5i + 12k)/13", ctx)))))
    out.append(_case("divisor pair multiplies back to the degree-7 example",
                     (poly_str(pair.reconstruct_left(ctx)), poly_str(pair.reconstruct_right(ctx))),
                     (poly_str(f7), poly_str(f7))))

    pt, rc = left_divisor_to_right(v, pair.kappa, pair.left_chain, pair.left_cofactor, ctx)
    out.append(_case("left-to-right conversion agrees with direct extraction",
                     ([quat_str(a) for a in rc], poly_str(pt)),
                     ([quat_str(a) for a in pair.right_chain], poly_str(pair.right_cofactor))))

    a1 = parse_quaternion("i", ctx)
    a2 = parse_quaternion("1 + j", ctx)
    got = lrcm_distinct_classes([factor_from_chain([a1, a1], ctx),
                                 factor_from_chain([a2, a2], ctx)], ctx)
    b1 = parse_quaternion("1 - (12i + 3j - 4k)/13", ctx)
    b2 = parse_quaternion("1 + (-1588i + 2645j + 980k)/3237", ctx)
    out.append(_case("lrcm of (z-i)^2 and (z-1-j)^2",
                     poly_str(got), poly_str(from_roots([a1, a1, b1, b2]))))
    return out
