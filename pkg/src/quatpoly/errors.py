"""Exception types shared across the package."""


class QuatPolyError(Exception):
    """Base class for domain errors raised by this package."""


class IrrationalRepresentative(QuatPolyError):
    """The canonical in-class point re + m*i needs an irrational m.

    Raised only on the exact backend; callers that know an in-class point
    should pass it as a probe instead.
    """


class NonRealResult(QuatPolyError):
    """A polynomial expected to be real has imaginary residue above tolerance."""


class NoConvergence(QuatPolyError):
    """The simultaneous root iteration hit its iteration cap."""


class NeedsFloatBackend(QuatPolyError):
    """The exact backend cannot represent the requested computation.

    Typical cause: the real companion polynomial does not split into
    rational linear/quadratic factors.
    """


class DegenerateEvaluations(QuatPolyError):
    """An in-class root formula hit a zero inverse; the class was misclassified."""


class ChainBroken(QuatPolyError):
    """Chain extraction could not produce the next in-class root."""


class PreconditionViolated(QuatPolyError):
    """A documented precondition does not hold for the given arguments."""


class NotCoprime(QuatPolyError):
    """The coprimality assumption of a same-class lcm formula fails."""


class ClassMismatch(QuatPolyError):
    """Inputs expected to share one conjugacy class span several."""


class ClassCollision(QuatPolyError):
    """Inputs expected to lie in pairwise distinct conjugacy classes collide."""


class SingularUpsilon(QuatPolyError):
    """The closed-form kernel evaluation hit a non-invertible denominator."""


class SingularPivot(QuatPolyError):
    """A Blaschke completion step produced a non-invertible pivot."""
