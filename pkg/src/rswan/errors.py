"""Exception types shared across the package."""


class RswanError(Exception):
    """Base class for all structured errors raised by this package."""


class ModulusMismatch(RswanError):
    """Two values from different prime fields were combined."""


class Unramified(RswanError):
    """The input has no pole along the divisor, so no wild ramification."""


class NotNormalized(RswanError):
    """Covering data violates the pole-order normalization hypotheses."""


class DegenerateCaseThree(RswanError):
    """dh == f*dg identically; the pole balance r = m+n gives no answer."""


class ThresholdViolated(RswanError):
    """r = m+n but the combined form's pole level is at or below the
    admissible rational threshold."""

    def __init__(self, k, bound):
        self.k = k
        self.bound = bound
        super().__init__(
            f"pole level k={k} does not exceed the threshold {bound}"
        )


class VerificationError(RswanError):
    """The blow-up engine disagrees with the closed-form result."""


class ParseError(RswanError):
    """Expression syntax error; carries the byte offset of the problem."""

    def __init__(self, message, offset):
        self.offset = offset
        super().__init__(f"{message} (at offset {offset})")
