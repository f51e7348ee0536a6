"""Exception classes shared across the package."""


class KspError(Exception):
    """Base class; the CLI turns these into machine-readable error objects."""

    code = "error"


class TruncationMismatch(KspError, ValueError):
    code = "truncation-mismatch"


class CompositionDomainError(KspError, ValueError):
    code = "composition-domain"


class NotInvertibleError(KspError, ValueError):
    code = "not-invertible"


class InversionDomainError(KspError, ValueError):
    code = "inversion-domain"


class PreconditionError(KspError, ValueError):
    code = "precondition"


class GuardExceeded(KspError, ValueError):
    code = "guard-exceeded"


class UnknownName(KspError, KeyError):
    code = "unknown-name"

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown name"


class IncomparableError(KspError, ValueError):
    code = "incomparable"


class AxiomFailure(KspError, ValueError):
    code = "axiom-failure"


class NotQuadratic(KspError, ValueError):
    code = "not-quadratic"


class ParseError(KspError, ValueError):
    code = "parse-error"

    def __init__(self, msg, pos):
        super().__init__("%s at position %d" % (msg, pos))
        self.pos = pos
