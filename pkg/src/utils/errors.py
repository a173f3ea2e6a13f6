"""
Error hierarchy shared by the library and the command line front end
"""

from typing import Optional


class FqtError(Exception):
    """Base class for every error raised by the library.

    Each subclass carries a stable machine-readable ``code`` and the exit code
    the command line front end uses when the error escapes a subcommand.
    """

    code = "fqt_error"
    exit_code = 1

    def to_dict(self) -> dict:
        return {"code": self.code, "message": str(self)}


class DivisionByZero(FqtError, ZeroDivisionError):
    code = "division_by_zero"


class FieldMismatch(FqtError, ValueError):
    code = "field_mismatch"


class InvalidFieldSpec(FqtError, ValueError):
    code = "invalid_field_spec"
    exit_code = 2


class InfinityNotExpandable(FqtError, ValueError):
    code = "infinity_not_expandable"


class InfinityNotDecomposable(FqtError, ValueError):
    code = "infinity_not_decomposable"


class PrecisionExhausted(FqtError, ValueError):
    code = "precision_exhausted"


class DistinctnessViolated(FqtError, ValueError):
    code = "distinctness_violated"

    def __init__(self, i: int, j: int):
        self.pair = (i, j)
        super().__init__(f"points {i} and {j} of the triple coincide")


class MalformedCF(FqtError, ValueError):
    code = "malformed_cf"


class InvalidGenerator(FqtError, ValueError):
    code = "invalid_generator"


class ReductionDiverged(FqtError, RuntimeError):
    code = "reduction_diverged"


class VerificationFailed(FqtError, RuntimeError):
    code = "verification_failed"


class NotInDomain(FqtError, ValueError):
    code = "not_in_domain"


class InvalidStepCount(FqtError, ValueError):
    code = "invalid_step_count"


class AnchorOffGeodesic(FqtError, ValueError):
    code = "anchor_off_geodesic"


class InvalidVertex(FqtError, ValueError):
    code = "invalid_vertex"


class BallTooLarge(FqtError, ValueError):
    code = "ball_too_large"


class OutOfBall(FqtError, KeyError):
    code = "out_of_ball"

    def __str__(self) -> str:
        # KeyError would repr() the message
        return str(self.args[0]) if self.args else ""


class ParseError(FqtError, ValueError):
    code = "parse_error"
    exit_code = 2

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)


class ConfigError(FqtError, ValueError):
    code = "config_error"
    exit_code = 2
