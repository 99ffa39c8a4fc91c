import sys
from typing import Callable, Dict, Type

from src.schemas.general import ErrorPayload


class Fgsp6Exception(Exception):
    """Base class for all fgsp6 exceptions."""

    def __init__(self, message: str = "An error occurred", error_code: str = "error"):
        self.message = message
        self.error_code = error_code
        super().__init__(self.message)


class UsageError(Fgsp6Exception):
    """Operands or arguments do not fit together (mismatched rings, wrong arity)."""
    def __init__(self, message: str = "Invalid usage", error_code: str = "usage_error"):
        super().__init__(message=message, error_code=error_code)


class InvalidInputError(Fgsp6Exception):
    """Input text or data violates the expected format or a ring axiom."""
    def __init__(self, message: str = "Invalid input", error_code: str = "invalid_input"):
        super().__init__(message=message, error_code=error_code)


class DomainError(Fgsp6Exception):
    """Input lies outside the mathematical domain of the operation."""
    def __init__(self, message: str = "Input outside the domain", error_code: str = "domain_error"):
        super().__init__(message=message, error_code=error_code)


class PreconditionError(Fgsp6Exception):
    """A stated precondition (usually a rank condition) does not hold."""
    def __init__(self, message: str = "Precondition failed", error_code: str = "precondition_failed"):
        super().__init__(message=message, error_code=error_code)


class NotInImageError(Fgsp6Exception):
    """A wedge-cube vector is not in the image of W."""
    def __init__(self, message: str = "Vector is not in the image of W", error_code: str = "not_in_image"):
        super().__init__(message=message, error_code=error_code)


class DegeneratePointError(Fgsp6Exception):
    """The factor of automorphy vanishes at the requested point."""
    def __init__(self, message: str = "Factor of automorphy vanishes", error_code: str = "degenerate_point"):
        super().__init__(message=message, error_code=error_code)


class PoleError(Fgsp6Exception):
    """A local factor was evaluated at (or within tolerance of) a pole."""
    def __init__(self, message: str = "Evaluation point is a pole", error_code: str = "pole"):
        super().__init__(message=message, error_code=error_code)


class MissingCoefficientClass(Fgsp6Exception):
    """The coefficient table has no entry for a required form class."""
    def __init__(self, message: str = "Coefficient class missing from table", error_code: str = "missing_coefficient_class"):
        super().__init__(message=message, error_code=error_code)


class InternalConsistencyError(Fgsp6Exception):
    """An identity that holds by construction failed; signals a bug."""
    def __init__(self, message: str = "Internal consistency check failed", error_code: str = "internal_error"):
        super().__init__(message=message, error_code=error_code)


ExceptionHandler = Callable[[Fgsp6Exception, bool], int]


def create_exception_handler(
    exit_code: int,
    initial_detail: dict = None
) -> ExceptionHandler:

    initial_detail = initial_detail or {}

    def exception_handler(exc: Fgsp6Exception, as_json: bool = False) -> int:
        content = ErrorPayload(
            message=exc.message or initial_detail.get("message", "An unexpected error occurred"),
            error_code=exc.error_code or initial_detail.get("error_code", "unknown_error"),
            resolution=initial_detail.get("resolution", "Check the input and try again"),
        )
        if as_json:
            print(content.model_dump_json(), file=sys.stderr)
        else:
            print(f"error [{content.error_code}]: {content.message}", file=sys.stderr)
            print(f"  resolution: {content.resolution}", file=sys.stderr)
        return exit_code

    return exception_handler


class ErrorRegistry:
    """Maps exception classes to handlers; lookup follows the MRO."""

    def __init__(self):
        self._handlers: Dict[Type[Fgsp6Exception], ExceptionHandler] = {}

    def add_exception_handler(self, exc_class: Type[Fgsp6Exception], handler: ExceptionHandler):
        self._handlers[exc_class] = handler

    def knows(self, exc: BaseException) -> bool:
        return isinstance(exc, Fgsp6Exception)

    def handle(self, exc: Fgsp6Exception, as_json: bool = False) -> int:
        for klass in type(exc).__mro__:
            if klass in self._handlers:
                return self._handlers[klass](exc, as_json)
        return create_exception_handler(1)(exc, as_json)


def register_all_errors(registry: ErrorRegistry):
    """Registers all exception handlers on the CLI error registry."""
    registry.add_exception_handler(
        UsageError,
        create_exception_handler(
            exit_code=2,
            initial_detail={
                "message": "Invalid usage",
                "resolution": "Run with --help for the expected arguments",
                "error_code": "usage_error",
            },
        ),
    )

    registry.add_exception_handler(
        InvalidInputError,
        create_exception_handler(
            exit_code=2,
            initial_detail={
                "message": "Invalid input",
                "resolution": "Forms are six integers 'a b c d e f'; rationals are 'p/q' or 'p'",
                "error_code": "invalid_input",
            },
        ),
    )

    registry.add_exception_handler(
        DomainError,
        create_exception_handler(
            exit_code=2,
            initial_detail={
                "message": "Input outside the domain",
                "resolution": "Use a positive-definite form, an invertible matrix or a non-singular point",
                "error_code": "domain_error",
            },
        ),
    )

    registry.add_exception_handler(
        PreconditionError,
        create_exception_handler(
            exit_code=2,
            initial_detail={
                "message": "Precondition failed",
                "resolution": "Check the rank of the input element",
                "error_code": "precondition_failed",
            },
        ),
    )

    registry.add_exception_handler(
        NotInImageError,
        create_exception_handler(
            exit_code=2,
            initial_detail={
                "message": "Vector is not in the image of W",
                "error_code": "not_in_image",
            },
        ),
    )

    registry.add_exception_handler(
        DegeneratePointError,
        create_exception_handler(
            exit_code=2,
            initial_detail={
                "message": "Factor of automorphy vanishes",
                "resolution": "Use a group element with positive similitude",
                "error_code": "degenerate_point",
            },
        ),
    )

    registry.add_exception_handler(
        PoleError,
        create_exception_handler(
            exit_code=2,
            initial_detail={
                "message": "Evaluation point is a pole",
                "resolution": "Move s off the pole",
                "error_code": "pole",
            },
        ),
    )

    registry.add_exception_handler(
        MissingCoefficientClass,
        create_exception_handler(
            exit_code=1,
            initial_detail={
                "message": "Coefficient class missing from table",
                "resolution": "Add a row for the reduced form to the coefficient file",
                "error_code": "missing_coefficient_class",
            },
        ),
    )

    registry.add_exception_handler(
        InternalConsistencyError,
        create_exception_handler(
            exit_code=1,
            initial_detail={
                "message": "Internal consistency check failed",
                "resolution": "Please report this as a bug",
                "error_code": "internal_error",
            },
        ),
    )
