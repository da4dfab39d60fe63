"""Exception hierarchy shared by the library and the CLI."""


class MZVError(Exception):
    """Base class for all errors raised by this package."""


class IndexSyntaxError(MZVError, ValueError):
    """Index text could not be parsed.  ``offset`` is the 0-based character position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class IndexDomainError(MZVError, ValueError):
    """An index entry, or an operation argument, is outside the allowed domain."""


class AdmissibilityError(IndexDomainError):
    """The index does not start with a part >= 2."""


class WordError(MZVError, ValueError):
    """A word lies outside the subalgebra an operation requires."""


class DivisibilityError(WordError):
    """A leading ``x`` could not be stripped from some word."""


class BadPrimeError(MZVError, ArithmeticError):
    """The prime divides a coefficient denominator."""

    def __init__(self, p: int, denominator: int):
        super().__init__(f"prime {p} divides coefficient denominator {denominator}")
        self.p = p
        self.denominator = denominator


class ConfigurationError(MZVError, ValueError):
    """A verification run was configured so that nothing can be checked."""
