"""Exception hierarchy shared by every computational module."""


class StieltjesError(Exception):
    """Base class for all library errors."""


class DomainError(StieltjesError, ValueError):
    """Argument lies outside the domain where the formula holds."""


class RangeError(StieltjesError, IndexError):
    """Index beyond a table limit or an unsupported order."""


class PoleError(StieltjesError, ZeroDivisionError):
    """Evaluation at a pole or a genuinely singular configuration."""


class BranchCutError(StieltjesError, ArithmeticError):
    """Complex assembly left an imaginary residue larger than allowed."""
