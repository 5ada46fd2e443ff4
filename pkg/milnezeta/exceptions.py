class MilneZetaError(Exception):
    """Base class for every error raised by milnezeta."""


class DomainError(MilneZetaError, ValueError):
    """An argument lies outside the domain of the operation."""


class PoleError(DomainError):
    """Argument sits on a pole of the gamma function (a non-positive integer)."""


class GammaOverflowError(MilneZetaError, OverflowError):
    """Imaginary part beyond the supported range of the gamma-family functions."""


class ToleranceError(MilneZetaError, RuntimeError):
    """The requested accuracy cannot be achieved."""


class MismatchedAbscissaError(MilneZetaError, ValueError):
    """Two samples that must share an abscissa (or time) do not."""


class DegenerateAlphaError(MilneZetaError, ArithmeticError):
    """The superposition constant alpha vanishes, so the Milne closed form is singular."""

    def __init__(self, eps, alpha):
        super().__init__(f"degenerate alpha={alpha:.3e} at eps={eps!r}")
        self.eps = eps
        self.alpha = alpha


class AmplitudeCollapseError(MilneZetaError, ArithmeticError):
    """The Pinney amplitude dropped below its floor."""

    def __init__(self, y, rho):
        super().__init__(f"Pinney amplitude collapsed to {rho:.3e} at y={y:.6g}")
        self.y = y
        self.rho = rho


class ZeroTableError(MilneZetaError, ValueError):
    """Problem with a table of zeta zero ordinates."""


class ZeroTableParseError(ZeroTableError):
    def __init__(self, line_number, text):
        super().__init__(f"line {line_number}: cannot parse {text!r} as an ordinate")
        self.line_number = line_number
        self.text = text


class MonotonicityError(ZeroTableError):
    def __init__(self, line_number, previous, current):
        super().__init__(
            f"line {line_number}: ordinate {current!r} does not exceed previous {previous!r}"
        )
        self.line_number = line_number


class EmptyTableError(ZeroTableError):
    """Operation needs at least one ordinate."""


class ScanRangeError(MilneZetaError, ValueError):
    """Zero scan requested outside the supported window."""
