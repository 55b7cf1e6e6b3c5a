"""
Super Catalan Verifier - Exceptions
Errors raised by the arithmetic kernels, the suites and the scan surface.
"""


class SupercatError(Exception):
    """Base class for every error raised by the verifier."""


class DenominatorDivisibleByP(SupercatError, ZeroDivisionError):
    """A rational value has no residue because p divides its denominator."""

    def __init__(self, value, prime: int):
        self.value = value
        self.prime = prime
        super().__init__(f"denominator of {value} is divisible by {prime}")


class NotInvertible(SupercatError, ValueError):
    """A residue shares a factor with its modulus."""


class ModulusMismatch(SupercatError, ValueError):
    """Arithmetic was attempted between residues with different moduli."""


class NotAnOddPrime(SupercatError, ValueError):
    """An OddPrime was requested for a number that is not an odd prime."""


class PrimeTooSmall(SupercatError, ValueError):
    """The congruence is only stated for larger primes."""

    def __init__(self, prime: int, minimum: int = 5):
        self.prime = prime
        self.minimum = minimum
        super().__init__(f"p = {prime} is below the required minimum p >= {minimum}")


class InexactDivision(SupercatError, ArithmeticError):
    """An integrality assertion failed (never expected to happen)."""


class InvalidScanConfig(SupercatError, ValueError):
    """The scan configuration violates its bounds."""


class ReportWriteError(SupercatError, OSError):
    """The report could not be written to its destination."""
