"""
Exceptions raised by the equivariant motivic zeta engine.

Every error derives from EquimotError so the command-line front end can map
failures onto its exit codes in one place.
"""

from typing import Iterable, List


class EquimotError(ValueError):
    """Base class for every engine error"""


class InvalidGroupError(EquimotError):
    """A cyclic factor of a group presentation was not positive"""


class InvalidArgumentError(EquimotError):
    """Shape mismatch, index out of range, negative power or mixed groups"""


class NonInvertibleDenominatorError(EquimotError):
    """A witness denominator does not start with the ring unit"""


class UncoveredGeneratorError(EquimotError):
    """A realization table is missing generators the element references"""

    def __init__(self, missing: Iterable):
        self.missing: List = sorted(missing, key=lambda sym: sym.sort_key())
        names = ", ".join(str(sym) for sym in self.missing)
        super().__init__(f"generator table does not cover: {names}")


class UnsupportedScenarioError(EquimotError):
    """The requested realization scenario is outside what is built in"""


class EnumerationTooLargeError(EquimotError):
    """A brute-force oracle would enumerate more points than allowed"""


class InconsistentCountsError(EquimotError):
    """Point counts produced a non-integral symmetric-power count"""


class SingularCurveError(EquimotError):
    """The Weierstrass discriminant vanishes"""
