"""Exceptions shared across the package."""


class InvariantViolation(RuntimeError):
    """An internal impossibility surfaced instead of being silently absorbed.

    Raised for zero curvature on supposedly valid input, or count
    divisibility failures in the class tally.  CLI maps this to exit 3.
    """
