"""Exception hierarchy shared across the package.

CLI exit codes: InputError family maps to 2, CapExceededError to 3.
"""

from __future__ import annotations


class KnotgenusError(Exception):
    """Base class for all package errors."""


class InputError(KnotgenusError):
    """Invalid or inconsistent input: bad syntax, failed validation, bad arguments."""


class ExprSyntaxError(InputError):
    """Knot expression could not be parsed; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnsupportedTorusKnotError(InputError):
    """Torus knot outside the realizable family (only T(2, odd) has a bundled matrix)."""


class SingularOmegaError(InputError):
    """Signature requested at a root of the Alexander polynomial (a jump point).

    ``denominator`` is the order n of the root of unity; ``site_label`` is set
    when the failure was triggered while evaluating an infection site.
    """

    def __init__(self, denominator: int, site_label: int | None = None):
        where = f" at site {site_label}" if site_label is not None else ""
        super().__init__(
            f"signature jump point: the cyclotomic polynomial of order "
            f"{denominator} divides the Alexander polynomial{where}"
        )
        self.denominator = denominator
        self.site_label = site_label


class CapExceededError(KnotgenusError):
    """An enumeration would exceed the configured cap."""

    def __init__(self, needed: int, cap: int, what: str = "elements"):
        super().__init__(f"enumeration of {needed} {what} exceeds cap {cap}")
        self.needed = needed
        self.cap = cap
