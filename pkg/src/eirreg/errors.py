"""Exception types shared across the package."""

from __future__ import annotations


class SelfCheckError(RuntimeError):
    """A proven identity failed at runtime.

    Raised when a computation contradicts a fact that holds unconditionally
    (a denominator structure, an index containment, an integrality
    constraint).  It always signals an implementation bug, never bad input;
    bad input raises ValueError instead.
    """
