"""
Exceptions raised by the algebra layer

Every error raised by this package derives from AlgebraError,
so callers can separate algebraic failures from programming errors.
"""

from __future__ import annotations

from typing import Any, Tuple


class AlgebraError(Exception):
    """
    AlgebraError - Base class all package errors inherit!
    """


class AxiomViolation(AlgebraError):
    """
    A structure failed one of its defining axioms.

    :param axiom: Name of the axiom that failed
    :type axiom: str
    :param witness: Elements witnessing the failure
    :type witness: Tuple[Any, ...]
    """

    def __init__(self, axiom: str, witness: Tuple[Any, ...] = ()) -> None:
        self.axiom: str = axiom
        self.witness: Tuple[Any, ...] = tuple(witness)
        super().__init__(f"axiom violated: {axiom} (witness: {self.witness})")


class SizeCap(AlgebraError):
    """
    A structure is larger than the configured cap for enumeration.
    """

    def __init__(self, what: str, size: int, cap: int) -> None:
        self.what: str = what
        self.size: int = size
        self.cap: int = cap
        super().__init__(f"{what} has size {size}, above the cap of {cap}")


class McsError(AlgebraError):
    """
    A subset failed to be a multiplicatively closed set.
    """


class ContainsZero(McsError):

    def __init__(self) -> None:
        super().__init__("multiplicatively closed sets must not contain 0")


class MissingOne(McsError):

    def __init__(self) -> None:
        super().__init__("multiplicatively closed sets must contain 1")


class NotClosed(McsError):

    def __init__(self, s: Any, t: Any) -> None:
        self.s = s
        self.t = t
        super().__init__(f"product of {s} and {t} leaves the set")


class DisjointnessFailure(AlgebraError):
    """
    The disjointness hypothesis of an S-definition does not hold.

    This is NOT the same as a false verdict:
    the definition simply does not apply to the input.
    """

    def __init__(self, which: str, element: Any) -> None:
        self.which: str = which
        self.element = element
        super().__init__(f"{which} meets S (common element {element})")


class PreconditionUnmet(AlgebraError):

    def __init__(self, reason: str) -> None:
        self.reason: str = reason
        super().__init__(reason)


class InvariantBroken(AlgebraError):
    """
    Two computations that must agree did not.
    """

    def __init__(self, name: str, detail: str = "") -> None:
        self.name: str = name
        self.detail: str = detail
        super().__init__(f"{name}: {detail}" if detail else name)


class UnknownStatement(AlgebraError):

    def __init__(self, statement_id: str) -> None:
        self.statement_id: str = statement_id
        super().__init__(f"unknown statement id: {statement_id!r}")
