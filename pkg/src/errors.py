"""Exception types raised by the duality checker.

All of them derive from :class:`ValueError` so callers can keep catching the
broad builtin when they do not care which input was rejected.
"""

from __future__ import annotations


class DualityError(ValueError):
    """Base class for every rejected input or simulator failure."""


# --- formula input ---------------------------------------------------------
class DnfSyntaxError(DualityError):
    """Malformed ``.dnf`` text (bad line, missing ``vars:`` header)."""


class IndexOutOfRangeError(DualityError):
    """A variable index lies outside ``1..n``."""


class NotAntichainError(DualityError):
    """One implicant contains another."""


class DomainError(DualityError):
    """An input integer lies outside ``[0, 2**n)``."""


class ArityMismatchError(DualityError):
    """Two functions that must share a variable count do not."""


class EvenArityError(DualityError):
    """The majority family is only defined for odd ``n``."""


class ArityTooLargeError(DualityError):
    """Arity exceeds the classical cap or the simulator's qubit budget."""


class ConstantFunctionError(DualityError):
    """Constant functions are refused by the quantum pipeline."""


# --- simulator -------------------------------------------------------------
class TooManyQubitsError(DualityError):
    """Requested register does not fit under ``MAX_QUBITS``."""


class QubitIndexError(DualityError):
    """Qubit index out of range or registers overlap."""


class DegenerateStateError(DualityError):
    """State norm collapsed or drifted away from one."""


class WidthTooSmallError(DualityError):
    """Counting register narrower than two qubits."""
