"""Input validation utilities and error types for tower computations."""

from typing import Iterable


class ResourceBoundError(ValueError):
    """An exhaustive enumeration was asked to go past its hard bound."""


class InexactDivisionError(ArithmeticError):
    """A closed form's exact division left a remainder."""


class UnknownIdentityError(KeyError):
    """No identity record is registered under the requested id."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown identity"


def validate_positive(value: int, name: str) -> int:
    """Validate that an integer parameter is at least 1.

    Args:
        value: Integer to validate
        name: Parameter name for error message

    Returns:
        The validated value

    Raises:
        ValueError: If value is not a positive integer
    """
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {type(value).__name__}")
    if value <= 0:
        raise ValueError(f"{name} must be positive, got {value}")
    return value


def validate_nonnegative(value: int, name: str) -> int:
    """Validate that an integer parameter is at least 0."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {type(value).__name__}")
    if value < 0:
        raise ValueError(f"{name} must be nonnegative, got {value}")
    return value


def validate_index(n: int, k: int) -> tuple[int, int]:
    """Validate a triangle cell 1 <= k <= n.

    Raises:
        ValueError: If (n, k) lies outside the lower triangle
    """
    validate_positive(n, "n")
    validate_positive(k, "k")
    if k > n:
        raise ValueError(f"k must not exceed n, got n={n}, k={k}")
    return n, k


def validate_level(m: int, supported: Iterable[int]) -> int:
    """Validate a tower level against the supported levels.

    Raises:
        ValueError: If m is not supported
    """
    levels = list(supported)
    if m not in levels:
        available = ", ".join(str(level) for level in levels)
        raise ValueError(f"Unsupported level: {m}. Available: {available}")
    return m


def validate_choice(value: str, supported: list[str], name: str) -> str:
    """Validate a named option against its allowed values.

    Args:
        value: Option value to validate
        supported: Allowed values
        name: Option name for error message

    Returns:
        Lowercase option value

    Raises:
        ValueError: If value is not allowed
    """
    value_lower = value.lower()
    if value_lower not in supported:
        raise ValueError(f"Unsupported {name}: {value}. Available: {', '.join(supported)}")
    return value_lower


def ensure_within_bound(value: int, bound: int, what: str) -> int:
    """Reject enumerations past a hard resource bound.

    Raises:
        ResourceBoundError: If value exceeds bound
    """
    if value > bound:
        raise ResourceBoundError(f"{what} {value} exceeds the exhaustive bound {bound}")
    return value
