"""exturan - exact generalized Turán computations for long cycles."""

__version__ = "0.1.0"

from .config import get_settings
from .exceptions import ConsistencyError, DomainError, ExturanError, ParseError, ScaleError
from .models import BoundParams, Claim, GraphClassSpec, VerifyReport

__all__ = [
    "get_settings",
    "ConsistencyError",
    "DomainError",
    "ExturanError",
    "ParseError",
    "ScaleError",
    "BoundParams",
    "Claim",
    "GraphClassSpec",
    "VerifyReport",
    "__version__",
]
