"""HTTP session service wrapping the decision engine."""

from .app import ApiException, create_app
from .schemas import ApiError

__all__ = ["ApiError", "ApiException", "create_app"]
