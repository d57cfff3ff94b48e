"""Base error type shared by every qmc-toolkit subpackage."""

from typing import Optional


class QmcToolkitError(Exception):
    """Error with an optional stable code identifying its category."""

    def __init__(self, message: str, code: Optional[str] = None):
        self.code = code
        super().__init__(message)
