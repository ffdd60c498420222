"""Python access to the heckesum library.

Complex arguments accept Python ``complex``; library input errors raise
``ValueError`` (as ``DomainError``), numerical failures ``RuntimeError``.
"""

from ._heckesum import *  # noqa: F401,F403
from ._heckesum import DomainError, Error

__all__ = [name for name in dir() if not name.startswith("_")]
