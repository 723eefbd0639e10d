"""
Command-line front end.
"""

from .main import main, run
from .output import emit

__all__ = ["emit", "main", "run"]
