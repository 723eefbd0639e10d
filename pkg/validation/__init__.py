"""
Validation package for the parity groups verifier.

Validates command-line parameters (partitions, elements, vectors, axis
pairs) and formats usage errors.
"""

from .input_validator import InputValidator, parse_partition
from .error_formatter import ValidationErrorFormatter

# Package metadata
__version__ = "1.0.0"
__author__ = "Parity Groups Development Team"

# Export all validators
__all__ = [
    "InputValidator",
    "parse_partition",
    "ValidationErrorFormatter",
]
