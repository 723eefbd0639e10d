"""
Validation of command-line parameters: partition texts, signed-permutation
texts, rational vectors, axis pairs and degrees.
Every check returns a result dict; the CLI turns invalid results into
usage errors (exit code 2).
"""

import re
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional

from config.settings import settings
from config.logging_config import get_logger
from groups.errors import ParityGroupError, PartitionError
from groups.partition import PartitionSpec
from groups.signed_perm import SignedPermutation

logger = get_logger(__name__)


def _result() -> Dict[str, Any]:
    return {"is_valid": False, "value": None, "errors": [], "warnings": []}


class InputValidator:
    """
    Validates the textual parameters accepted by the command-line front end.

    Grammars:
        partition   "k1,k2,..."            positive block sizes
        element     "π:[2,1];ε:[+1,-1]"    1-based images, signs +1/-1
        vector      "1/2,-3,0.25"          exact rationals
        pair        "j,k"                  1-based axes with j < k
    """

    def __init__(self):
        self.partition_pattern = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
        self.pair_pattern = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")
        logger.debug("InputValidator initialized")

    def validate_partition(self, text: Optional[str]) -> Dict[str, Any]:
        """
        Parse a partition text into consecutive ascending blocks.

        Args:
            text (str): comma-separated block sizes, e.g. "2,1"

        Returns:
            dict: validation result; ``value`` is a PartitionSpec when valid
        """
        result = _result()
        if text is None or not str(text).strip():
            result["errors"].append("Partition is required (e.g. '2,1')")
            return result
        text = str(text)
        if not self.partition_pattern.match(text):
            result["errors"].append(f"Partition {text!r} is not a comma-separated list of sizes")
            return result
        sizes = [int(part) for part in text.split(",")]
        bad = [s for s in sizes if s < 1]
        if bad:
            result["errors"].append(f"Block sizes must be positive, got {bad}")
            return result
        n = sum(sizes)
        if n > settings.max_degree:
            result["errors"].append(f"Partition degree {n} exceeds max degree {settings.max_degree}")
            return result
        try:
            result["value"] = PartitionSpec.from_sizes(sizes)
            result["is_valid"] = True
        except ParityGroupError as e:
            result["errors"].append(str(e))
        return result

    def validate_degree(self, n: Optional[int], limit: Optional[int] = None, name: str = "n") -> Dict[str, Any]:
        """Positive integer no larger than ``limit`` (default max_degree)."""
        result = _result()
        limit = settings.max_degree if limit is None else limit
        if n is None:
            result["errors"].append(f"--{name} is required")
        elif n < 1:
            result["errors"].append(f"--{name} must be positive, got {n}")
        elif n > limit:
            result["errors"].append(f"--{name} {n} exceeds the limit {limit}")
        else:
            result["value"] = n
            result["is_valid"] = True
        return result

    def validate_element(self, text: Optional[str]) -> Dict[str, Any]:
        """Parse "π:[..];ε:[..]" (pi/eps also accepted) into a SignedPermutation."""
        result = _result()
        if text is None or not str(text).strip():
            result["errors"].append("Element text is required (e.g. 'π:[2,1];ε:[+1,-1]')")
            return result
        try:
            result["value"] = SignedPermutation.from_text(str(text))
            result["is_valid"] = True
        except (ParityGroupError, ValueError) as e:
            result["errors"].append(f"Invalid element {text!r}: {e}")
        return result

    def validate_vector(
        self,
        text: Optional[str],
        length: Optional[int] = None,
        integral: bool = False,
    ) -> Dict[str, Any]:
        """Comma-separated exact rationals; optionally of fixed length or integral."""
        result = _result()
        if text is None or not str(text).strip():
            result["errors"].append("Vector is required (e.g. '1/2,0,3')")
            return result
        values: List[Fraction] = []
        for token in str(text).split(","):
            token = token.strip()
            try:
                values.append(Fraction(token))
            except (ValueError, ZeroDivisionError):
                result["errors"].append(f"{token!r} is not a rational number")
        if result["errors"]:
            return result
        if length is not None and len(values) != length:
            result["errors"].append(f"Vector has {len(values)} entries, expected {length}")
            return result
        if integral and any(v.denominator != 1 for v in values):
            result["errors"].append("Vector entries must be integers")
            return result
        result["value"] = tuple(values)
        result["is_valid"] = True
        return result

    def validate_pair(self, text: Optional[str], n: int) -> Dict[str, Any]:
        """Axis pair "j,k" with 1 <= j < k <= n."""
        result = _result()
        match = self.pair_pattern.match(str(text or ""))
        if not match:
            result["errors"].append(f"Axis pair {text!r} must look like 'j,k'")
            return result
        j, k = int(match.group(1)), int(match.group(2))
        if not (1 <= j < k <= n):
            result["errors"].append(f"Axis pair ({j},{k}) needs 1 <= j < k <= {n}")
            return result
        result["value"] = (j, k)
        result["is_valid"] = True
        return result

    def validate_choice(self, value: Optional[str], choices: Iterable[str], name: str) -> Dict[str, Any]:
        result = _result()
        choices = list(choices)
        if value is None or str(value).upper() not in [c.upper() for c in choices]:
            result["errors"].append(f"--{name} must be one of {', '.join(choices)}, got {value!r}")
            return result
        result["value"] = str(value).upper()
        result["is_valid"] = True
        return result


# Create module-level instance for easy import
input_validator = InputValidator()


# Utility functions
def validate_partition(text: Optional[str]) -> Dict[str, Any]:
    return input_validator.validate_partition(text)


def validate_element(text: Optional[str]) -> Dict[str, Any]:
    return input_validator.validate_element(text)


def validate_vector(text: Optional[str], length: Optional[int] = None, integral: bool = False) -> Dict[str, Any]:
    return input_validator.validate_vector(text, length, integral)


def parse_partition(text: str) -> PartitionSpec:
    """Strict variant of validate_partition; raises PartitionError."""
    result = input_validator.validate_partition(text)
    if not result["is_valid"]:
        raise PartitionError("; ".join(result["errors"]))
    return result["value"]
