"""
Formatting of parameter validation failures for the command line.
Turns validator result dicts into short usage messages with an example of
the expected grammar.
"""

from typing import Any, Dict, List, Optional

from config.logging_config import get_logger

logger = get_logger(__name__)


class ValidationErrorFormatter:
    """
    Formats validation errors into usage messages for standard error.
    """

    def __init__(self):
        self.examples = {
            "partition": "--partition 2,1",
            "element": "--element 'π:[2,1];ε:[+1,-1]'",
            "vector": "--vector 1/2,0,3",
            "other": "--other 5/2,0,3",
            "pair": "--pair 1,2",
            "n": "--n 3",
            "kind": "--kind CP",
        }
        self.hints = {
            "partition": "Block sizes are positive integers; blocks are consecutive, so 2,1 means {1,2};{3}.",
            "element": "Images are 1-based and every sign is +1 or -1.",
            "vector": "Entries are exact rationals p/q, integers or finite decimals.",
            "other": "Entries are exact rationals p/q, integers or finite decimals.",
            "pair": "Axes are 1-based with j < k.",
        }

    def format_field_error(self, field: str, result: Dict[str, Any]) -> str:
        """
        Format the errors of one validated parameter.

        Args:
            field (str): parameter name without dashes
            result (dict): validator result

        Returns:
            str: message lines for standard error
        """
        errors = result.get("errors") or [f"invalid value for --{field}"]
        lines = [f"error: --{field}: {message}" for message in errors]
        hint = self.hints.get(field)
        if hint:
            lines.append(f"  hint: {hint}")
        example = self.examples.get(field)
        if example:
            lines.append(f"  example: {example}")
        return "\n".join(lines)

    def format_validation_summary(self, validation_results: Dict[str, Dict[str, Any]]) -> str:
        """All failing parameters of one command, in argument order."""
        failed = {field: r for field, r in validation_results.items() if not r["is_valid"]}
        if not failed:
            return ""
        parts = [self.format_field_error(field, r) for field, r in failed.items()]
        warnings = [w for r in validation_results.values() for w in r.get("warnings", [])]
        parts.extend(f"warning: {w}" for w in warnings)
        logger.debug("usage errors on %s", ", ".join(failed))
        return "\n".join(parts)

    def get_example(self, field: str) -> Optional[str]:
        return self.examples.get(field)


# Create global formatter instance
error_formatter = ValidationErrorFormatter()


def format_validation_summary(validation_results: Dict[str, Dict[str, Any]]) -> str:
    return error_formatter.format_validation_summary(validation_results)


def format_field_error(field: str, error_details: Dict[str, Any]) -> str:
    return error_formatter.format_field_error(field, error_details)


def format_usage_errors(messages: List[str]) -> str:
    """Plain messages (e.g. from exceptions) in the same layout."""
    return "\n".join(f"error: {m}" for m in messages)


__all__ = [
    "ValidationErrorFormatter", "error_formatter", "format_validation_summary",
    "format_field_error", "format_usage_errors",
]
