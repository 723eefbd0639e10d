"""
Verification package: report models and the acceptance suite.
"""

from .report import Check, Report
from .suite import SUITES, run_suite

__all__ = ["Check", "Report", "SUITES", "run_suite"]
