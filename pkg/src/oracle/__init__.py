"""Exact solver for tiny instances."""
from src.oracle.exact import OracleLimitError, exact_wcol, exact_wcol_bruteforce

__all__ = ["OracleLimitError", "exact_wcol", "exact_wcol_bruteforce"]
