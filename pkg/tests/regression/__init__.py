"""Regression tests package."""
