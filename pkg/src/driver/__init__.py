"""Optimization driver: run configuration, statistics and the main loop."""
