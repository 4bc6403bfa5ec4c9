"""Exact tools for line-bundle stability on Hirzebruch surfaces and relative stability on A_n quivers."""

__version__ = "0.1.0"
