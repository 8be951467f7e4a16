"""Arcs between positive integers: n -> u when some multiple of n maps to u
under a digit sum, happy function, or divisor / prime-factor count."""

__version__ = "0.1.0"
