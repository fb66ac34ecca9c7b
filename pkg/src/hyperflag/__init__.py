"""Hyperplane sections of the flag threefold P(T_P2) in P^7, computed exactly."""

__version__ = "0.1.0"
