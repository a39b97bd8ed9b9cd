"""Solvable, nilpotent and commuting conjugacy class graphs of finite groups."""

__version__ = "0.1.0"
