"""Exact computations around classes of classifying stacks of finite groups."""

__version__ = "0.1.0"
