"""Representation theory over the Boolean and tropical semifields."""

__version__ = "0.1.0"
