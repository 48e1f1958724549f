"""Explicit Wozencraft ensemble codes from Bose-Chowla Sidon sets."""

__version__ = "0.1.0"
