"""Exact enumeration of box-counting vertices and the matching models realizing them."""

__version__ = "0.1.0"
