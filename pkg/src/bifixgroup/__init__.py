"""Bifix codes, recurrent sets and the groups attached to them."""
__version__ = "0.1.0"
