"""Exact Green-ring computations for three 16-dimensional pointed Hopf algebras."""
from .green import GreenElement, element, product_bruteforce, product_closed
from .labels import Label, format_label, parse_label

__all__ = ["GreenElement", "Label", "element", "format_label", "parse_label",
           "product_bruteforce", "product_closed"]
