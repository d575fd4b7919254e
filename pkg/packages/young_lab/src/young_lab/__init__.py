"""
young_lab

Numerical library and CLI for the sharp Young convolution inequality
and its reverse: exponent algebra, sharp constants, grid functions,
convolution, monotone transport, the rotated bilinear form, and the
Gaussian extremizers.
"""

__version__ = "0.1.0"
