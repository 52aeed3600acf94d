"""Exact computations for Radford Hopf algebras, their duals and Drinfeld doubles,
Yetter-Drinfeld transport and Nichols algebras over the dual Radford algebra."""

__version__ = "0.1.0"
