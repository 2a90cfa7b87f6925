"""Exact verification toolkit for Fuchsian solutions of the sigma form of
Painleve VI, built around the diagonal Ising correlations C(N,N)."""

__version__ = "0.1.0"
