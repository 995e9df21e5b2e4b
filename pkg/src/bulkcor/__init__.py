"""Exact computations of bulk correlators, class functions and torus
partition functions for modules over ribbon factorizable Hopf algebras."""

__version__ = "0.1.0"
