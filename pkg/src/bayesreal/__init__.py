"""Bayes-theorem tests of realism for entangled spin and neutral meson pairs."""

__version__ = "0.1.0"
