"""pejantzen: category O combinatorics and Jantzen middles for pe(n)."""

__version__ = "0.1.0"
