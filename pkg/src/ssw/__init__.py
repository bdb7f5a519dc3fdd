"""Support weight distributions, weight hierarchies and lifted-code weight
enumerators of Simplex and Solomon-Stiffler codes, with brute-force oracles."""

__version__ = "0.1.0"
