"""curvelab: combinatorics of separating curves on translatable surfaces.

A library and CLI for the translatable curve graph: full-fidelity curves on
the bi-infinite flute, symbolic separating-curve descriptors on general
stable avenue surfaces, flux and Hamming distance lower bounds, certified
lasso and detour path constructions, and a finite brute-force distance
oracle.
"""

__version__ = "0.1.0"
