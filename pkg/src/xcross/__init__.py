"""Deterministic grayscale image encryption built on chaotic key streams.

The cipher runs three invertible layers over an M×N 8-bit image (M, N
divisible by 4): an XOR-cascaded X-Cross pixel permutation over the four
quadrants, a key-driven bit-level permutation of each quadrant, and a
per-pixel dynamic S-box substitution.  All key material derives from two
chaotic maps, so a key is just a handful of real seeds and control
parameters.  An analysis module computes the usual statistical security
metrics (entropy, adjacent-pixel correlation, GLCM texture features,
histogram chi-square).
"""

__version__ = "0.1.0"
