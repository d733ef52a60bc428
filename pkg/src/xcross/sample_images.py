"""Deterministic test images.

`natural_test_image` synthesizes a cloud-like grayscale texture: Gaussian
white noise is low-pass filtered in the Fourier domain (correlation length
about 6 px) and then rank-transformed so every gray level occurs equally
often.  The construction pins down the two properties the cipher's
statistical gates are sensitive to:

* strong neighbor correlation (smoothness), like a photographic image;
* an exactly uniform marginal with negligible correlation at the
  half-image offset, so pixels XORed across quadrants behave like
  independent uniform bytes and the ciphertext histogram fluctuates at
  the chi-square(255) scale instead of inheriting plaintext bias.

The default seed is frozen; regenerating the image is always bit-exact.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionError

NATURAL_SEED = 0x5EED
_CORR_LENGTH = 6.0


def natural_test_image(size: int = 256, seed: int = NATURAL_SEED) -> np.ndarray:
    """Smooth uniform-marginal texture, ``size`` x ``size`` uint8."""
    if size < 16 or size % 16:
        raise DimensionError(
            f"size must be a multiple of 16 (for exact rank binning), got {size}"
        )
    rng = np.random.default_rng(seed)
    noise = rng.standard_normal((size, size))
    f = np.fft.fftfreq(size)
    gain = np.exp(
        -2.0 * (np.pi * _CORR_LENGTH) ** 2 * (f[:, None] ** 2 + f[None, :] ** 2)
    )
    field = np.fft.ifft2(np.fft.fft2(noise) * gain).real
    # rank transform: the k-th smallest field values get gray level k//bin
    order = np.argsort(field.reshape(-1), kind="stable")
    flat = np.empty(size * size, dtype=np.uint8)
    flat[order] = np.repeat(
        np.arange(256, dtype=np.uint8), (size * size) // 256
    )
    return flat.reshape(size, size)


def random_image(rng: np.random.Generator, shape: tuple[int, int] = (64, 64)) -> np.ndarray:
    """Uniform white-noise image; plumbing for round-trip sweeps."""
    return rng.integers(0, 256, size=shape, dtype=np.uint8)
