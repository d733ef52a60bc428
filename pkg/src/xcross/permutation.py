"""X-Cross pixel permutation and the XOR-cascaded quadrant diffusion layer.

The X-Cross permutation reads a block in crossing diagonal strokes: row
pairs are consumed outermost-first, and inside a row pair the column pairs
alternate outermost / innermost-remaining.  Each column pair contributes
its four corner pixels in the order (top,right), (bottom,left), (top,left),
(bottom,right) — the two diagonals of the little rectangle, crossed.  The
emitted pixel sequence refills the block row-major.

At image level the four quadrants are chained: each quadrant is XORed with
the previous quadrant's *output* before being X-Cross permuted, so a
change anywhere propagates into every later quadrant while the whole
cascade stays exactly invertible.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, ParameterError


class QuadSplit(NamedTuple):
    """The four equal quadrants of an image, in reading order."""

    a: np.ndarray  # top-left
    b: np.ndarray  # top-right
    c: np.ndarray  # bottom-left
    d: np.ndarray  # bottom-right


def _check_block(blk: np.ndarray) -> np.ndarray:
    blk = np.asarray(blk)
    if blk.dtype != np.uint8:
        raise ParameterError(f"blocks must be uint8, got dtype {blk.dtype}")
    if blk.ndim != 2:
        raise DimensionError(f"blocks must be 2-D, got shape {blk.shape}")
    r, c = blk.shape
    if r < 2 or c < 2 or r % 2 or c % 2:
        raise DimensionError(f"block dimensions must be even and >= 2, got {r}x{c}")
    return blk


@lru_cache(maxsize=64)
def _emission_order(rows: int, cols: int) -> np.ndarray:
    """Flat source index of each emitted pixel, in emission order."""
    half_rows = rows // 2
    pairs = cols // 2
    # column-pair visit order: outermost, innermost-remaining, next-outermost, ...
    p_seq = np.empty(pairs, dtype=np.intp)
    p_seq[0::2] = np.arange((pairs + 1) // 2)
    p_seq[1::2] = pairs - 1 - np.arange(pairs // 2)
    left = p_seq
    right = cols - 1 - p_seq
    tops = np.arange(half_rows, dtype=np.intp)[:, None]
    bottoms = rows - 1 - tops
    order = np.empty((half_rows, pairs, 4), dtype=np.intp)
    order[:, :, 0] = tops * cols + right
    order[:, :, 1] = bottoms * cols + left
    order[:, :, 2] = tops * cols + left
    order[:, :, 3] = bottoms * cols + right
    flat = order.reshape(-1)
    flat.setflags(write=False)
    return flat


def xcross_permute(blk: np.ndarray) -> np.ndarray:
    """Apply the X-Cross position permutation to one block."""
    blk = _check_block(blk)
    order = _emission_order(*blk.shape)
    return blk.reshape(-1)[order].reshape(blk.shape)


def xcross_unpermute(blk: np.ndarray) -> np.ndarray:
    """Exact inverse of :func:`xcross_permute`."""
    blk = _check_block(blk)
    order = _emission_order(*blk.shape)
    out = np.empty(blk.size, dtype=np.uint8)
    out[order] = blk.reshape(-1)
    return out.reshape(blk.shape)


def split_quadrants(img: np.ndarray) -> QuadSplit:
    """Cut an image into its four quadrants (dimensions must be mod-4)."""
    img = np.asarray(img)
    if img.dtype != np.uint8:
        raise ParameterError(f"images must be uint8, got dtype {img.dtype}")
    if img.ndim != 2:
        raise DimensionError(f"images must be 2-D, got shape {img.shape}")
    m, n = img.shape
    if m < 4 or n < 4 or m % 4 or n % 4:
        raise DimensionError(
            f"image dimensions must be multiples of 4 (so quadrants are even), got {m}x{n}"
        )
    hm, hn = m // 2, n // 2
    return QuadSplit(
        a=img[:hm, :hn].copy(),
        b=img[:hm, hn:].copy(),
        c=img[hm:, :hn].copy(),
        d=img[hm:, hn:].copy(),
    )


def merge_quadrants(q: QuadSplit) -> np.ndarray:
    """Reassemble the four quadrants; exact inverse of :func:`split_quadrants`."""
    if not (q.a.shape == q.b.shape == q.c.shape == q.d.shape):
        raise DimensionError("quadrants must all share one shape")
    top = np.hstack([q.a, q.b])
    bottom = np.hstack([q.c, q.d])
    return np.vstack([top, bottom])


def permute_image(q: QuadSplit) -> QuadSplit:
    """XOR-cascade the quadrants through X-Cross: A', B', C', D'."""
    a1 = xcross_permute(q.a ^ q.c)
    b1 = xcross_permute(q.b ^ a1)
    c1 = xcross_permute(q.c ^ b1)
    d1 = xcross_permute(q.d ^ c1)
    return QuadSplit(a1, b1, c1, d1)


def unpermute_image(q: QuadSplit) -> QuadSplit:
    """Exact inverse of :func:`permute_image`."""
    d = xcross_unpermute(q.d) ^ q.c
    c = xcross_unpermute(q.c) ^ q.b
    b = xcross_unpermute(q.b) ^ q.a
    a = xcross_unpermute(q.a) ^ c
    return QuadSplit(a, b, c, d)
