"""The full cipher: key derivation plus the three-layer transform.

Encryption order: split into quadrants -> XOR-cascaded X-Cross
permutation -> per-quadrant bit transference -> merge -> dynamic
substitution.  Decryption runs the exact inverses in reverse.  Both
directions are deterministic functions of (image, key material).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, ParameterError
from .ibt import ibt_stage, ibt_unstage
from .key_schedule import (
    KeyMaterial,
    build_extraction_arrays,
    build_extraction_keys,
    build_operation_matrix,
    build_sboxes,
)
from .permutation import (
    merge_quadrants,
    permute_image,
    split_quadrants,
    unpermute_image,
)
from .substitution import SubstitutionSuite, substitution_stage, unsubstitute_stage

#: Stages the ablation hook can disable (diagnostics/testing only).
STAGES = ("permutation", "ibt", "substitution")


@dataclass(frozen=True)
class CipherContext:
    """Everything derived from one KeyMaterial for one image geometry."""

    keys: tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]
    opmatrix: np.ndarray
    suite: SubstitutionSuite


def derive_context(key: KeyMaterial, m: int, n: int) -> CipherContext:
    """Deterministically assemble all key artifacts for an m x n image."""
    if not isinstance(key, KeyMaterial):
        raise ParameterError("key must be KeyMaterial")
    rea1, rea2 = build_extraction_arrays(key, m, n)
    return CipherContext(
        keys=build_extraction_keys(rea1, rea2),
        opmatrix=build_operation_matrix(key, m, n),
        suite=SubstitutionSuite(sboxes=build_sboxes(key)),
    )


def _checked_image(img: np.ndarray) -> np.ndarray:
    img = np.asarray(img)
    if img.dtype != np.uint8:
        raise ParameterError(f"images must be uint8, got dtype {img.dtype}")
    if img.ndim != 2:
        raise DimensionError(f"images must be 2-D, got shape {img.shape}")
    return img


def _checked_skip(skip_stage: str | None) -> str | None:
    if skip_stage is not None and skip_stage not in STAGES:
        raise ParameterError(f"skip_stage must be one of {STAGES} or None, got {skip_stage!r}")
    return skip_stage


def encrypt_with_context(img: np.ndarray, ctx: CipherContext, *,
                         skip_stage: str | None = None) -> np.ndarray:
    """Encrypt with pre-derived key artifacts.

    ``skip_stage`` disables one named layer; it exists so tests can show
    each layer pulls its weight, and is not part of normal operation.
    """
    img = _checked_image(img)
    skip = _checked_skip(skip_stage)
    if ctx.opmatrix.shape != img.shape:
        raise DimensionError(
            f"context is sized for {ctx.opmatrix.shape}, image is {img.shape}"
        )
    q = split_quadrants(img)
    if skip != "permutation":
        q = permute_image(q)
    if skip != "ibt":
        q = ibt_stage(q, ctx.keys)
    out = merge_quadrants(q)
    if skip != "substitution":
        out = substitution_stage(out, ctx.opmatrix, ctx.suite)
    return out


def decrypt_with_context(img: np.ndarray, ctx: CipherContext, *,
                         skip_stage: str | None = None) -> np.ndarray:
    """Exact inverse of :func:`encrypt_with_context` (same ``skip_stage``)."""
    img = _checked_image(img)
    skip = _checked_skip(skip_stage)
    if ctx.opmatrix.shape != img.shape:
        raise DimensionError(
            f"context is sized for {ctx.opmatrix.shape}, image is {img.shape}"
        )
    if skip != "substitution":
        img = unsubstitute_stage(img, ctx.opmatrix, ctx.suite)
    q = split_quadrants(img)
    if skip != "ibt":
        q = ibt_unstage(q, ctx.keys)
    if skip != "permutation":
        q = unpermute_image(q)
    return merge_quadrants(q)


def encrypt(img: np.ndarray, key: KeyMaterial, *, skip_stage: str | None = None) -> np.ndarray:
    """Encrypt a uint8 grayscale image (dimensions divisible by 4)."""
    img = _checked_image(img)
    ctx = derive_context(key, *img.shape)
    return encrypt_with_context(img, ctx, skip_stage=skip_stage)


def decrypt(img: np.ndarray, key: KeyMaterial, *, skip_stage: str | None = None) -> np.ndarray:
    """Decrypt a ciphertext produced by :func:`encrypt` with the same key."""
    img = _checked_image(img)
    ctx = derive_context(key, *img.shape)
    return decrypt_with_context(img, ctx, skip_stage=skip_stage)
