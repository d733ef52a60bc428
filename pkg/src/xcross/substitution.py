"""Dynamic byte substitution driven by the operation-selection matrix.

Each pixel's code picks one of three S-boxes *and* a post-operation on the
looked-up byte: code 0 uses the box plainly, code 1 complements the
result, code 2 rotates it left by one bit.  Every branch is a byte
bijection, so the stage inverts exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionError, OpCodeError

_CODES = (0, 1, 2)


def _rotl1(v: np.ndarray) -> np.ndarray:
    v = v.astype(np.uint16)
    return (((v << 1) | (v >> 7)) & 0xFF).astype(np.uint8)


def _invert_table(table: np.ndarray) -> np.ndarray:
    inv = np.empty(256, dtype=np.uint8)
    inv[table] = np.arange(256, dtype=np.uint8)
    return inv


@dataclass(frozen=True)
class SubstitutionSuite:
    """Three S-boxes plus the derived lookup tables for both directions.

    ``forward[k]`` is the complete pixel map for op code k (S-box then
    post-operation fused into one table); ``backward[k]`` is its inverse.
    """

    sboxes: tuple[np.ndarray, np.ndarray, np.ndarray]
    forward: np.ndarray = field(init=False, repr=False)
    backward: np.ndarray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.sboxes) != 3:
            raise OpCodeError("a substitution suite needs exactly three S-boxes")
        for box in self.sboxes:
            if np.asarray(box).shape != (256,):
                raise DimensionError("S-box tables must have 256 entries")
            if not np.all(np.bincount(np.asarray(box, dtype=np.uint8), minlength=256) == 1):
                raise OpCodeError("S-box table is not a bijection on 0..255")
        s0, s1, s2 = (np.asarray(b, dtype=np.uint8) for b in self.sboxes)
        fwd = np.stack([s0, (~s1), _rotl1(s2)]).astype(np.uint8)
        bwd = np.stack([_invert_table(fwd[k]) for k in _CODES])
        fwd.setflags(write=False)
        bwd.setflags(write=False)
        object.__setattr__(self, "forward", fwd)
        object.__setattr__(self, "backward", bwd)

    @property
    def inverse_sboxes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """Plain inverses of the raw S-box tables (pre-post-operation)."""
        return tuple(_invert_table(np.asarray(b, dtype=np.uint8)) for b in self.sboxes)


def _checked_op(op: int) -> int:
    if op not in _CODES:
        raise OpCodeError(f"operation code must be 0, 1 or 2, got {op!r}")
    return op


def substitute_pixel(p: int, op: int, suite: SubstitutionSuite) -> int:
    """One pixel through S-box `op` and its post-operation."""
    return int(suite.forward[_checked_op(op), p & 0xFF])


def unsubstitute_pixel(c: int, op: int, suite: SubstitutionSuite) -> int:
    """Exact inverse of :func:`substitute_pixel`."""
    return int(suite.backward[_checked_op(op), c & 0xFF])


def _check_pair(img: np.ndarray, ops: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    img = np.asarray(img, dtype=np.uint8)
    ops = np.asarray(ops)
    if ops.shape != img.shape:
        raise DimensionError(
            f"operation matrix shape {ops.shape} does not match image shape {img.shape}"
        )
    if ops.size and (ops.min() < 0 or ops.max() > 2):
        raise OpCodeError("operation matrix contains codes outside {0, 1, 2}")
    return img, ops.astype(np.intp)


def substitution_stage(img: np.ndarray, ops: np.ndarray, suite: SubstitutionSuite) -> np.ndarray:
    """Substitute every pixel according to its operation code."""
    img, ops = _check_pair(img, ops)
    return suite.forward[ops, img]


def unsubstitute_stage(img: np.ndarray, ops: np.ndarray, suite: SubstitutionSuite) -> np.ndarray:
    """Exact inverse of :func:`substitution_stage`."""
    img, ops = _check_pair(img, ops)
    return suite.backward[ops, img]
