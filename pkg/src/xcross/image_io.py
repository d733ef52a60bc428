"""Binary PGM (P5) reading and writing, bit-exact.

Only 8-bit single-plane images (maxval 255) are supported; that keeps the
container trivially deterministic, which the round-trip guarantees of the
cipher depend on.  Header comments are preserved on read, and the writer
emits at most one comment line: the ``# orig-size <w> <h>`` note used to
undo padding after decryption.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionError,
    ParameterError,
    PgmDepthError,
    PgmError,
    PgmMagicError,
    PgmOversizeError,
    PgmTruncatedError,
)
from .key_schedule import MAX_PIXELS

_WS = frozenset(b" \t\n\r\v\f")
_HASH = 0x23

ORIG_SIZE_PREFIX = "orig-size"


@dataclass(frozen=True)
class PgmHeader:
    width: int
    height: int
    maxval: int = 255
    comments: tuple[str, ...] = field(default_factory=tuple)
    magic: str = "P5"


def parse_pgm(raw: bytes) -> tuple[PgmHeader, np.ndarray]:
    """Parse a binary P5 stream into (header, pixels).

    The header tokenizer accepts any whitespace between tokens and comment
    lines anywhere before the maxval token.  After maxval the format
    requires exactly one whitespace byte, then ``width*height`` payload
    bytes row-major; trailing bytes are ignored.
    """
    raw = bytes(raw)
    tokens: list[bytes] = []
    comments: list[str] = []
    pos, n = 0, len(raw)
    while len(tokens) < 4:
        if pos >= n:
            raise PgmTruncatedError("stream ended inside the header")
        b = raw[pos]
        if b in _WS:
            pos += 1
        elif b == _HASH:
            end = raw.find(b"\n", pos)
            if end < 0:
                raise PgmTruncatedError("unterminated header comment")
            comments.append(raw[pos + 1:end].decode("latin-1").strip())
            pos = end + 1
        else:
            start = pos
            while pos < n and raw[pos] not in _WS and raw[pos] != _HASH:
                pos += 1
            tokens.append(raw[start:pos])
            if len(tokens) == 1 and tokens[0] != b"P5":
                raise PgmMagicError(
                    f"not a binary PGM stream (magic {tokens[0]!r}, expected b'P5')"
                )
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError:
        raise PgmError(f"non-numeric header tokens {tokens[1:]!r}") from None
    if width < 1 or height < 1:
        raise PgmError(f"degenerate dimensions {width}x{height}")
    if width * height > MAX_PIXELS:
        raise PgmOversizeError(
            f"{width}x{height} exceeds the {MAX_PIXELS}-pixel limit"
        )
    if maxval != 255:
        raise PgmDepthError(f"only maxval 255 is supported, got {maxval}")
    # exactly one whitespace byte separates the header from the payload;
    # anything else (including a comment here) would make payload bytes
    # that look like '#' ambiguous
    if pos >= n or raw[pos] not in _WS:
        raise PgmError("expected a single whitespace byte after maxval")
    pos += 1
    need = width * height
    if n - pos < need:
        raise PgmTruncatedError(
            f"payload holds {n - pos} bytes, header promises {need}"
        )
    pixels = (
        np.frombuffer(raw, dtype=np.uint8, count=need, offset=pos)
        .reshape(height, width)
        .copy()
    )
    header = PgmHeader(width=width, height=height, comments=tuple(comments))
    return header, pixels


def read_pgm(raw: bytes) -> np.ndarray:
    """Pixels only; use `parse_pgm` when the header comments matter."""
    return parse_pgm(raw)[1]


def write_pgm(img: np.ndarray, pad_note: tuple[int, int] | None = None) -> bytes:
    """Serialize to the canonical byte form ``P5\\n<w> <h>\\n255\\n<payload>``.

    ``pad_note=(orig_w, orig_h)`` inserts the ``# orig-size`` comment right
    after the magic line so a later decryption can crop padding away.
    """
    img = np.asarray(img)
    if img.dtype != np.uint8:
        raise ParameterError(f"PGM payload must be uint8, got {img.dtype}")
    if img.ndim != 2 or img.size == 0:
        raise DimensionError(f"PGM payload must be a nonempty 2-D array, got shape {img.shape}")
    height, width = img.shape
    parts = ["P5\n"]
    if pad_note is not None:
        ow, oh = pad_note
        if ow < 1 or oh < 1 or ow > width or oh > height:
            raise ParameterError(
                f"original size {ow}x{oh} does not fit inside {width}x{height}"
            )
        parts.append(f"# {ORIG_SIZE_PREFIX} {ow} {oh}\n")
    parts.append(f"{width} {height}\n255\n")
    return "".join(parts).encode("ascii") + np.ascontiguousarray(img).tobytes()


def original_size_note(comments: tuple[str, ...]) -> tuple[int, int] | None:
    """Extract (width, height) from an ``orig-size`` header comment, if any."""
    for line in comments:
        fields = line.split()
        if len(fields) == 3 and fields[0] == ORIG_SIZE_PREFIX:
            try:
                ow, oh = int(fields[1]), int(fields[2])
            except ValueError:
                continue
            if ow > 0 and oh > 0:
                return ow, oh
    return None
