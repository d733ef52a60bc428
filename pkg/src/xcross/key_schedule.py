"""Derivation of every key artifact from the key material.

One `KeyMaterial` fans out into: two quantized extraction arrays (from the
LSHM streams), four bit-extraction keys (stable argsorts and their
inverses), the per-pixel operation-selection matrix and three S-boxes
(both from CLT streams).  All derivations are deterministic and verified
bijective where bijectivity is required.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .chaotic_maps import CltParams, LshmParams, iterate_clt, iterate_lshm
from .errors import DimensionError, KeyFormatError, ParameterError

#: Hard cap on M*N, mirrored by the image reader.
MAX_PIXELS = 2**24

#: Operating ranges for key generation.  `keygen --random` draws uniformly
#: from these, and explicitly supplied values are validated against them;
#: they stay well inside the chaotic regime of both maps (the mathematical
#: domains accepted when *parsing* a key file are wider).
PARAM_RANGES: dict[str, tuple[float, float]] = {
    "lshm.x0": (0.05, 0.95),
    "lshm.y0": (0.05, 0.95),
    "lshm.k1": (3.6, 4.0),
    "lshm.k2": (3.1, 3.9),
    "lshm.alpha": (1.8, 2.6),
    "lshm.beta": (1.5, 2.5),
    "clt.z0": (0.02, 0.98),
    "clt.lambda": (3.55, 3.95),
    "clt.alpha": (2.05, 3.95),
    "sbox.seed1": (0.02, 0.98),
    "sbox.seed2": (0.02, 0.98),
    "sbox.seed3": (0.02, 0.98),
}

KEY_FIELDS = (
    "lshm.x0", "lshm.y0", "lshm.k1", "lshm.k2", "lshm.alpha", "lshm.beta",
    "clt.z0", "clt.lambda", "clt.alpha",
    "sbox.seed1", "sbox.seed2", "sbox.seed3",
    "version",
)

KEY_VERSION = "1"


@dataclass(frozen=True)
class KeyMaterial:
    """Every secret the cipher derives its working keys from."""

    lshm: LshmParams
    clt: CltParams
    sbox_seeds: tuple[float, float, float]
    version: str = KEY_VERSION

    def __post_init__(self) -> None:
        if len(self.sbox_seeds) != 3:
            raise ParameterError("exactly three sbox seeds are required")
        for i, s in enumerate(self.sbox_seeds, start=1):
            if not 0.0 < s < 1.0:
                raise ParameterError(f"sbox.seed{i} must lie in (0, 1), got {s!r}")
        if len(set(self.sbox_seeds)) != 3:
            raise ParameterError("sbox seeds must be pairwise distinct")
        if self.version != KEY_VERSION:
            raise ParameterError(f"unsupported key version {self.version!r}")


def _check_dims(m: int, n: int) -> None:
    if m % 4 or n % 4 or m < 4 or n < 4:
        raise DimensionError(f"image dimensions must be multiples of 4, got {m}x{n}")
    if m * n > MAX_PIXELS:
        raise DimensionError(f"image of {m}x{n} exceeds the {MAX_PIXELS}-pixel cap")


def round_half_away(values: np.ndarray) -> np.ndarray:
    """Elementwise round-to-nearest with ties away from zero, as int64."""
    v = np.asarray(values, dtype=np.float64)
    f = np.floor(v)
    c = np.ceil(v)
    pos = f + (v - f >= 0.5)
    neg = c - (c - v >= 0.5)
    return np.where(v >= 0.0, pos, neg).astype(np.int64)


def build_extraction_arrays(key: KeyMaterial, m: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Quantize the two LSHM streams into byte-range extraction arrays.

    Each stream value v becomes round(v * 10^5) mod 256 (ties away from
    zero; the y stream can go negative, the mathematical mod brings it
    back to 0..255).  Array length is (m/2 * n/2) * 8: one entry per bit
    of one quadrant.
    """
    _check_dims(m, n)
    length = (m // 2) * (n // 2) * 8
    xs, ys = iterate_lshm(key.lshm, length)
    rea1 = np.mod(round_half_away(xs * 1e5), 256)
    rea2 = np.mod(round_half_away(ys * 1e5), 256)
    return rea1, rea2


def build_extraction_keys(rea1: np.ndarray, rea2: np.ndarray) -> tuple[np.ndarray, ...]:
    """Turn the extraction arrays into four bit-permutation keys.

    key1/key2 are the stable ascending argsorts of rea1/rea2 (ties keep
    their original order); key3/key4 are their inverse permutations
    (key3[key1[i]] = i).  All four are verified permutations of 0..L-1.
    """
    rea1 = np.asarray(rea1)
    rea2 = np.asarray(rea2)
    if rea1.ndim != 1 or rea2.ndim != 1 or rea1.shape != rea2.shape:
        raise DimensionError(
            f"extraction arrays must be equal-length vectors, got {rea1.shape} and {rea2.shape}"
        )
    key1 = np.argsort(rea1, kind="stable")
    key2 = np.argsort(rea2, kind="stable")
    key3 = _invert_permutation(key1)
    key4 = _invert_permutation(key2)
    for perm in (key1, key2, key3, key4):
        _verify_permutation(perm)
    return key1, key2, key3, key4


def _invert_permutation(perm: np.ndarray) -> np.ndarray:
    inv = np.empty_like(perm)
    inv[perm] = np.arange(perm.size, dtype=perm.dtype)
    return inv


def _verify_permutation(perm: np.ndarray) -> None:
    if not np.array_equal(np.sort(perm), np.arange(perm.size)):
        raise ParameterError("derived key is not a permutation")  # pragma: no cover


def build_operation_matrix(key: KeyMaterial, m: int, n: int) -> np.ndarray:
    """Quantize one CLT stream into the m x n matrix of codes in {0,1,2}.

    Each value z becomes round(z * 10^3) mod 3, filled row-major; one code
    per pixel of the target image.
    """
    _check_dims(m, n)
    zs = iterate_clt(key.clt, m * n)
    codes = np.mod(round_half_away(zs * 1e3), 3)
    return codes.astype(np.uint8).reshape(m, n)


def sbox_from_stream(stream: np.ndarray) -> np.ndarray:
    """Stable ascending argsort of 256 values, as a uint8 substitution table.

    A strictly increasing stream yields the identity box, a strictly
    decreasing one the reversal box; ties keep stream order.
    """
    stream = np.asarray(stream)
    if stream.shape != (256,):
        raise DimensionError(f"an S-box needs exactly 256 stream values, got {stream.shape}")
    table = np.argsort(stream, kind="stable").astype(np.uint8)
    if not np.all(np.bincount(table, minlength=256) == 1):
        raise ParameterError("derived S-box is not a bijection")  # pragma: no cover
    return table


def build_sboxes(key: KeyMaterial) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Generate the three S-boxes from the three seeds.

    Each seed replaces z0 in the key's CLT parameters; the stable argsort
    of a 256-value stream is the S-box table — a bijection on 0..255 by
    construction, and verified by occurrence count anyway.
    """
    if len(set(key.sbox_seeds)) != 3:
        raise ParameterError("sbox seeds must be pairwise distinct")
    tables = []
    for seed in key.sbox_seeds:
        p = CltParams(lam=key.clt.lam, alpha_c=key.clt.alpha_c, z0=seed)
        tables.append(sbox_from_stream(iterate_clt(p, 256)))
    return tables[0], tables[1], tables[2]


# ---------------------------------------------------------------------------
# key file format: one `name = decimal-literal` line per field


def serialize_key(key: KeyMaterial) -> str:
    """Render key material in the line-oriented text format.

    Floats are written with repr, which round-trips binary64 exactly.
    """
    p, c = key.lshm, key.clt
    values = {
        "lshm.x0": p.x0, "lshm.y0": p.y0, "lshm.k1": p.k1, "lshm.k2": p.k2,
        "lshm.alpha": p.alpha, "lshm.beta": p.beta,
        "clt.z0": c.z0, "clt.lambda": c.lam, "clt.alpha": c.alpha_c,
        "sbox.seed1": key.sbox_seeds[0],
        "sbox.seed2": key.sbox_seeds[1],
        "sbox.seed3": key.sbox_seeds[2],
    }
    lines = [f"{name} = {values[name]!r}" for name in KEY_FIELDS[:-1]]
    lines.append(f"version = {key.version}")
    return "\n".join(lines) + "\n"


def parse_key(text: str) -> KeyMaterial:
    """Parse the text format back into validated key material.

    Syntax problems (missing '=', unknown or duplicate names, unparseable
    numbers, bad version) raise KeyFormatError; values that parse but lie
    outside their mathematical domain raise ParameterError from the
    KeyMaterial/params constructors.
    """
    seen: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        name, eq, value = line.partition("=")
        if not eq:
            raise KeyFormatError(f"line {lineno}: expected 'name = value', got {raw!r}")
        name = name.strip()
        value = value.strip()
        if name not in KEY_FIELDS:
            raise KeyFormatError(f"line {lineno}: unknown field {name!r}")
        if name in seen:
            raise KeyFormatError(f"line {lineno}: duplicate field {name!r}")
        seen[name] = value
    missing = [f for f in KEY_FIELDS if f not in seen]
    if missing:
        raise KeyFormatError(f"missing fields: {', '.join(missing)}")
    if seen["version"] != KEY_VERSION:
        raise KeyFormatError(f"unsupported key version {seen['version']!r}")

    def num(name: str) -> float:
        try:
            v = float(seen[name])
        except ValueError:
            raise KeyFormatError(f"field {name}: {seen[name]!r} is not a decimal literal") from None
        return v

    lshm = LshmParams(
        x0=num("lshm.x0"), y0=num("lshm.y0"), k1=num("lshm.k1"),
        k2=num("lshm.k2"), alpha=num("lshm.alpha"), beta=num("lshm.beta"),
    )
    clt = CltParams(lam=num("clt.lambda"), alpha_c=num("clt.alpha"), z0=num("clt.z0"))
    seeds = (num("sbox.seed1"), num("sbox.seed2"), num("sbox.seed3"))
    return KeyMaterial(lshm=lshm, clt=clt, sbox_seeds=seeds)


def random_key_material(rng: np.random.Generator) -> KeyMaterial:
    """Draw key material uniformly from the operating ranges."""

    def draw(name: str) -> float:
        lo, hi = PARAM_RANGES[name]
        return float(rng.uniform(lo, hi))

    while True:
        seeds = (draw("sbox.seed1"), draw("sbox.seed2"), draw("sbox.seed3"))
        if len(set(seeds)) == 3:
            break
    return KeyMaterial(
        lshm=LshmParams(
            x0=draw("lshm.x0"), y0=draw("lshm.y0"), k1=draw("lshm.k1"),
            k2=draw("lshm.k2"), alpha=draw("lshm.alpha"), beta=draw("lshm.beta"),
        ),
        clt=CltParams(lam=draw("clt.lambda"), alpha_c=draw("clt.alpha"), z0=draw("clt.z0")),
        sbox_seeds=seeds,
    )


def reference_key() -> KeyMaterial:
    """The repository's fixed reference key (also shipped as assets/reference.key)."""
    return KeyMaterial(
        lshm=LshmParams(x0=0.3, y0=0.5, k1=3.9, k2=3.6, alpha=2.1, beta=2.0),
        clt=CltParams(lam=3.77, alpha_c=3.1, z0=0.37),
        sbox_seeds=(0.21, 0.52, 0.83),
    )
