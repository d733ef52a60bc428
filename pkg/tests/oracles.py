"""Independent reference computations used by the test suite.

Everything in this file is deliberately written *against different
machinery* than the package: arbitrary-precision arithmetic via mpmath,
exact rationals via fractions.Fraction, and naive nested-loop
constructions.  Nothing here imports from ``xcross`` — these are the
yardsticks the package is measured with, not wrappers around it.

A note on validating chaotic iterators: a chaotic map amplifies any
difference by a large factor per step, so after the built-in 1000-step
transient a free-running high-precision run shares no digits with a
binary64 run — comparing them tells you nothing.  The meaningful check is
per transition: take the implementation's emitted state, advance it one
step at 50-digit precision, round to double, and compare with the
implementation's next state.  A correct binary64 step lands within a few
ulp of that; any formula or precision mistake lands O(1) away.
"""

from __future__ import annotations

from fractions import Fraction

from mpmath import mp, mpf

mp.dps = 50


# ---------------------------------------------------------------------------
# chaotic recurrences, one step at 50 significant digits


def lshm_next(x: float, y: float, k1: float, k2: float, alpha: float,
              beta: float) -> tuple[float, float]:
    """High-precision single step of the 2D LSHM recurrence.

    Inputs are the exact binary64 state; the true-pi, 50-digit result is
    rounded to double once at the end.
    """
    c = mp.cos(mp.pi * mpf(x))
    t = mp.power(abs(c), mpf(beta))
    if c < 0:
        t = -t
    w = mpf(k1) * (1 + mpf(alpha) * t)
    x_next = w - mp.floor(w)
    y_next = mpf(k2) * (mp.cos(mpf(y)) * (1 - mpf(x)))
    return float(x_next), float(y_next)


def clt_next(z: float, lam: float, alpha_c: float) -> float:
    """High-precision single step of the combined logistic-tent recurrence."""
    zm = mpf(z)
    t = mpf(lam) * zm * (1 - zm)
    if z < 0.5:
        s = mpf(alpha_c) * zm / 2
    else:
        s = mpf(alpha_c) * (1 - zm) / 2
    w = t + s
    w = w - mp.floor(w)
    return float(w)


def clt_free_run(z_start: float, lam: float, alpha_c: float, n: int) -> list[float]:
    """Free-running 50-digit CLT iteration from an exact double start state.

    Only usable over short windows (the whole point of the per-step
    validator above), but the CLT's per-step error amplification is mild
    enough that ten steps stay meaningful.
    """
    zm = mpf(z_start)
    out = []
    for _ in range(n):
        t = mpf(lam) * zm * (1 - zm)
        if zm < mpf("0.5"):
            s = mpf(alpha_c) * zm / 2
        else:
            s = mpf(alpha_c) * (1 - zm) / 2
        zm = t + s
        zm = zm - mp.floor(zm)
        out.append(float(zm))
    return out


# ---------------------------------------------------------------------------
# exact quantization (key-schedule reference)


def round_half_away_exact(v: float, scale: int) -> int:
    """round(v * scale) with ties away from zero, in exact rational arithmetic.

    ``v`` is taken as the exact binary64 rational it is; no double multiply
    is involved, so boundary cases cannot be misrounded here.
    """
    x = Fraction(v) * scale
    if x >= 0:
        floor = x.numerator // x.denominator
        frac = x - floor
        return int(floor + (1 if frac >= Fraction(1, 2) else 0))
    ceil = -((-x).numerator // (-x).denominator)
    frac = ceil - x
    return int(ceil - (1 if frac >= Fraction(1, 2) else 0))


def quantize_rea_exact(stream: list[float]) -> list[int]:
    """Exact-arithmetic version of the extraction-array quantizer."""
    return [round_half_away_exact(v, 10**5) % 256 for v in stream]


def quantize_ops_exact(stream: list[float]) -> list[int]:
    """Exact-arithmetic version of the operation-code quantizer."""
    return [round_half_away_exact(v, 10**3) % 3 for v in stream]


# ---------------------------------------------------------------------------
# brute-force X-Cross position table


def xcross_table_naive(rows: int, cols: int) -> list[int]:
    """Flat source index for each emission, by literal schedule simulation.

    Walk the row pairs outermost-first; inside a row pair walk column pairs
    alternating outermost, then innermost-remaining, and so on; inside a
    column pair emit (top,right), (bottom,left), (top,left), (bottom,right).
    Written as plain loops and kept naive on purpose.
    """
    assert rows % 2 == 0 and cols % 2 == 0
    order = []
    half_pairs = cols // 2
    for r in range(rows // 2):
        top, bottom = r, rows - 1 - r
        for k in range(half_pairs):
            if k % 2 == 0:
                p = k // 2
            else:
                p = half_pairs - 1 - k // 2
            left, right = p, cols - 1 - p
            order.append(top * cols + right)
            order.append(bottom * cols + left)
            order.append(top * cols + left)
            order.append(bottom * cols + right)
    return order
