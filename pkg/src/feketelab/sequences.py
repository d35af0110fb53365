"""Rotated Legendre-symbol sequences and exact autocorrelation norms.

A length-t coefficient vector over {-1, 0, +1} stands for the polynomial
sum_j f_j z^j.  On the unit circle its fourth-power L4 norm is the exact
integer c_0^2 + 2 sum_{u>=1} c_u^2, where c_u are the aperiodic
autocorrelations; all norm computations here stay in integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .characters import legendre_table
from .primality import require_odd_prime


class KernelPrecisionError(ArithmeticError):
    """Spectral autocorrelation failed to round back to exact integers."""


@dataclass(frozen=True)
class FeketeSpec:
    """Construction parameters: odd prime p, rotation r (any sign), length t >= 1.

    Coefficient j of the resulting sequence is the Legendre symbol
    (j + r | p), so the base sequence of length p is cyclically rotated
    by r and truncated (t < p) or periodically extended (t > p).
    """

    p: int
    r: int
    t: int

    def __post_init__(self) -> None:
        require_odd_prime(self.p)
        if not isinstance(self.r, int) or isinstance(self.r, bool):
            raise ValueError(f"rotation must be an integer, got {self.r!r}")
        if not isinstance(self.t, int) or isinstance(self.t, bool) or self.t < 1:
            raise ValueError(f"length must be a positive integer, got {self.t!r}")


class CoefficientSequence:
    """Immutable finite coefficient vector with entries in {-1, 0, +1}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        arr = np.asarray(coeffs, dtype=np.int64).copy()
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("coefficient vector must be 1-d and non-empty")
        if not np.isin(arr, (-1, 0, 1)).all():
            raise ValueError("coefficients must lie in {-1, 0, +1}")
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def __setattr__(self, name, value):
        raise AttributeError("CoefficientSequence is immutable")

    @property
    def is_littlewood(self) -> bool:
        """True when every coefficient is -1 or +1."""
        return bool((self.coeffs != 0).all())

    def __len__(self) -> int:
        return int(self.coeffs.size)

    def __iter__(self):
        return iter(self.coeffs.tolist())

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoefficientSequence):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            (self.coeffs == other.coeffs).all()
        )

    def __repr__(self) -> str:
        body = ", ".join(f"{v:+d}" for v in self.coeffs.tolist()[:12])
        tail = ", ..." if len(self) > 12 else ""
        return f"CoefficientSequence([{body}{tail}], len={len(self)})"


def _as_sequence(seq) -> CoefficientSequence:
    return seq if isinstance(seq, CoefficientSequence) else CoefficientSequence(seq)


def fekete_coeffs(spec: FeketeSpec) -> CoefficientSequence:
    """Coefficient vector [ (j + r | p) for 0 <= j < t ]."""
    table = legendre_table(spec.p)
    idx = (np.arange(spec.t, dtype=np.int64) + spec.r % spec.p) % spec.p
    return CoefficientSequence(table[idx])


def littlewoodize(seq) -> CoefficientSequence:
    """Replace every zero coefficient by +1, forcing entries into {-1, +1}."""
    seq = _as_sequence(seq)
    return CoefficientSequence(np.where(seq.coeffs == 0, 1, seq.coeffs))


def autocorrelation_naive(seq) -> np.ndarray:
    """Aperiodic autocorrelations c_u = sum_j f_j f_{j+u}, u = 0 .. t-1.

    Direct O(t^2) integer summation; the reference kernel.
    """
    seq = _as_sequence(seq)
    f = seq.coeffs
    t = f.size
    out = np.empty(t, dtype=np.int64)
    for u in range(t):
        out[u] = np.dot(f[: t - u], f[u:])
    return out


def autocorrelation_fast(seq) -> np.ndarray:
    """Same integer output as autocorrelation_naive in O(t log t).

    Spectral convolution of the sequence with its reversal, zero-padded
    to the next power of two >= 2t-1.  Raises KernelPrecisionError if
    any value fails to round cleanly to an integer (residual >= 1e-3).
    """
    seq = _as_sequence(seq)
    f = seq.coeffs.astype(np.float64)
    t = f.size
    n = 1 << max(2 * t - 2, 0).bit_length()
    spectrum = np.fft.rfft(f, n)
    corr = np.fft.irfft(spectrum * np.conj(spectrum), n)[:t]
    rounded = np.rint(corr)
    residual = float(np.abs(corr - rounded).max())
    if residual >= 1e-3:
        raise KernelPrecisionError(
            f"autocorrelation rounding residual {residual:.3e} at length {t}"
        )
    return rounded.astype(np.int64)


def l2_norm_pow2(seq) -> int:
    """Squared L2 norm: sum of squared coefficients (= t for Littlewood)."""
    seq = _as_sequence(seq)
    return int(np.dot(seq.coeffs, seq.coeffs))


def l4_norm_pow4(seq, kernel: str = "fast") -> int:
    """Fourth power of the L4 norm: c_0^2 + 2 sum_{u>=1} c_u^2, exact.

    Accumulates in Python integers, so no overflow at any desk scale.
    """
    seq = _as_sequence(seq)
    if kernel == "fast":
        c = autocorrelation_fast(seq)
    elif kernel == "naive":
        c = autocorrelation_naive(seq)
    else:
        raise ValueError(f"kernel must be 'fast' or 'naive', got {kernel!r}")
    values = c.tolist()
    return values[0] ** 2 + 2 * sum(v * v for v in values[1:])


def merit_factor(seq) -> float:
    """||f||_2^4 / (||f||_4^4 - ||f||_2^4), evaluated in double precision.

    Raises ValueError on degenerate input (denominator zero, e.g. a
    single coefficient), rather than returning infinity.
    """
    seq = _as_sequence(seq)
    num = l2_norm_pow2(seq) ** 2
    den = l4_norm_pow4(seq) - num
    if den == 0:
        raise ValueError("degenerate sequence: ||f||_4^4 equals ||f||_2^4")
    return num / den


def char_sum_l4(spec: FeketeSpec) -> int:
    """Fourth-power L4 norm as a constrained quadruple character sum.

    Sums (  (j1+r)(j2+r)(j3+r)(j4+r) | p  ) over all index quadruples in
    [0, t) with j1 + j2 = j3 + j4, reducing the product mod p before the
    symbol is taken.  Independent of the autocorrelation route; the two
    must agree exactly.  O(t^3), capped at t <= 64.
    """
    if spec.t > 64:
        raise ValueError(f"quadruple-sum oracle capped at t <= 64, got {spec.t}")
    p, t = spec.p, spec.t
    table = legendre_table(p)
    residue = (np.arange(t, dtype=np.int64) + spec.r % p) % p
    total = 0
    for j2 in range(t):
        for j3 in range(t):
            lo = max(0, j2 - j3)
            hi = min(t, t + j2 - j3)
            if lo >= hi:
                continue
            j4 = np.arange(lo, hi, dtype=np.int64)
            j1 = j3 + j4 - j2
            product = (
                residue[j1] * residue[j2] % p * residue[j3] % p * residue[j4] % p
            )
            total += int(table[product].sum())
    return total


def periodic_lower_bound(t: int, m: int) -> int:
    """sum_n max(0, t - |n| m)^2: the L4^4 floor for m-periodic sequences."""
    if t < 1 or m < 1:
        raise ValueError(f"need t, m >= 1, got t={t}, m={m}")
    total = t * t
    n = 1
    while n * m < t:
        total += 2 * (t - n * m) ** 2
        n += 1
    return total
