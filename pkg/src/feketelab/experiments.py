"""Finite-p experiments: norm decomposition, bound checks, convergence ladders.

These routines measure how fast the exact integer norms approach the
limit surface, and verify the closed forms that drive the limit: the
five-term split of ||f||_4^4, the complex-sum bound behind its error
term, and the periodic lower bound for long sequences.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .asymptotics import ratio_limit_u
from .primality import next_prime_at_least, require_odd_prime
from .sequences import (
    FeketeSpec,
    fekete_coeffs,
    l4_norm_pow4,
    littlewoodize,
    periodic_lower_bound,
)

__all__ = [
    "DecompositionReport",
    "ExperimentRecord",
    "ExponentialSumBound",
    "export_records",
    "five_term_decomposition",
    "large_t_check",
    "prime_ladder",
    "run_convergence",
    "technical_lemma_check",
]


@dataclass(frozen=True)
class DecompositionReport:
    """Split of the exact ||f_p^(r,t)||_4^4 into closed forms plus remainder.

    A = B = sum_n max(0, t - |n| p)^2 counts index quadruples whose
    difference is a multiple of p; C counts quadruples whose common sum
    is -2r mod p; D = -2t(2t^2+1)/(3p) removes the unconstrained count
    twice.  E_actual is whatever the closed forms leave over, and
    E_normalized = E_actual / p^2 must shrink as p grows.
    """

    A: int
    B: int
    C: int
    D: Fraction
    E_actual: Fraction
    E_normalized: float


def _window_sum_sq(t: int, period: int, offset: int = 0) -> int:
    """sum_n max(0, t - |offset - n * period|)^2 over all integers n."""
    total = 0
    lo = math.floor((offset - t) / period)
    hi = math.ceil((offset + t) / period)
    for n in range(lo, hi + 1):
        total += max(0, t - abs(offset - n * period)) ** 2
    return total


def five_term_decomposition(spec: FeketeSpec) -> DecompositionReport:
    """Evaluate the closed forms and the exact remainder for one spec.

    Needs the exact norm of the raw (not Littlewood-ized) sequence, so
    the length is capped at 1e4.
    """
    if spec.t > 10_000:
        raise ValueError(f"decomposition capped at t <= 10000, got {spec.t}")
    p, r, t = spec.p, spec.r, spec.t
    a_term = _window_sum_sq(t, p)
    c_term = _window_sum_sq(t, p, offset=t - 1 + 2 * r)
    d_term = Fraction(-2 * t * (2 * t * t + 1), 3 * p)
    exact = l4_norm_pow4(fekete_coeffs(spec))
    e_actual = Fraction(exact) - (a_term + a_term + c_term + d_term)
    return DecompositionReport(
        A=a_term,
        B=a_term,
        C=c_term,
        D=d_term,
        E_actual=e_actual,
        E_normalized=float(e_actual) / p**2,
    )


class ExponentialSumBound(NamedTuple):
    """Aggregate complex-sum magnitude G against 64 max(n,t)^3 (1+ln n)^3."""

    G: float
    bound: float
    ok: bool


def technical_lemma_check(n: int, t: int) -> ExponentialSumBound:
    """Brute-force check of the constrained-quadruple exponential-sum bound.

    G = sum over (a, b, c) in (Z/nZ)^3 of | sum of w^(-a j2 + b j3 + c j4)
    over 0 <= j1, j2, j3, j4 < t with j1 + j2 = j3 + j4 |, w = e^(2 pi i/n).
    The quadruple sum is grouped exactly by the diagonal h = j3 + j4 (an
    algebraic regrouping of the same finitely many terms), which brings the
    exhaustive scan over n <= 24, t <= 32 down to seconds.
    """
    if not 1 <= n <= 24:
        raise ValueError(f"need 1 <= n <= 24, got n={n}")
    if not 1 <= t <= 32:
        raise ValueError(f"need 1 <= t <= 32, got t={t}")
    omega = np.exp(2j * np.pi * np.arange(n) / n)
    # power[a, j] = w^(a j) for j up to the largest diagonal index
    power = omega[:, None] ** np.arange(2 * t - 1)[None, :]
    # pair_sum[b*n + c, h] = sum_{j3 + j4 = h, j3, j4 < t} w^(b j3 + c j4)
    pair_sum = np.empty((n * n, 2 * t - 1), dtype=np.complex128)
    for b in range(n):
        for c in range(n):
            pair_sum[b * n + c] = np.convolve(power[b, :t], power[c, :t])
    # diag_sum[a, h] = sum over j2 with j1 = h - j2 in [0, t) of w^(-a j2)
    prefix = np.cumsum(np.conj(power), axis=1)
    diag_sum = np.empty((n, 2 * t - 1), dtype=np.complex128)
    for h in range(2 * t - 1):
        lo, hi = max(0, h - t + 1), min(h, t - 1)
        diag_sum[:, h] = prefix[:, hi] - (prefix[:, lo - 1] if lo > 0 else 0.0)
    G = float(np.abs(pair_sum @ diag_sum.T).sum())
    bound = 64.0 * max(n, t) ** 3 * (1.0 + math.log(n)) ** 3
    return ExponentialSumBound(G=G, bound=bound, ok=G <= bound)


@dataclass(frozen=True)
class ExperimentRecord:
    """One convergence measurement at a single prime."""

    p: int
    r: int
    t: int
    l4_pow4: int
    ratio4: float
    limit: float
    abs_err: float
    rel_err: float


def _round_half_away(x: float) -> int:
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


def prime_ladder(p_lo: int, p_hi: int, count: int) -> list[int]:
    """count geometrically spaced targets in [p_lo, p_hi], each snapped
    to the nearest prime above (so the top rung may exceed p_hi)."""
    if not (3 <= p_lo <= p_hi):
        raise ValueError(f"need 3 <= p_lo <= p_hi, got [{p_lo}, {p_hi}]")
    if count < 1:
        raise ValueError(f"need count >= 1, got {count}")
    ratio = p_hi / p_lo
    rungs: list[int] = []
    for i in range(count):
        target = p_lo * ratio ** (i / (count - 1)) if count > 1 else p_lo
        q = next_prime_at_least(math.ceil(target))
        while rungs and q <= rungs[-1]:
            q = next_prime_at_least(q + 1)
        rungs.append(q)
    return rungs


def run_convergence(
    R: float, T: float, p_lo: int, p_hi: int, count: int
) -> list[ExperimentRecord]:
    """Exact normalized norms along a prime ladder against the limit u(R, T).

    For each prime the rotation and length are the nearest integers to
    R*p and T*p (half away from zero, length at least 1), the sequence
    is Littlewood-ized, and its exact fourth-power norm is divided by
    t^2.  Records are ordered by p.
    """
    if T <= 0:
        raise ValueError(f"length fraction T must be positive, got {T}")
    if count < 2:
        raise ValueError(f"need count >= 2, got {count}")
    limit = ratio_limit_u(R, T)
    records = []
    for p in prime_ladder(p_lo, p_hi, count):
        r = _round_half_away(R * p)
        t = max(1, _round_half_away(T * p))
        g = littlewoodize(fekete_coeffs(FeketeSpec(p, r, t)))
        l4 = l4_norm_pow4(g, kernel="fast")
        ratio4 = l4 / t**2
        abs_err = abs(ratio4 - limit)
        records.append(
            ExperimentRecord(
                p=p,
                r=r,
                t=t,
                l4_pow4=l4,
                ratio4=ratio4,
                limit=limit,
                abs_err=abs_err,
                rel_err=abs_err / limit,
            )
        )
    return records


def large_t_check(p: int, t: int, r: int = 0) -> bool:
    """For t/p > 3/2, confirm ||g||_4^4 / t^2 >= 1 + 2 (1 - p/t)^2.

    The sequence is p-periodic, so its norm is at least the periodic
    lower bound with period p, whose first three terms already give the
    closed-form threshold; the comparison is done in exact integers as
    l4 >= t^2 + 2 (t - p)^2.
    """
    require_odd_prime(p)
    if 2 * t <= 3 * p:
        raise ValueError(f"need t/p > 3/2, got t={t}, p={p}")
    g = littlewoodize(fekete_coeffs(FeketeSpec(p, r, t)))
    l4 = l4_norm_pow4(g)
    floor = periodic_lower_bound(t, p)
    threshold = t * t + 2 * (t - p) ** 2
    return l4 >= floor and floor >= threshold


_RECORD_FIELDS = ("p", "r", "t", "l4_pow4", "ratio4", "limit", "abs_err", "rel_err")
_FLOAT_FIELDS = ("ratio4", "limit", "abs_err", "rel_err")


def _record_row(rec: ExperimentRecord) -> dict:
    row = {name: getattr(rec, name) for name in _RECORD_FIELDS}
    for name in _FLOAT_FIELDS:
        row[name] = float(f"{row[name]:.15g}")
    return row


def export_records(records, format: str, destination) -> None:
    """Write records as CSV or JSON with floats at 15 significant digits."""
    records = list(records)
    if not records:
        raise ValueError("no records to export")
    if format not in ("csv", "json"):
        raise ValueError(f"format must be 'csv' or 'json', got {format!r}")
    rows = [_record_row(rec) for rec in records]
    try:
        with open(destination, "w", newline="") as handle:
            if format == "csv":
                writer = csv.DictWriter(handle, fieldnames=_RECORD_FIELDS)
                writer.writeheader()
                for row in rows:
                    writer.writerow(
                        {
                            name: f"{value:.15g}" if name in _FLOAT_FIELDS else value
                            for name, value in row.items()
                        }
                    )
            else:
                json.dump(rows, handle, indent=2)
                handle.write("\n")
    except OSError as exc:
        raise OSError(f"cannot write records to {destination}: {exc}") from exc
