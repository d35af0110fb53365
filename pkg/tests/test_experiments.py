import cmath
import csv
import json
from fractions import Fraction

import pytest

from feketelab.experiments import (
    export_records,
    five_term_decomposition,
    large_t_check,
    prime_ladder,
    run_convergence,
    technical_lemma_check,
)
from feketelab.primality import is_prime
from feketelab.sequences import FeketeSpec, fekete_coeffs, l4_norm_pow4, littlewoodize


def quadruple_count(t, accept):
    total = 0
    for j1 in range(t):
        for j2 in range(t):
            for j3 in range(t):
                j4 = j1 + j2 - j3
                if 0 <= j4 < t and accept(j1, j2, j3, j4):
                    total += 1
    return total


def test_decomposition_frozen_example():
    rep = five_term_decomposition(FeketeSpec(7, 1, 7))
    assert rep.A == rep.B == 49
    assert rep.C == 37
    assert rep.D == Fraction(-66)
    assert rep.E_actual == Fraction(-19)
    assert rep.E_normalized == pytest.approx(-19 / 49)


def test_decomposition_identity_is_exact():
    for p, r, t in ((11, 2, 5), (11, 2, 11), (13, 3, 19), (31, 7, 46)):
        spec = FeketeSpec(p, r, t)
        rep = five_term_decomposition(spec)
        exact = Fraction(l4_norm_pow4(fekete_coeffs(spec)))
        assert exact == rep.A + rep.B + rep.C + rep.D + rep.E_actual
        assert rep.A == rep.B


def test_decomposition_closed_forms_count_quadruples():
    # A counts quadruples with j1+j2 = j3+j4 and p | j4-j2; C counts those
    # with j1+j2 = j3+j4 = -2r mod p; D removes the unconstrained count twice.
    for p in (3, 5, 7):
        for r in (0, 1, 2):
            for t in (1, 3, p, p + 2, 2 * p):
                rep = five_term_decomposition(FeketeSpec(p, r, t))
                assert rep.A == quadruple_count(t, lambda a, b, c, d: (d - b) % p == 0)
                assert rep.C == quadruple_count(
                    t, lambda a, b, c, d: (a + b + 2 * r) % p == 0
                )
                assert rep.D == -Fraction(2, p) * quadruple_count(
                    t, lambda a, b, c, d: True
                )


def test_decomposition_rejects_oversize_length():
    with pytest.raises(ValueError):
        five_term_decomposition(FeketeSpec(10007, 0, 10_001))


def brute_lemma_sum(n, t):
    total = 0.0
    for a in range(n):
        for b in range(n):
            for c in range(n):
                s = 0j
                for j2 in range(t):
                    for j3 in range(t):
                        for j4 in range(t):
                            j1 = j3 + j4 - j2
                            if 0 <= j1 < t:
                                s += cmath.exp(
                                    2j * cmath.pi * (-a * j2 + b * j3 + c * j4) / n
                                )
                total += abs(s)
    return total


def test_technical_lemma_trivial_case():
    res = technical_lemma_check(1, 1)
    assert res.G == pytest.approx(1.0, abs=1e-12)
    assert res.bound == pytest.approx(64.0)
    assert res.ok


def test_technical_lemma_examples_hold():
    assert technical_lemma_check(5, 5).ok
    assert technical_lemma_check(24, 32).ok


def test_technical_lemma_matches_bruteforce():
    for n in (1, 2, 3, 4, 5):
        for t in (1, 2, 4, 6):
            grouped = technical_lemma_check(n, t).G
            assert grouped == pytest.approx(brute_lemma_sum(n, t), abs=1e-8)


def test_technical_lemma_rejects_out_of_range():
    with pytest.raises(ValueError):
        technical_lemma_check(25, 3)
    with pytest.raises(ValueError):
        technical_lemma_check(3, 33)
    with pytest.raises(ValueError):
        technical_lemma_check(0, 3)


def test_prime_ladder_shape():
    rungs = prime_ladder(100, 10_000, 8)
    assert len(rungs) == 8
    assert rungs[0] == 101
    assert all(is_prime(p) for p in rungs)
    assert all(b > a for a, b in zip(rungs, rungs[1:]))


def test_run_convergence_record_fields():
    records = run_convergence(0.25, 1.0, 100, 400, 3)
    assert [rec.p for rec in records] == sorted(rec.p for rec in records)
    for rec in records:
        assert rec.r == round(0.25 * rec.p)
        assert rec.t == round(1.0 * rec.p)
        g = littlewoodize(fekete_coeffs(FeketeSpec(rec.p, rec.r, rec.t)))
        assert rec.l4_pow4 == l4_norm_pow4(g)
        assert rec.ratio4 == pytest.approx(rec.l4_pow4 / rec.t**2)
        assert rec.ratio4 >= 1.0
        assert rec.abs_err == pytest.approx(abs(rec.ratio4 - rec.limit))
        assert rec.rel_err == pytest.approx(rec.abs_err / rec.limit)


def test_run_convergence_negative_R_rounding():
    records = run_convergence(-0.25, 1.0, 100, 200, 2)
    for rec in records:
        assert rec.r == -round(0.25 * rec.p)


def test_run_convergence_validates_arguments():
    with pytest.raises(ValueError):
        run_convergence(0.25, 0.0, 100, 200, 4)
    with pytest.raises(ValueError):
        run_convergence(0.25, 1.0, 100, 200, 1)


def test_large_t_check_examples():
    assert large_t_check(7, 14, 0)
    assert large_t_check(11, 17, 3)
    with pytest.raises(ValueError):
        large_t_check(7, 10)


def test_large_t_ratio_beats_eleven_ninths():
    for p, t, r in ((7, 11, 0), (11, 18, 5), (13, 20, 2)):
        assert large_t_check(p, t, r)
        g_l4 = l4_norm_pow4(littlewoodize(fekete_coeffs(FeketeSpec(p, r, t))))
        assert g_l4 / t**2 > 11 / 9


def _sample_records():
    return run_convergence(0.25, 1.0, 100, 300, 2)


def test_export_csv_layout(tmp_path):
    records = _sample_records()
    out = tmp_path / "ladder.csv"
    export_records(records, "csv", out)
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "p,r,t,l4_pow4,ratio4,limit,abs_err,rel_err"
    assert len(lines) == len(records) + 1
    with open(out, newline="") as handle:
        rows = list(csv.DictReader(handle))
    assert int(rows[0]["p"]) == records[0].p
    assert float(rows[0]["ratio4"]) == pytest.approx(records[0].ratio4, rel=1e-14)


def test_export_json_round_trip(tmp_path):
    records = _sample_records()
    out = tmp_path / "ladder.json"
    export_records(records, "json", out)
    loaded = json.loads(out.read_text())
    assert len(loaded) == len(records)
    for row, rec in zip(loaded, records):
        assert row["p"] == rec.p and row["r"] == rec.r and row["t"] == rec.t
        assert row["l4_pow4"] == rec.l4_pow4
        for field in ("ratio4", "limit", "abs_err", "rel_err"):
            assert row[field] == float(f"{getattr(rec, field):.15g}")


def test_export_rejects_empty_and_bad_format(tmp_path):
    with pytest.raises(ValueError):
        export_records([], "csv", tmp_path / "x.csv")
    with pytest.raises(ValueError):
        export_records(_sample_records(), "xml", tmp_path / "x.xml")


def test_export_surfaces_io_failure_with_destination():
    records = _sample_records()
    bad = "/nonexistent-dir/out.csv"
    with pytest.raises(OSError, match="nonexistent-dir"):
        export_records(records, "csv", bad)
