import math

import mpmath as mp
import numpy as np
import pytest

from zetaint.errors import CountMismatch, DomainError, NotMonotone, ParseError
from zetaint.zeros import (
    Source,
    ZeroOrdinate,
    ZeroTable,
    cached_zero_table,
    find_zeros_up_to,
    gram_points,
    load_zero_table,
    refine_brackets,
    save_zero_table,
    verify_zero_count,
)
from zetaint.zeta import hardy_z_values, riemann_siegel_theta

mp.mp.dps = 25


@pytest.fixture(scope="module")
def zeros100():
    return find_zeros_up_to(100.0)


def test_first_29_against_mpmath(zeros100):
    assert len(zeros100) == 29
    ref = np.array([float(mp.zetazero(k).imag) for k in range(1, 30)])
    assert np.max(np.abs(zeros100.t - ref)) < 1e-10


def test_below_first_zero():
    assert len(find_zeros_up_to(10.0)) == 0
    assert len(find_zeros_up_to(14.0)) == 0


def test_table_to_1000(zeros1000):
    assert len(zeros1000) == 649
    assert verify_zero_count(zeros1000, 1000.0)
    assert abs(zeros1000.t[-1] - float(mp.zetazero(649).imag)) < 1e-10
    assert np.max(np.abs(hardy_z_values(zeros1000.t))) < 1e-9


def test_domain():
    with pytest.raises(DomainError):
        find_zeros_up_to(2e5)
    with pytest.raises(DomainError):
        ZeroOrdinate(-1.0)
    with pytest.raises(DomainError):
        ZeroOrdinate(20.0, sigma=0.7)
    ZeroOrdinate(20.0, sigma=0.7, source=Source.hypothetical)


def test_gram_points_solve_theta():
    g = gram_points(20.0, 300.0)
    n = riemann_siegel_theta(g) / math.pi
    assert np.max(np.abs(n - np.round(n))) < 1e-9
    assert np.all(np.diff(np.round(n)) == 1)


def test_refine_brackets_keeps_sign_change():
    a = np.array([14.0, 20.9, 24.9])
    b = np.array([14.2, 21.1, 25.1])
    r = refine_brackets(a, b, hardy_z_values(a), hardy_z_values(b), 1e-13)
    ref = [float(mp.zetazero(k).imag) for k in (1, 2, 3)]
    assert np.allclose(r, ref, atol=1e-11, rtol=0)


def test_count_check_detects_a_gap(zeros100):
    assert verify_zero_count(zeros100, 100.0)
    short = ZeroTable.from_array(np.delete(zeros100.t, 10), 100.0)
    assert not verify_zero_count(short, 100.0)


def test_table_must_increase():
    with pytest.raises(NotMonotone):
        ZeroTable((ZeroOrdinate(21.0), ZeroOrdinate(14.0)))


def test_round_trip(tmp_path, zeros100):
    p = tmp_path / "z.txt"
    save_zero_table(zeros100, p)
    back = load_zero_table(p)
    assert np.array_equal(back.t, zeros100.t)
    assert back.height == 100.0
    assert back.ordinates[0].source == Source.imported


def test_plain_list_format(tmp_path, zeros100):
    p = tmp_path / "zeros1"
    p.write_text("\n".join(f"{x:.9f}" for x in zeros100.t) + "\n")
    assert len(load_zero_table(p)) == 29


def test_parse_errors(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("14.134725142\n21.022039639\nfoo\n")
    with pytest.raises(ParseError) as e:
        load_zero_table(p)
    assert e.value.lineno == 3
    p.write_text("21.022039639\n14.134725142\n")
    with pytest.raises(NotMonotone):
        load_zero_table(p)


def test_count_mismatch(tmp_path, zeros100):
    p = tmp_path / "gap.txt"
    p.write_text("\n".join(repr(float(x)) for x in np.delete(zeros100.t, 5)) + "\n")
    with pytest.raises(CountMismatch):
        load_zero_table(p)
    p.write_text("# height=100\n" + "\n".join(repr(float(x)) for x in zeros100.t[:20]) + "\n")
    with pytest.raises(CountMismatch):
        load_zero_table(p)


def test_cache_reuse(tmp_path):
    a = cached_zero_table(60.0, tmp_path)
    files = list(tmp_path.glob("zeros_*.txt"))
    assert len(files) == 1
    b = cached_zero_table(50.0, tmp_path)  # served from the 60 file
    assert b.height == 60.0 and len(a) == len(b) == 13
