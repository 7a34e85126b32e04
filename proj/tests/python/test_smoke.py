import math

import pytest

import ucnrot


def test_ground_level_near_1_4_peV():
    b = ucnrot.level(1)
    assert abs(ucnrot.joules_to_peV(b.E) - 1.4) / 1.4 < 0.02
    assert b.z_avg == pytest.approx(2.0 / 3.0 * b.H, rel=1e-14)


def test_airy_at_origin():
    ai, aip = ucnrot.airy(0.0)
    assert ai == pytest.approx(1.0 / (3 ** (2 / 3) * math.gamma(2 / 3)), rel=1e-14)
    assert aip == pytest.approx(-1.0 / (3 ** (1 / 3) * math.gamma(1 / 3)), rel=1e-14)


def test_first_zero():
    assert ucnrot.airy_zero(1) == pytest.approx(2.3381074104597674, rel=1e-15)
    assert abs(ucnrot.airy(-ucnrot.airy_zero(1))[0]) < 1e-14


def test_spectrum_is_increasing():
    levels = ucnrot.spectrum(20)
    energies = [b.E for b in levels]
    assert all(a < b for a, b in zip(energies, energies[1:]))


def test_quadrature_matches_closed_form():
    b = ucnrot.level(5)
    assert ucnrot.mean_height_quadrature(b) == pytest.approx(b.z_avg, rel=1e-8)


def test_relative_shift_paper_profile():
    rel = ucnrot.relative_shift(10.0, profile="paper")
    assert rel == pytest.approx(-3.4e-5, rel=0.03)
    for n in (1, 7, 40):
        assert ucnrot.rotation_shift(n, 10.0, profile="paper")["relative"] == pytest.approx(rel, rel=1e-12)


def test_crossover_with_anchors():
    c = ucnrot.crossover(paper_anchors=True)
    assert abs(c["n_star"] - 20139) <= 1
    assert c["H_star"] == pytest.approx(12e-3, rel=0.03)


def test_no_crossover_at_rest():
    c = ucnrot.crossover(u1=0.0)
    assert "n_star" not in c


def test_fd_ground_state():
    (lam,) = ucnrot.fd_eigenvalues(1, points=4000)
    assert lam == pytest.approx(ucnrot.airy_zero(1), abs=1e-3)


def test_budget_has_no_flags():
    rows = ucnrot.budget(1, 10.0)
    assert not any(r["flagged"] for r in rows)


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        ucnrot.level(0)
    with pytest.raises(ValueError):
        ucnrot.constants("nonsense")
