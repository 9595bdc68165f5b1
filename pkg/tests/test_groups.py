import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linear_sum_assignment

from framescope import groups, linalg
from framescope.errors import ShapeError
from framescope.frames import cross_gram, frame_bounds, standard_basis

from conftest import crandn


def naive_dft(x):
    n = len(x)
    return np.array([sum(x[k] * np.exp(-2j * np.pi * k * j / n) for k in range(n)) for j in range(n)])


def matched_gap(a, b):
    cost = np.abs(np.asarray(a)[:, None] - np.asarray(b)[None, :])
    r, c = linear_sum_assignment(cost)
    return cost[r, c].max()


class TestTranslationSystem:
    def test_delta_gives_standard_basis(self):
        np.testing.assert_array_equal(groups.translation_system(groups.CyclicWindow.delta(5)).vectors,
                                      standard_basis(5).vectors)

    def test_shift_definition(self, rng):
        chi = crandn(rng, 6)
        sys = groups.translation_system(chi)
        t = groups.shift_matrix(6)
        for g in range(6):
            np.testing.assert_allclose(sys[g], np.linalg.matrix_power(t, g) @ chi, atol=1e-15)
            for x in range(6):
                assert sys[g][x] == chi[(x - g) % 6]

    def test_constant_window_rank_one(self):
        b = frame_bounds(groups.translation_system(np.ones(4)))
        assert b.lower == pytest.approx(0, abs=1e-12) and b.upper == pytest.approx(16)

    def test_gram_is_circulant_and_commutes(self, rng):
        chi, eta = crandn(rng, 7), crandn(rng, 7)
        g = cross_gram(groups.translation_system(chi), groups.translation_system(eta))
        for k in range(7):
            np.testing.assert_allclose(g[k], np.roll(g[0], k), atol=1e-12)
        t = groups.shift_matrix(7)
        np.testing.assert_allclose(g @ t, t @ g, atol=1e-12)


class TestDFT:
    def test_delta(self):
        np.testing.assert_allclose(groups.dft(groups.CyclicWindow.delta(8)).samples, np.ones(8))

    def test_constant(self):
        out = groups.dft(np.ones(8)).samples
        np.testing.assert_allclose(out, 8 * groups.CyclicWindow.delta(8).samples, atol=1e-12)

    def test_naive_oracle(self, rng):
        x = crandn(rng, 9)
        np.testing.assert_allclose(groups.dft(x).samples, naive_dft(x), atol=1e-11)
        np.testing.assert_allclose(groups.dft_matrix(9) @ x, naive_dft(x), atol=1e-11)

    def test_round_trip_and_plancherel(self, rng):
        x = crandn(rng, 16)
        np.testing.assert_allclose(groups.idft(groups.dft(x)).samples, x, atol=1e-13)
        assert np.sum(np.abs(groups.dft(x).samples) ** 2) == pytest.approx(16 * np.sum(np.abs(x) ** 2))


class TestBracket:
    def test_delta_bracket_is_one(self):
        d = groups.CyclicWindow.delta(6)
        np.testing.assert_allclose(groups.bracket(d, d).values, np.ones(6))

    def test_dft_diagonalizes_gram(self, rng):
        chi, eta = crandn(rng, 8), crandn(rng, 8)
        g = cross_gram(groups.translation_system(chi), groups.translation_system(eta))
        f = groups.dft_matrix(8)
        diag = f @ g @ np.linalg.inv(f)
        assert np.abs(diag - np.diag(np.diag(diag))).max() <= 1e-10 * np.abs(diag).max()
        b = groups.bracket(chi, eta).values
        assert matched_gap(np.diag(diag), b) <= 1e-10 * np.abs(b).max()
        assert matched_gap(np.linalg.eigvals(g), b) <= 1e-10 * np.abs(b).max()

    def test_correlation_reconstruction(self, rng):
        chi, eta = crandn(rng, 10), crandn(rng, 10)
        direct = groups.correlation(chi, eta)
        for g in range(10):
            shifted = np.roll(eta, g)
            assert direct[g] == pytest.approx(np.vdot(shifted, chi))
        np.testing.assert_allclose(groups.correlation_from_bracket(groups.bracket(chi, eta)), direct, atol=1e-12)

    def test_length_mismatch(self):
        with pytest.raises(ShapeError):
            groups.bracket(np.ones(3), np.ones(4))

    def test_upper_bound_is_peak_power(self, rng):
        chi = crandn(rng, 12)
        b = groups.translation_bounds(chi)
        dense = frame_bounds(groups.translation_system(chi))
        assert b.upper == pytest.approx(dense.upper, rel=1e-10)
        assert b.lower == pytest.approx(dense.lower, rel=1e-8, abs=1e-10)

    def test_vanishing_bin_is_not_frame(self):
        # 1 + (-1)^x is supported on bins 0 and N/2 only
        x = np.ones(8) + np.array([1, -1] * 4)
        assert abs(groups.dft(x).samples[1]) < 1e-12
        assert not groups.translation_bounds(x).is_frame
        assert frame_bounds(groups.translation_system(x)).lower == pytest.approx(0, abs=1e-12)


class TestAnalysis:
    def test_delta_pair(self):
        d = groups.CyclicWindow.delta(4)
        res = groups.analyze_group(np.ones(4), d, d)
        assert res.gram_norm_bracket == pytest.approx(1) and res.gram_norm_dense == pytest.approx(1)
        assert res.radius_eigen == pytest.approx(1)

    def test_radius_bound(self, rng):
        chi, eta, m = crandn(rng, 16), crandn(rng, 16), crandn(rng, 16)
        res = groups.analyze_group(m, chi, eta)
        assert res.norm_gap <= 1e-10
        assert res.radius_eigen <= res.radius_bound * (1 + 1e-10)

    def test_symbol_length(self):
        with pytest.raises(ShapeError):
            groups.multiplier_radius_bound_group(np.ones(3), np.ones(4), np.ones(4))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 32), st.integers(0, 2**32 - 1))
def test_bracket_norm_matches_dense(n, seed):
    g = np.random.default_rng(seed)
    chi, eta = crandn(g, n), crandn(g, n)
    dense = linalg.operator_norm(cross_gram(groups.translation_system(chi), groups.translation_system(eta)))
    assert abs(groups.gram_norm_via_bracket(chi, eta) - dense) <= 1e-10 * max(dense, 1e-300)
