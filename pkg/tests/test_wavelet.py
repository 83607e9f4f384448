"""Tests for interpolating and orthogonal wavelets."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from vp_wavelets.basis import (
    OrthoWaveletCoeffs,
    VpParameterError,
    VpParams,
    WaveletCoeffs,
    check_vanishing_moments,
    eval_ortho_wavelet,
    eval_wavelet,
    eval_wavelet_coeffs,
    make_grid,
    ortho_wavelet_energy,
    rho,
    rho_table,
    scaling_matrix,
    v_coeff,
    v_values,
    wavelet_matrix,
    wavelet_to_ortho,
    weighted_norm,
    y_nodes,
)
from vp_wavelets.basis.chebgrid import gauss_cheb_quadrature
from vp_wavelets.basis.scaling import ortho_project
from vp_wavelets.basis.wavelet import cross_matrix, wavelet_modes

DELTA_PARAMS = [(3, 1), (3, 2), (9, 1), (9, 6), (9, 8), (27, 1), (27, 18), (27, 26)]


def ortho_wavelet_matrix(params, xs):
    n = params.n
    return np.stack([eval_ortho_wavelet(params, r, xs) for r in range(n, 3 * n)], axis=1)


class TestEvalWavelet:
    """Test the interpolating wavelets."""

    @pytest.mark.parametrize("n,m", DELTA_PARAMS)
    def test_delta_on_y(self, n, m):
        """Test ψ_{n,k}(y_h) = δ_hk."""
        p = VpParams(n, m)
        assert_allclose(wavelet_matrix(p, y_nodes(n)), np.eye(2 * n), atol=1e-11)

    @pytest.mark.parametrize("n,m", DELTA_PARAMS)
    def test_cross_interpolation(self, n, m):
        """Test ψ_{n,k}(x_h) = -Φ_{n,h}(y_k)."""
        p = VpParams(n, m)
        at_x = wavelet_matrix(p, make_grid(n).nodes)
        expected = -scaling_matrix(p, y_nodes(n)).T
        assert_allclose(at_x, expected, atol=1e-11)
        assert_allclose(cross_matrix(p), -expected, atol=1e-11)

    def test_single_function_matches_matrix(self, params, rng):
        """Test eval_wavelet agrees with the matrix form."""
        xs = rng.uniform(-1, 1, 9)
        matrix = wavelet_matrix(params, xs)
        for k in (1, params.n, 2 * params.n):
            assert_allclose(eval_wavelet(params, k, xs), matrix[:, k - 1], atol=1e-13)

    def test_change_of_basis_example(self):
        """Test n=4, m=2, k=3 at 0.4 through the orthogonal expansion."""
        p = VpParams(4, 2)
        expected = sum(rho(p, r, 3) * eval_ortho_wavelet(p, r, 0.4) for r in range(4, 12))
        assert eval_wavelet(p, 3, 0.4) == pytest.approx(expected, abs=1e-10)

    def test_space_orthogonality(self, quad_nodes):
        """Test ⟨Φ_{n,h}, ψ_{n,k}⟩ = 0 at n=9, m=4."""
        p = VpParams(9, 4)
        nodes, weight = quad_nodes(36)
        cross_gram = weight * scaling_matrix(p, nodes).T @ wavelet_matrix(p, nodes)
        assert np.max(np.abs(cross_gram)) <= 1e-10

    @pytest.mark.parametrize("n", [9, 27, 81])
    def test_sup_norm_stays_bounded(self, n):
        """Test max |ψ_{n,k}| lies in [0.5, 3] for m = ⌊0.7n⌋."""
        p = VpParams(n, int(0.7 * n))
        xs = np.concatenate([np.cos(np.linspace(0, math.pi, 4000)), y_nodes(n)])
        peaks = np.max(np.abs(wavelet_matrix(p, xs)), axis=0)
        assert np.all(peaks >= 0.5)
        assert np.all(peaks <= 3.0)

    @pytest.mark.parametrize("k", [0, 9])
    def test_rejects_bad_index(self, k):
        """Test k outside 1..2n is refused."""
        with pytest.raises(VpParameterError):
            eval_wavelet(VpParams(4, 2), k, 0.0)


class TestVanishingMoments:
    """Test the wavelet moments."""

    def test_small_case(self):
        """Test n=4, m=2, k=1."""
        assert check_vanishing_moments(VpParams(4, 2), 1) <= 1e-10

    @pytest.mark.parametrize("n,m", [(9, 3), (27, 18)])
    def test_all_wavelets(self, n, m):
        """Test every ψ_{n,k} annihilates degrees up to n-m."""
        p = VpParams(n, m)
        worst = max(check_vanishing_moments(p, k) for k in range(1, 2 * n + 1))
        assert worst <= 1e-10

    def test_next_moment_does_not_vanish(self):
        """Test degree n-m+1 is not annihilated, so the check has power."""
        p = VpParams(4, 2)
        worst = max(check_vanishing_moments(p, k, max_degree=3) for k in range(1, 9))
        assert worst > 1e-6


class TestOrthoWavelet:
    """Test the orthogonal wavelet basis."""

    @pytest.mark.parametrize("r,expected", [(4, 1.0), (5, 0.625), (6, 1.0), (10, 1.0), (11, 0.625)])
    def test_v_values(self, r, expected):
        """Test v for n=4, m=2."""
        assert v_coeff(VpParams(4, 2), r) == expected

    def test_v_rejects_bad_index(self):
        """Test r outside n..3n-1 is refused."""
        with pytest.raises(VpParameterError):
            v_coeff(VpParams(4, 2), 3)

    def test_middle_band_is_chebyshev(self, naive_p, rng):
        """Test ψ⊥_r = p_r for n+m <= r <= 3n-m."""
        p = VpParams(9, 4)
        xs = rng.uniform(-1, 1, 10)
        for r in range(13, 24):
            assert_allclose(eval_ortho_wavelet(p, r, xs), naive_p(r, xs), atol=1e-12)

    def test_first_is_p_n(self, naive_p, rng):
        """Test ψ⊥_n = p_n."""
        p = VpParams(9, 4)
        xs = rng.uniform(-1, 1, 10)
        assert_allclose(eval_ortho_wavelet(p, 9, xs), naive_p(9, xs), atol=1e-13)

    def test_gram_example(self):
        """Test ⟨ψ⊥_5, ψ⊥_5⟩ = 0.625 for n=4, m=2."""
        p = VpParams(4, 2)
        value = gauss_cheb_quadrature(lambda x: eval_ortho_wavelet(p, 5, x) ** 2, 16)
        assert value == pytest.approx(0.625, rel=1e-12)

    def test_gram_matrix(self, params, quad_nodes):
        """Test ⟨ψ⊥_r, ψ⊥_s⟩ = δ_rs v_r."""
        nodes, weight = quad_nodes(4 * params.n)
        values = ortho_wavelet_matrix(params, nodes)
        gram = weight * values.T @ values
        assert_allclose(gram, np.diag(v_values(params)), atol=1e-10)

    def test_membership(self, params):
        """Test every ψ⊥_r is orthogonal to each Φ⊥_{n,s}."""
        n = params.n
        for i in range(2 * n):
            modes = wavelet_modes(params, np.eye(2 * n)[i])
            assert_allclose(ortho_project(params, modes), 0.0, atol=1e-12)


class TestRho:
    """Test the change-of-basis coefficients."""

    def test_first_row(self, naive_p):
        """Test ρ_{n,k} = (π/3n) p_n(y_k)."""
        p = VpParams(4, 2)
        y = y_nodes(4)
        for k in range(1, 9):
            assert rho(p, 4, k) == pytest.approx(math.pi / 12 * naive_p(4, y[k - 1]), abs=1e-14)

    def test_middle_row(self, naive_p):
        """Test ρ_{2n,k} = (π/3n)(p_2n(y_k) + √2 p_0(y_k))."""
        p = VpParams(4, 2)
        y = y_nodes(4)
        for k in range(1, 9):
            expected = math.pi / 12 * (naive_p(8, y[k - 1]) + math.sqrt(2) * naive_p(0, y[k - 1]))
            assert rho(p, 8, k) == pytest.approx(expected, abs=1e-14)

    def test_expansion(self, params, rng):
        """Test Σ_r ρ_{r,k} ψ⊥_r = ψ_{n,k}."""
        xs = rng.uniform(-1, 1, 20)
        expanded = ortho_wavelet_matrix(params, xs) @ rho_table(params)
        assert_allclose(expanded, wavelet_matrix(params, xs), atol=1e-10)

    def test_table_is_read_only(self):
        """Test the cached table cannot be mutated."""
        table = rho_table(VpParams(4, 2))
        assert table.shape == (8, 8)
        with pytest.raises(ValueError):
            table[0, 0] = 1.0

    def test_rejects_bad_indices(self):
        """Test r and k are range-checked."""
        p = VpParams(4, 2)
        with pytest.raises(VpParameterError):
            rho(p, 12, 1)
        with pytest.raises(VpParameterError):
            rho(p, 4, 9)


class TestWaveletCoeffs:
    """Test evaluation of wavelet coefficient vectors."""

    def test_unit_vector(self):
        """Test b = e_k evaluates to one at y_k."""
        p = VpParams(9, 4)
        b = np.zeros(18)
        b[4] = 1.0
        value = eval_wavelet_coeffs(WaveletCoeffs(params=p, b=b), y_nodes(9)[4])
        assert value == pytest.approx(1.0, abs=1e-11)

    def test_zero(self):
        """Test b = 0 evaluates to zero."""
        coeffs = WaveletCoeffs(params=VpParams(9, 4), b=np.zeros(18))
        assert_allclose(coeffs.evaluate(np.linspace(-1, 1, 9)), 0.0)

    def test_matches_orthogonal_expansion(self, params, rng):
        """Test the direct and orthogonal evaluations agree."""
        coeffs = WaveletCoeffs(params=params, b=rng.standard_normal(2 * params.n))
        xs = np.linspace(-1, 1, 33)
        assert_allclose(coeffs.evaluate(xs), wavelet_to_ortho(coeffs).evaluate(xs), atol=1e-10)
        assert_allclose(coeffs.evaluate(xs), wavelet_matrix(params, xs) @ coeffs.b, atol=1e-12)

    def test_energy_matches_quadrature(self, rng):
        """Test Σ d_r² v_r equals the weighted L² norm squared."""
        p = VpParams(9, 4)
        coeffs = WaveletCoeffs(params=p, b=rng.standard_normal(18))
        energy = weighted_norm(coeffs.evaluate, 2.0, quad_order=64) ** 2
        assert ortho_wavelet_energy(wavelet_to_ortho(coeffs)) == pytest.approx(energy, rel=1e-10)

    def test_rejects_length_mismatch(self):
        """Test b must have length 2n."""
        with pytest.raises(VpParameterError):
            WaveletCoeffs(params=VpParams(4, 2), b=np.zeros(4))
        with pytest.raises(VpParameterError):
            OrthoWaveletCoeffs(params=VpParams(4, 2), d=np.zeros(9))
