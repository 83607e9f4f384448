"""Tests for Chebyshev grids, embeddings and the scaled cosine transforms."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from vp_wavelets.basis import VpParameterError
from vp_wavelets.basis.chebgrid import (
    cheb_p,
    cheb_series,
    dct2_scaled,
    dct3_scaled,
    gauss_cheb_quadrature,
    make_embedding,
    make_grid,
    y_nodes,
)


def naive_matrix(n, naive_p):
    nodes = make_grid(n).nodes
    return np.array([[naive_p(r, x) for r in range(n)] for x in nodes])


class TestMakeGrid:
    """Test the node set X_n."""

    def test_three_nodes(self):
        """Test the closed form for n=3."""
        grid = make_grid(3)
        assert_allclose(grid.nodes, [math.sqrt(3) / 2, 0.0, -math.sqrt(3) / 2], atol=1e-15)

    def test_single_node(self):
        """Test that n=1 gives the midpoint."""
        assert_allclose(make_grid(1).nodes, [0.0], atol=1e-16)

    def test_two_nodes(self):
        """Test n=2 against ±√2/2."""
        assert_allclose(make_grid(2).nodes, [math.sqrt(0.5), -math.sqrt(0.5)], rtol=1e-15)

    @pytest.mark.parametrize("n", [1, 2, 5, 64, 243])
    def test_invariants(self, n):
        """Test ordering, open interval and angle monotonicity."""
        grid = make_grid(n)
        assert grid.nodes.shape == (n,)
        assert np.all(np.diff(grid.nodes) < 0)
        assert np.all(np.abs(grid.nodes) < 1)
        assert np.all(np.diff(grid.angles) > 0)
        assert 0 < grid.angles[0] and grid.angles[-1] < math.pi

    def test_rejects_zero(self):
        """Test that an empty grid is refused."""
        with pytest.raises(VpParameterError):
            make_grid(0)

    def test_arrays_are_read_only(self):
        """Test that shared cached grids cannot be mutated."""
        grid = make_grid(7)
        with pytest.raises(ValueError):
            grid.nodes[0] = 2.0


class TestMakeEmbedding:
    """Test the embedding of X_n and Y_2n into X_3n."""

    def test_smallest_case(self):
        """Test n=1."""
        emb = make_embedding(1)
        assert_array_equal(emb.x_index, [2])
        assert_array_equal(emb.y_index, [1, 3])

    def test_two(self):
        """Test n=2, where Y is the complement of {2, 5}."""
        emb = make_embedding(2)
        assert_array_equal(emb.x_index, [2, 5])
        assert_array_equal(emb.y_index, [1, 3, 4, 6])

    @pytest.mark.parametrize("n", [1, 4, 27])
    def test_partition(self, n):
        """Test that the two index sets partition 1..3n."""
        emb = make_embedding(n)
        combined = np.sort(np.concatenate([emb.x_index, emb.y_index]))
        assert_array_equal(combined, np.arange(1, 3 * n + 1))
        assert np.all(np.diff(emb.y_index) > 0)

    @pytest.mark.parametrize("n", [2, 9, 81])
    def test_nodes_coincide(self, n):
        """Test that X_3n restricted to the X slots equals X_n."""
        fine = make_grid(3 * n).nodes[make_embedding(n).x_slots]
        assert_allclose(fine, make_grid(n).nodes, rtol=0, atol=4e-16)

    def test_y_nodes(self):
        """Test that Y_2n nodes come from X_3n in ascending index order."""
        fine = make_grid(6).nodes
        assert_array_equal(y_nodes(2), fine[[0, 2, 3, 5]])


class TestChebP:
    """Test the orthonormal Chebyshev polynomials."""

    def test_constant(self):
        """Test p_0 = √(1/π)."""
        assert cheb_p(0, 0.3) == pytest.approx(0.5641895835, rel=1e-9)

    def test_linear(self):
        """Test p_1(0.5) = 0.5 √(2/π)."""
        assert cheb_p(1, 0.5) == pytest.approx(0.3989422804, rel=1e-9)

    def test_zero_of_t4(self):
        """Test p_4 vanishes at cos(π/8)."""
        assert cheb_p(4, math.cos(math.pi / 8)) == pytest.approx(0.0, abs=1e-15)

    def test_vectorised(self, naive_p):
        """Test array input matches scalar evaluation."""
        xs = np.linspace(-1, 1, 11)
        assert_allclose(cheb_p(5, xs), naive_p(5, xs), atol=1e-15)

    def test_rejects_outside_domain(self):
        """Test |x| > 1 is refused."""
        with pytest.raises(VpParameterError):
            cheb_p(2, 1.01)

    def test_accepts_rounding_slack(self):
        """Test that values a hair beyond ±1 are clipped."""
        assert cheb_p(3, 1.0 + 1e-14) == pytest.approx(math.sqrt(2 / math.pi))

    def test_rejects_negative_degree(self):
        """Test a negative degree is refused."""
        with pytest.raises(VpParameterError):
            cheb_p(-1, 0.0)

    def test_series_matches_naive(self, naive_p, rng):
        """Test Clenshaw evaluation of mode vectors."""
        modes = rng.standard_normal(12)
        xs = rng.uniform(-1, 1, 20)
        expected = sum(modes[j] * naive_p(j, xs) for j in range(12))
        assert_allclose(cheb_series(modes, xs), expected, atol=1e-13)


class TestQuadrature:
    """Test the Gauss-Chebyshev rule."""

    def test_weight_integral(self):
        """Test ∫ w = π."""
        assert gauss_cheb_quadrature(lambda x: 1.0, 5) == pytest.approx(math.pi, rel=1e-15)

    def test_second_moment(self):
        """Test ∫ x² w = π/2 with two nodes."""
        assert gauss_cheb_quadrature(lambda x: x**2, 2) == pytest.approx(math.pi / 2, rel=1e-14)

    def test_orthonormality(self, naive_p):
        """Test ∫ p_3² w = 1 with four nodes."""
        value = gauss_cheb_quadrature(lambda x: naive_p(3, x) ** 2, 4)
        assert value == pytest.approx(1.0, rel=1e-13)


class TestDiscreteIdentities:
    """Test discrete orthogonality and aliasing on X_n."""

    @pytest.mark.parametrize("n", [4, 9, 27])
    def test_discrete_orthogonality(self, n, naive_p):
        """Test (π/n) Σ_k p_r(x_k) p_s(x_k) = δ_rs."""
        p = naive_matrix(n, naive_p)
        assert_allclose(math.pi / n * p.T @ p, np.eye(n), atol=1e-12)

    @pytest.mark.parametrize("n", [4, 9])
    def test_aliasing(self, n, naive_p):
        """Test p_n = 0, p_2n = -√2 p_0 and p_{2n±s} = -p_s on X_n."""
        x = make_grid(n).nodes
        assert_allclose(naive_p(n, x), 0.0, atol=1e-12)
        assert_allclose(naive_p(2 * n, x), -math.sqrt(2) * naive_p(0, x), atol=1e-12)
        for s in range(1, n):
            assert_allclose(naive_p(2 * n + s, x), -naive_p(s, x), atol=1e-12)
            assert_allclose(naive_p(2 * n - s, x), -naive_p(s, x), atol=1e-12)


class TestScaledDct:
    """Test the DCT primitives against naive summation."""

    @pytest.mark.parametrize("n", [1, 5, 16])
    def test_constant_vector(self, n):
        """Test that ones map to √π e_0 under scale π/n."""
        expected = np.zeros(n)
        expected[0] = math.sqrt(math.pi)
        assert_allclose(dct2_scaled(np.ones(n), math.pi / n), expected, atol=1e-13)

    def test_unit_vector(self, naive_p):
        """Test e_1 with scale 1 gives p_r(x_1)."""
        n = 6
        v = np.zeros(n)
        v[0] = 1.0
        x1 = make_grid(n).nodes[0]
        expected = [naive_p(r, x1) for r in range(n)]
        assert_allclose(dct2_scaled(v, 1.0), expected, atol=1e-15)

    @pytest.mark.parametrize("n", [4, 8, 27, 128])
    def test_dct2_matches_naive(self, n, rng, naive_p):
        """Test analysis against the O(n²) sum."""
        v = rng.standard_normal(n)
        expected = 0.37 * naive_matrix(n, naive_p).T @ v
        scale = np.max(np.abs(expected))
        assert_allclose(dct2_scaled(v, 0.37), expected, rtol=1e-12, atol=1e-12 * scale)

    @pytest.mark.parametrize("n", [4, 27, 128])
    def test_dct3_matches_naive(self, n, rng, naive_p):
        """Test synthesis against the O(n²) sum."""
        alpha = rng.standard_normal(n)
        expected = naive_matrix(n, naive_p) @ alpha
        scale = np.max(np.abs(expected))
        assert_allclose(dct3_scaled(alpha), expected, rtol=1e-12, atol=1e-12 * scale)

    def test_constant_synthesis(self):
        """Test √π e_0 synthesises to ones."""
        alpha = np.zeros(9)
        alpha[0] = math.sqrt(math.pi)
        assert_allclose(dct3_scaled(alpha), np.ones(9), rtol=1e-14)

    def test_single_mode(self, naive_p):
        """Test e_1 synthesises p_1 at the nodes."""
        alpha = np.zeros(7)
        alpha[1] = 1.0
        assert_allclose(dct3_scaled(alpha), naive_p(1, make_grid(7).nodes), atol=1e-15)

    def test_round_trip(self, rng):
        """Test dct3 ∘ dct2(·, π/n) is the identity."""
        v = rng.standard_normal(27)
        assert_allclose(dct3_scaled(dct2_scaled(v, math.pi / 27)), v, rtol=1e-12, atol=1e-13)

    def test_deterministic(self, rng):
        """Test repeated calls are bit-identical."""
        v = rng.standard_normal(81)
        assert_array_equal(dct2_scaled(v, 1.0), dct2_scaled(v, 1.0))

    def test_rejects_empty(self):
        """Test an empty vector is refused."""
        with pytest.raises(VpParameterError):
            dct2_scaled([], 1.0)
