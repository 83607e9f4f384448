"""Tests for the VP filter, kernel, mean and Lebesgue estimates."""

import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from vp_wavelets.basis import VpParameterError, VpParams
from vp_wavelets.basis.chebgrid import gauss_cheb_quadrature, make_grid
from vp_wavelets.basis.vpkernel import (
    filter_coeffs,
    kernel_sum,
    kernel_trig,
    lebesgue_constant_estimate,
    mu,
    sigma,
)


class TestVpParams:
    """Test parameter validation."""

    def test_derived_degrees(self):
        """Test low and high degrees."""
        p = VpParams(9, 4)
        assert p.low_degree == 5
        assert p.high_degree == 12
        assert p.tripled() == VpParams(27, 4)

    @pytest.mark.parametrize("n,m", [(4, 0), (4, 4), (4, 5), (1, 1), (5, -1)])
    def test_rejects_invalid_pairs(self, n, m):
        """Test 0 < m < n is enforced."""
        with pytest.raises(VpParameterError):
            VpParams(n, m)

    def test_rejects_non_integers(self):
        """Test floats and bools are refused."""
        with pytest.raises(VpParameterError):
            VpParams(4.0, 2)
        with pytest.raises(VpParameterError):
            VpParams(4, True)

    def test_numpy_integers_normalised(self):
        """Test numpy integers hash like plain ints."""
        assert hash(VpParams(np.int64(9), np.int32(3))) == hash(VpParams(9, 3))


class TestMu:
    """Test the filter coefficients."""

    @pytest.mark.parametrize(
        "r,expected",
        [(0, 1.0), (2, 1.0), (3, 0.75), (4, 0.5), (5, 0.25), (6, 0.0), (40, 0.0)],
    )
    def test_values(self, r, expected):
        """Test the piecewise definition for n=4, m=2."""
        assert mu(VpParams(4, 2), r) == expected

    def test_rejects_negative_degree(self):
        """Test r < 0 is refused."""
        with pytest.raises(VpParameterError):
            mu(VpParams(4, 2), -1)

    def test_filter_vector(self, params):
        """Test the cached vector is nonincreasing with μ_n = 1/2."""
        fc = filter_coeffs(params)
        assert fc.mu.shape == (params.n + params.m,)
        assert np.all(np.diff(fc.mu) <= 0)
        assert fc.mu[params.n] == 0.5
        assert not fc.mu.flags.writeable

    def test_partition_of_unity(self, params):
        """Test μ_r + μ_{2n-r} = 1 on the ramp."""
        n, m = params.n, params.m
        for r in range(n - m + 1, n + m):
            assert mu(params, r) + mu(params, 2 * n - r) == pytest.approx(1.0, abs=1e-15)


class TestKernel:
    """Test the two kernel forms."""

    def test_naive_value(self, naive_kernel):
        """Test n=4, m=2 at (0.3, -0.2) against the term-by-term sum."""
        expected = naive_kernel(4, 2, 0.3, -0.2)
        assert kernel_sum(VpParams(4, 2), 0.3, -0.2) == pytest.approx(expected, rel=1e-13)

    def test_diagonal_at_nodes(self, params):
        """Test v(x_k, x_k) = n/π and v(x_1, x_2) = 0."""
        x = make_grid(params.n).nodes
        assert kernel_sum(params, x[0], x[0]) == pytest.approx(params.n / math.pi, rel=1e-12)
        assert kernel_sum(params, x[0], x[1]) == pytest.approx(0.0, abs=1e-11)

    def test_trig_matches_sum(self):
        """Test n=16, m=8 at (0.3, -0.2)."""
        p = VpParams(16, 8)
        assert kernel_trig(p, 0.3, -0.2) == pytest.approx(kernel_sum(p, 0.3, -0.2), rel=1e-10)

    @pytest.mark.parametrize("n,m", [(16, 8), (27, 1), (9, 8)])
    def test_cross_form_on_grid(self, n, m):
        """Test both forms agree on a grid with coincident and reflected pairs."""
        p = VpParams(n, m)
        angles = np.linspace(0.0, math.pi, 200)
        xs = np.cos(angles)
        xx, yy = np.meshgrid(xs, xs, indexing="ij")
        assert_allclose(kernel_trig(p, xx, yy), kernel_sum(p, xx, yy), rtol=0, atol=1e-8)
        assert_allclose(kernel_trig(p, xs, xs[::-1]), kernel_sum(p, xs, xs[::-1]), atol=1e-8)

    def test_removable_singularities(self):
        """Test x = y, x = y = 1 and x = y = -1 take the filtered sum."""
        p = VpParams(9, 4)
        for x in (0.4, 1.0, -1.0):
            assert kernel_trig(p, x, x) == pytest.approx(kernel_sum(p, x, x), rel=1e-12)

    def test_symmetry(self, rng):
        """Test both forms are symmetric in (x, y)."""
        p = VpParams(27, 18)
        x, y = rng.uniform(-1, 1, (2, 100))
        assert_allclose(kernel_sum(p, x, y), kernel_sum(p, y, x), atol=1e-12)
        assert_allclose(kernel_trig(p, x, y), kernel_trig(p, y, x), atol=1e-12)

    def test_reproduces_polynomials(self, params, rng):
        """Test ∫ v(x, y) P(y) w(y) dy = P(x) for P of degree n-m."""
        coeffs = rng.standard_normal(params.low_degree + 1)
        poly = np.polynomial.Polynomial(coeffs)
        for x in rng.uniform(-1, 1, 5):
            integral = gauss_cheb_quadrature(
                lambda y: kernel_sum(params, x, y) * poly(y), 2 * params.n
            )
            assert integral == pytest.approx(poly(x), abs=1e-10 * (1 + np.sum(np.abs(coeffs))))

    def test_rejects_outside_domain(self):
        """Test |x| > 1 is refused by both forms."""
        p = VpParams(4, 2)
        with pytest.raises(VpParameterError):
            kernel_sum(p, 1.5, 0.0)
        with pytest.raises(VpParameterError):
            kernel_trig(p, 0.0, -1.2)


class TestSigma:
    """Test the VP mean used as an oracle."""

    def test_reproduces_low_degree(self, rng):
        """Test σ x² = x² for n=6, m=2."""
        op = sigma(VpParams(6, 2), lambda x: x**2)
        xs = rng.uniform(-1, 1, 50)
        assert_allclose(op(xs), xs**2, atol=1e-10)

    def test_annihilates_beyond_filter(self, naive_p, rng):
        """Test σ p_{n+m} = 0."""
        p = VpParams(6, 2)
        op = sigma(p, lambda x: naive_p(8, x))
        assert_allclose(op(rng.uniform(-1, 1, 20)), 0.0, atol=1e-12)

    def test_damps_ramp(self, naive_p, rng):
        """Test σ p_r = μ_r p_r inside the ramp."""
        p = VpParams(6, 2)
        xs = rng.uniform(-1, 1, 20)
        for r in (5, 6, 7):
            op = sigma(p, lambda x, r=r: naive_p(r, x))
            assert_allclose(op(xs), mu(p, r) * naive_p(r, xs), atol=1e-12)

    def test_scalar_input(self):
        """Test scalar evaluation returns a float."""
        value = sigma(VpParams(6, 2), lambda x: x)(0.25)
        assert isinstance(value, float)
        assert value == pytest.approx(0.25, abs=1e-12)


class TestLebesgue:
    """Test the grid estimate of the Lebesgue constant."""

    def test_small_case(self):
        """Test n=2, m=1 is at least one."""
        value = lebesgue_constant_estimate(VpParams(2, 1))
        assert math.isfinite(value) and value >= 1.0

    def test_log_growth_for_unit_m(self):
        """Test the increment per tripling matches (2/π) ln 3."""
        sizes = [9, 27, 81, 243]
        values = [lebesgue_constant_estimate(VpParams(n, 1)) for n in sizes]
        increment = 2 / math.pi * math.log(3)
        for before, after in zip(values, values[1:]):
            assert after - before == pytest.approx(increment, rel=0.15)

    def test_log_growth_at_quadrupled_sizes(self):
        """Test n = 16, 64, 256 with m=1 grow by (2/π) ln 4 per step."""
        values = [lebesgue_constant_estimate(VpParams(n, 1)) for n in (16, 64, 256)]
        increment = 2 / math.pi * math.log(4)
        for before, after in zip(values, values[1:]):
            assert after - before == pytest.approx(increment, rel=0.15)

    def test_bounded_for_fixed_ratio(self):
        """Test m = ⌊0.7 n⌋ keeps the estimate within 10% across n."""
        values = [lebesgue_constant_estimate(VpParams(n, int(0.7 * n))) for n in (16, 64, 256)]
        assert max(values) < 1.1 * min(values)
        assert values[-1] < 1 + 4 * math.pi

    def test_unit_m_exceeds_fixed_ratio(self):
        """Test m=1 gives the larger constant at n=64."""
        unit = lebesgue_constant_estimate(VpParams(64, 1))
        assert unit > lebesgue_constant_estimate(VpParams(64, 44))
