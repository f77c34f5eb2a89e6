import cmath
import math

import numpy as np
import pytest
from numpy.polynomial.legendre import leggauss

from catphase import (
    DomainError,
    NoConvergenceError,
    QuasiBellState,
    TruncationPolicy,
    build_spectrum,
    eval_one_mode_dist,
    eval_phase_dist,
    fourier_coefficient,
    make_preset,
    one_mode_coefficients,
    phase_mean_var,
    quadrature_phase_dist,
    trig_moments,
    wrap_angle,
)
from catphase.phasedist import _clenshaw_cos

from conftest import preset_state

TWO_PI = 2.0 * math.pi


def series_integral(f, lo, hi, n=400):
    """Gauss-Legendre integral of a smooth callable on [lo, hi]."""
    nodes, weights = leggauss(n)
    x = 0.5 * (hi - lo) * (nodes + 1.0) + lo
    return 0.5 * (hi - lo) * float(np.sum(weights * f(x)))


class TestFourierCoefficient:
    def test_zero_amplitude_gives_zero(self):
        state = QuasiBellState(0.0, 1.0, *_weights("even_cat"))
        for n in (1, 2, 5):
            assert fourier_coefficient(state, 0.0, n, "plus") == 0.0
            assert fourier_coefficient(state, 0.0, n, "minus") == 0.0

    def test_yurke_stoler_branches_coincide(self):
        state = preset_state("yurke_stoler_plus")
        for n in range(1, 8):
            for s in (-1.0, 0.0, 0.4):
                assert fourier_coefficient(state, s, n, "plus") == fourier_coefficient(
                    state, s, n, "minus"
                )

    def test_matches_quadrature_cosine_moment(self):
        # c_1 is the expectation of cos(phi - phi') under the quadrature
        # marginal; 128 uniform points resolve the ~18 harmonics exactly.
        state = preset_state("even_cat")
        c_1 = fourier_coefficient(state, 0.0, 1, "minus")
        grid = np.linspace(0.0, TWO_PI, 128, endpoint=False)
        density = quadrature_phase_dist(state, 0.0, "minus", grid)
        moment = float(np.mean(density * np.cos(grid))) * TWO_PI
        assert c_1 == pytest.approx(moment, abs=1e-6)

    def test_domain_errors(self):
        state = preset_state("even_cat")
        with pytest.raises(DomainError):
            fourier_coefficient(state, 1.0, 1, "plus")
        with pytest.raises(DomainError):
            fourier_coefficient(state, 0.0, 0, "plus")
        with pytest.raises(DomainError):
            fourier_coefficient(state, 0.0, 1, "both")


def _weights(kind):
    from catphase import PRESET_WEIGHTS

    return PRESET_WEIGHTS[kind]


class TestBuildSpectrum:
    def test_tiny_amplitudes_truncate_at_n_min(self):
        state = make_preset("even_cat", 0.01, 0.01)
        minus = build_spectrum(state, -1.0, "minus")
        plus = build_spectrum(state, -1.0, "plus")
        assert minus.n_used == 4
        assert plus.n_used == 5
        assert np.max(np.abs(minus.coeffs)) < 1e-4
        assert np.max(np.abs(plus.coeffs)) < 1e-4

    def test_unit_even_cat_decays(self):
        spectrum = build_spectrum(preset_state("even_cat"), 0.0, "minus")
        assert spectrum.coeffs[0] > spectrum.coeffs[1] > spectrum.coeffs[2]
        assert abs(spectrum.coeffs[-1]) < spectrum.tail_bound + 1e-300
        assert spectrum.tail_bound < TruncationPolicy().eps_tail

    def test_phi_prime_records_phase_combination(self):
        alpha = cmath.rect(1.0, 0.3)
        beta = cmath.rect(1.0, 1.1)
        state = QuasiBellState(alpha, beta, *_weights("even_cat"))
        assert build_spectrum(state, 0.0, "plus").phi_prime == pytest.approx(1.4)
        assert build_spectrum(state, 0.0, "minus").phi_prime == pytest.approx(0.8)

    def test_s_out_of_range(self):
        with pytest.raises(DomainError):
            build_spectrum(preset_state("even_cat"), 1.0, "minus")

    def test_no_convergence_when_cap_too_small(self):
        with pytest.raises(NoConvergenceError):
            build_spectrum(
                preset_state("even_cat"), 0.0, "minus", TruncationPolicy(n_min=2, n_max=3)
            )

    def test_policy_validation(self):
        with pytest.raises(ValueError):
            TruncationPolicy(eps_tail=0.0)
        with pytest.raises(ValueError):
            TruncationPolicy(n_min=8, n_max=4)


class TestEvalPhaseDist:
    def test_uniform_for_zero_spectrum(self):
        state = QuasiBellState(0.0, 1.0, *_weights("even_cat"))
        spectrum = build_spectrum(state, 0.0, "minus")
        phis = np.linspace(-10.0, 10.0, 101)
        assert np.allclose(eval_phase_dist(spectrum, phis), 1.0 / TWO_PI, atol=1e-16)

    def test_symmetric_about_reference(self, any_preset):
        spectrum = build_spectrum(preset_state(any_preset), 0.0, "minus")
        for delta in np.linspace(0.0, math.pi, 17):
            left = eval_phase_dist(spectrum, spectrum.phi_prime - delta)
            right = eval_phase_dist(spectrum, spectrum.phi_prime + delta)
            assert abs(left - right) < 1e-13

    def test_odd_cat_negative_at_s04(self):
        spectrum = build_spectrum(preset_state("odd_cat"), 0.4, "minus")
        grid = spectrum.phi_prime + np.linspace(-math.pi, math.pi, 361)
        assert float(np.min(eval_phase_dist(spectrum, grid))) < 0.0

    def test_normalized_over_any_period(self, any_preset):
        for s in (-1.0, 0.3):
            spectrum = build_spectrum(preset_state(any_preset), s, "plus")
            integral = series_integral(
                lambda p: eval_phase_dist(spectrum, p),
                spectrum.phi_prime - math.pi,
                spectrum.phi_prime + math.pi,
            )
            assert integral == pytest.approx(1.0, abs=1e-10)

    def test_clenshaw_matches_naive_summation(self):
        # A real spectrum first, then a long synthetic decaying one.
        state = QuasiBellState(math.sqrt(3.0), math.sqrt(3.0), *_weights("even_cat"))
        spectrum = build_spectrum(state, 0.4, "minus")
        phis = np.linspace(-math.pi, math.pi, 101)
        naive = np.array(
            [
                sum(c * math.cos((k + 1) * p) for k, c in enumerate(spectrum.coeffs))
                for p in phis
            ]
        )
        got = _clenshaw_cos(spectrum.coeffs, np.cos(phis))
        assert np.max(np.abs(got - naive)) < 1e-12

        rng = np.random.default_rng(31)
        coeffs = rng.uniform(-1.0, 1.0, 300) * 0.8 ** np.arange(300)
        phis = rng.uniform(-20.0, 20.0, 64)
        naive = np.array(
            [sum(c * math.cos((k + 1) * p) for k, c in enumerate(coeffs)) for p in phis]
        )
        assert np.max(np.abs(_clenshaw_cos(coeffs, np.cos(phis)) - naive)) < 1e-12

    def test_scalar_and_array_agree(self):
        spectrum = build_spectrum(preset_state("even_cat"), 0.0, "minus")
        phis = np.array([0.0, 0.5, 2.0])
        arr = eval_phase_dist(spectrum, phis)
        assert arr.shape == (3,)
        for k, p in enumerate(phis):
            assert arr[k] == eval_phase_dist(spectrum, float(p))


class TestPhaseCovariance:
    def test_coefficients_depend_on_moduli_only(self):
        base = build_spectrum(preset_state("even_cat"), 0.2, "minus")
        rotated_state = QuasiBellState(
            cmath.rect(1.0, 0.7), cmath.rect(1.0, -1.2), *_weights("even_cat")
        )
        rotated = build_spectrum(rotated_state, 0.2, "minus")
        assert np.allclose(rotated.coeffs, base.coeffs, rtol=1e-13, atol=1e-300)
        assert rotated.phi_prime == pytest.approx((-1.2 - 0.7) % TWO_PI, abs=1e-14)

    def test_distribution_shifts_rigidly(self):
        theta1, theta2 = 0.9, -0.4
        base = build_spectrum(preset_state("odd_cat"), 0.0, "plus")
        rotated = build_spectrum(
            QuasiBellState(
                cmath.rect(1.0, theta1), cmath.rect(1.0, theta2), *_weights("odd_cat")
            ),
            0.0,
            "plus",
        )
        offsets = np.linspace(-math.pi, math.pi, 41)
        assert np.allclose(
            eval_phase_dist(rotated, rotated.phi_prime + offsets),
            eval_phase_dist(base, base.phi_prime + offsets),
            rtol=1e-12,
            atol=1e-14,
        )


class TestInformationLoss:
    def test_spectra_depend_only_on_real_weight_overlap(self):
        # Three weight choices sharing Re(mu nu*) = 0.3 but with different
        # |mu|^2 - |nu|^2 and Im(mu nu*).
        target = 0.3
        candidates = [
            QuasiBellState(1.0, 1.0, math.sqrt(0.9), math.sqrt(0.1)),
            QuasiBellState(1.0, 1.0, math.sqrt(0.1), math.sqrt(0.9)),
            QuasiBellState(
                1.0,
                1.0,
                math.sqrt(0.5),
                math.sqrt(0.5) * cmath.exp(-1j * math.acos(target / 0.5)),
            ),
        ]
        for state in candidates:
            assert (state.mu * state.nu.conjugate()).real == pytest.approx(target, abs=1e-15)
        reference = build_spectrum(candidates[0], 0.0, "minus").coeffs
        for state in candidates[1:]:
            other = build_spectrum(state, 0.0, "minus").coeffs
            assert other.shape == reference.shape
            assert np.allclose(other, reference, rtol=1e-13, atol=1e-300)


class TestGenuineDistributionBound:
    def test_coefficients_below_unity_for_antinormal(self, any_preset):
        spectrum = build_spectrum(preset_state(any_preset), -1.0, "minus")
        assert np.max(np.abs(spectrum.coeffs)) < 1.0
        grid = spectrum.phi_prime + np.linspace(-math.pi, math.pi, 361)
        assert float(np.min(eval_phase_dist(spectrum, grid))) >= -1e-12


class TestOneMode:
    def test_zero_amplitude_uniform(self):
        state = QuasiBellState(0.0, 1.0, *_weights("even_cat"))
        spectrum = one_mode_coefficients(state, 0.0, 1)
        assert np.all(spectrum.cos_coeffs == 0.0)
        assert np.all(spectrum.sin_coeffs == 0.0)
        assert eval_one_mode_dist(spectrum, 1.23) == pytest.approx(1.0 / TWO_PI)

    def test_even_cat_has_no_sine_terms(self):
        spectrum = one_mode_coefficients(preset_state("even_cat"), 0.0, 1)
        assert np.all(spectrum.sin_coeffs == 0.0)
        delta = 0.8
        left = eval_one_mode_dist(spectrum, spectrum.phi_ref - delta)
        right = eval_one_mode_dist(spectrum, spectrum.phi_ref + delta)
        assert left == pytest.approx(right, rel=1e-13)

    def test_single_coherent_state_structure(self):
        # mu = 1, nu = 0: no interference, no imbalance suppression.
        state = QuasiBellState(1.0, 0.5, 1.0, 0.0)
        spectrum = one_mode_coefficients(state, 0.0, 1)
        assert np.all(spectrum.sin_coeffs == 0.0)
        assert np.all(spectrum.cos_coeffs[: spectrum.n_used - 1] > 0.0)

    def test_yurke_stoler_asymmetric(self):
        spectrum = one_mode_coefficients(preset_state("yurke_stoler_plus"), -1.0, 1)
        assert np.any(spectrum.sin_coeffs != 0.0)
        left = eval_one_mode_dist(spectrum, spectrum.phi_ref - math.pi / 4)
        right = eval_one_mode_dist(spectrum, spectrum.phi_ref + math.pi / 4)
        assert abs(left - right) > 1e-4

    def test_even_sine_moments_vanish(self):
        # Even-index sine moments of the one-mode density vanish even for
        # states whose odd sine terms are present.
        spectrum = one_mode_coefficients(preset_state("yurke_stoler_plus"), 0.0, 1)
        grid = np.linspace(0.0, TWO_PI, 4096, endpoint=False)
        density = eval_one_mode_dist(spectrum, spectrum.phi_ref + grid)
        for k in (1, 2, 3):
            moment = float(np.mean(density * np.sin(2 * k * grid))) * TWO_PI
            assert abs(moment) < 1e-10

    def test_mode2_mirrors_mode1_under_swap(self):
        state = QuasiBellState(0.8, 1.3, *_weights("odd_cat"))
        swapped = QuasiBellState(1.3, 0.8, *_weights("odd_cat"))
        m2 = one_mode_coefficients(state, 0.2, 2)
        m1 = one_mode_coefficients(swapped, 0.2, 1)
        assert np.allclose(m2.cos_coeffs, m1.cos_coeffs, rtol=1e-14)
        assert np.allclose(m2.sin_coeffs, m1.sin_coeffs, rtol=1e-14)

    def test_mode1_independent_of_beta_phase(self):
        base = one_mode_coefficients(
            QuasiBellState(1.0, cmath.rect(1.0, 0.0), *_weights("yurke_stoler_plus")), 0.0, 1
        )
        rotated = one_mode_coefficients(
            QuasiBellState(1.0, cmath.rect(1.0, 2.2), *_weights("yurke_stoler_plus")), 0.0, 1
        )
        assert np.allclose(rotated.cos_coeffs, base.cos_coeffs, rtol=1e-13, atol=1e-300)
        assert np.allclose(rotated.sin_coeffs, base.sin_coeffs, rtol=1e-13, atol=1e-300)

    def test_split_coefficient_views(self):
        spectrum = one_mode_coefficients(preset_state("yurke_stoler_plus"), 0.0, 1)
        assert np.array_equal(spectrum.c_odd, spectrum.cos_coeffs[0::2])
        assert np.array_equal(spectrum.c_even, spectrum.cos_coeffs[1::2])
        assert np.array_equal(spectrum.d_odd, spectrum.sin_coeffs[0::2])

    def test_normalized(self, any_preset):
        spectrum = one_mode_coefficients(preset_state(any_preset), 0.0, 1)
        integral = series_integral(
            lambda p: eval_one_mode_dist(spectrum, p),
            spectrum.phi_ref - math.pi,
            spectrum.phi_ref + math.pi,
        )
        assert integral == pytest.approx(1.0, abs=1e-10)

    def test_bad_mode(self):
        with pytest.raises(DomainError):
            one_mode_coefficients(preset_state("even_cat"), 0.0, 3)


class TestTrigMoments:
    def test_uniform_case(self):
        state = QuasiBellState(0.0, 1.0, *_weights("even_cat"))
        spectrum = build_spectrum(state, 0.0, "minus")
        moments = trig_moments(spectrum, 1)
        assert moments.mean_cos == 0.0
        assert moments.mean_sin == 0.0
        assert moments.var_cos == pytest.approx(0.5)
        assert moments.var_sin == pytest.approx(0.5)

    def test_mean_sin_identically_zero(self, any_preset):
        spectrum = build_spectrum(preset_state(any_preset), -0.3, "plus")
        for n in (1, 2, 5):
            assert trig_moments(spectrum, n).mean_sin == 0.0

    def test_mean_cos_is_coefficient(self):
        spectrum = build_spectrum(preset_state("even_cat"), -1.0, "minus")
        for n in (1, 2, 3):
            assert trig_moments(spectrum, n).mean_cos == spectrum.coeffs[n - 1]

    def test_recomputes_past_truncation(self):
        spectrum = build_spectrum(preset_state("even_cat"), 0.0, "minus")
        n = spectrum.n_used - 2
        assert 2 * n > spectrum.n_used
        moments = trig_moments(spectrum, n)
        direct = fourier_coefficient(spectrum.state, spectrum.s, 2 * n, "minus")
        assert moments.var_sin == pytest.approx(0.5 * (1.0 - direct), rel=1e-14)

    def test_moments_match_quadrature(self):
        # <cos(phi - phi')> against the quadrature marginal.
        state = preset_state("even_cat")
        spectrum = build_spectrum(state, -1.0, "minus")
        grid = np.linspace(0.0, TWO_PI, 128, endpoint=False)
        density = quadrature_phase_dist(state, -1.0, "minus", spectrum.phi_prime + grid)
        moment = float(np.mean(density * np.cos(grid))) * TWO_PI
        assert trig_moments(spectrum, 1).mean_cos == pytest.approx(moment, abs=1e-6)


class TestPhaseMeanVar:
    def test_centered_window_mean_is_reference(self, any_preset):
        spectrum = build_spectrum(preset_state(any_preset), -1.0, "minus")
        stats = phase_mean_var(spectrum, spectrum.phi_prime)
        assert stats.mean == spectrum.phi_prime

    def test_uniform_variance(self):
        state = QuasiBellState(0.0, 1.0, *_weights("even_cat"))
        spectrum = build_spectrum(state, 0.0, "minus")
        stats = phase_mean_var(spectrum, 1.0)
        assert stats.mean == pytest.approx(1.0)
        assert stats.variance == pytest.approx(math.pi**2 / 3.0, rel=1e-15)

    def test_peaked_distribution_beats_uniform(self):
        spectrum = build_spectrum(preset_state("even_cat"), -1.0, "minus")
        stats = phase_mean_var(spectrum, spectrum.phi_prime)
        assert stats.variance < math.pi**2 / 3.0

    def test_against_direct_window_quadrature(self):
        # Mean and variance recomputed as integrals of the series density.
        spectrum = build_spectrum(preset_state("even_cat"), -1.0, "minus")
        phi0 = spectrum.phi_prime + 0.35
        stats = phase_mean_var(spectrum, phi0)
        lo, hi = phi0 - math.pi, phi0 + math.pi
        mean = series_integral(lambda p: p * eval_phase_dist(spectrum, p), lo, hi)
        var = series_integral(
            lambda p: (p - mean) ** 2 * eval_phase_dist(spectrum, p), lo, hi
        )
        assert stats.mean == pytest.approx(mean, abs=1e-10)
        assert stats.variance == pytest.approx(var, abs=1e-10)

    def test_off_center_window_shifts_mean(self):
        spectrum = build_spectrum(preset_state("even_cat"), 0.0, "minus")
        stats = phase_mean_var(spectrum, spectrum.phi_prime + 0.5)
        assert stats.mean != pytest.approx(spectrum.phi_prime + 0.5)


class TestWrapAngle:
    def test_range(self):
        grid = np.linspace(-30.0, 30.0, 1001)
        wrapped = wrap_angle(grid)
        assert np.all(wrapped > -math.pi)
        assert np.all(wrapped <= math.pi)
        assert np.allclose(np.cos(wrapped), np.cos(grid), atol=1e-12)

    def test_pi_maps_to_pi(self):
        assert wrap_angle(math.pi) == pytest.approx(math.pi)
        assert wrap_angle(-math.pi) == pytest.approx(math.pi)
