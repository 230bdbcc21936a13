import unittest

import numpy as np
from numpy.testing import assert_allclose

from skphase.dissipator import DissipatorCoeffs, Geometry, build_coeffs
from skphase.dynamics import Trajectory, trajectory_analytic
from skphase.numeric import DegeneracyError
from skphase.phase import gp_closed_form, gp_first_order, gp_general, gp_integral, environment_difference
from skphase.util import wrap_angle
from tests.factory import analytic_cycle, atom, coeffs_at
from tests.util import GenerateTestMatrix

TWO_PI = 2. * np.pi


class TestRouteEquivalence(unittest.TestCase, metaclass=GenerateTestMatrix):
    params = {
        '_test_closed_form_vs_integral': [dict(theta=theta, gamma_ratio=gamma_ratio, u=u, phi_end=phi_end)
                                          for theta in (.3, np.pi / 2, 2., np.pi)
                                          for gamma_ratio in (1e-7, 1e-5)
                                          for u in (.1, 1., 10., np.inf)
                                          for phi_end in (TWO_PI, 200. * np.pi)],
        '_test_general_vs_integral': [dict(theta=theta, gamma_ratio=gamma_ratio, u=u, cycles=cycles)
                                      for theta in (.3, np.pi / 2, 2., np.pi)
                                      for gamma_ratio in (1e-7, 1e-5)
                                      for u in (.1, 1., 10., np.inf)
                                      for cycles in (1, 100)],
        '_test_unitary_limit': [dict(theta=theta) for theta in (.3, 1., np.pi / 2, 2., 2.8)],
    }

    def _test_closed_form_vs_integral(self, theta, gamma_ratio, u, phi_end):
        params = atom(theta=theta, gamma_ratio=gamma_ratio)
        coeffs = coeffs_at(params, u)
        closed = gp_closed_form(params, coeffs, phi_end)
        reference = gp_integral(params, coeffs, phi_end)
        self.assertEqual(closed.geometric_part, reference.geometric_part)
        self.assertLessEqual(abs(closed.environment_part - reference.environment_part),
                             1e-10 * abs(reference.environment_part))

    def _test_general_vs_integral(self, theta, gamma_ratio, u, cycles):
        # 10^4 points per cycle
        params, coeffs, traj = analytic_cycle(theta=theta, gamma_ratio=gamma_ratio, u=u,
                                              points=10_000 * cycles + 1, cycles=cycles)
        reference = gp_integral(params, coeffs, TWO_PI * cycles).total
        self.assertLessEqual(abs(wrap_angle(gp_general(traj, coeffs) - reference)), 1e-6)

    def _test_unitary_limit(self, theta):
        params = atom(theta=theta)
        coeffs = DissipatorCoeffs(0., 0.)
        expected = -np.pi * (1. - np.cos(theta))
        traj = trajectory_analytic(np.linspace(0., TWO_PI, 10_001), params, coeffs)
        self.assertAlmostEqual(gp_general(traj, coeffs), expected, delta=1e-6)
        self.assertAlmostEqual(gp_integral(params, coeffs, TWO_PI).total, expected, delta=1e-14)
        self.assertAlmostEqual(gp_closed_form(params, coeffs, TWO_PI).total, expected, delta=1e-14)

    def test_general_over_two_cycles(self):
        params, coeffs, traj = analytic_cycle(gamma_ratio=1e-5, points=20_001, cycles=2)
        self.assertAlmostEqual(gp_general(traj, coeffs), gp_integral(params, coeffs, 2. * TWO_PI).total,
                               delta=1e-6)


class TestClosedForm(unittest.TestCase):

    def test_first_order_value_one_cycle(self):
        params = atom(gamma_ratio=1e-6)
        result = gp_closed_form(params, coeffs_at(params), TWO_PI)
        self.assertAlmostEqual(result.environment_part, -np.pi ** 2 * 1e-6, delta=1e-10)
        self.assertAlmostEqual(result.geometric_part, -np.pi, delta=1e-15)
        self.assertEqual(result.total, result.geometric_part + result.environment_part)

    def test_integral_value_one_cycle(self):
        params = atom(gamma_ratio=1e-6)
        result = gp_integral(params, coeffs_at(params), TWO_PI)
        self.assertAlmostEqual(result.total, -np.pi - np.pi ** 2 * 1e-6, delta=1e-10)

    def test_vanishing_coupling(self):
        coeffs = DissipatorCoeffs(1e-14, 1e-14)
        for theta in (.3, np.pi / 2, 2.):
            result = gp_closed_form(atom(theta=theta), coeffs, TWO_PI)
            self.assertAlmostEqual(result.total, -np.pi * (1. - np.cos(theta)), delta=1e-8)

    def test_ground_state(self):
        params = atom(theta=np.pi, gamma_ratio=1e-3)
        coeffs = coeffs_at(params)
        for route in (gp_closed_form, gp_integral):
            result = route(params, coeffs, TWO_PI)
            self.assertEqual(result.total, -TWO_PI)
            self.assertEqual(result.environment_part, 0.)

    def test_excited_state_passes_maximally_mixed(self):
        params = atom(theta=0.)
        self.assertEqual(gp_closed_form(params, coeffs_at(params), TWO_PI).total, 0.)
        coeffs = DissipatorCoeffs(1e-3, 1e-3)
        expected = -(1000. - np.log(2.) / 4e-3)
        for route in (gp_closed_form, gp_integral):
            result = route(params, coeffs, 1000.)
            self.assertAlmostEqual(result.environment_part, expected, delta=1e-12)
            self.assertEqual(result.geometric_part, 0.)

    def test_long_horizon(self):
        params = atom(gamma_ratio=1e-6)
        phi_end = 1e13
        result = gp_closed_form(params, coeffs_at(params), phi_end)
        self.assertTrue(np.isfinite(result.total))
        self.assertAlmostEqual(result.environment_part / phi_end, -.5, delta=1e-5)

    def test_accumulation_is_not_linear(self):
        params = atom(gamma_ratio=1e-5)
        coeffs = coeffs_at(params)
        single = gp_closed_form(params, coeffs, 200. * np.pi).total
        double = gp_closed_form(params, coeffs, 400. * np.pi).total
        self.assertGreater(abs(double - 2. * single), 1e-3)

    def test_requires_vacuum(self):
        with self.assertRaises(ValueError):
            gp_closed_form(atom(), DissipatorCoeffs(2e-7, 1e-7), TWO_PI)
        with self.assertRaises(ValueError):
            gp_integral(atom(), DissipatorCoeffs(2e-7, 1e-7), TWO_PI)

    def test_invalid_horizon(self):
        params = atom()
        for phi_end in (0., -1., np.inf):
            with self.assertRaises(ValueError):
                gp_closed_form(params, coeffs_at(params), phi_end)


class TestEnvironmentDifference(unittest.TestCase):

    def test_matches_difference_of_closed_forms(self):
        params = atom(theta=1.)
        reference, coeffs = DissipatorCoeffs(2e-6, 2e-6), DissipatorCoeffs(1e-6, 1e-6)
        expected = gp_closed_form(params, reference, 100.).environment_part \
            - gp_closed_form(params, coeffs, 100.).environment_part
        assert_allclose(environment_difference(params, reference, coeffs, 100.), expected, rtol=1e-10)

    def test_identical_coefficients(self):
        params = atom()
        coeffs = coeffs_at(params, u=.5)
        self.assertEqual(environment_difference(params, coeffs, coeffs, 1e6), 0.)

    def test_difference_below_double_resolution(self):
        # the difference is of the order of the spacing of doubles around the environment parts
        params = atom(gamma_ratio=1e-6)
        phi_end = 1e3
        reference, coeffs = DissipatorCoeffs(1e-7, 1e-7), DissipatorCoeffs(1e-7 + 1e-21, 1e-7 + 1e-21)
        difference = environment_difference(params, reference, coeffs, phi_end)
        # -d env / da = phi^2 to leading order at theta = pi/2
        assert_allclose(difference, (coeffs.a - reference.a) * phi_end ** 2, rtol=1e-3)

    def test_invalid(self):
        params = atom()
        with self.assertRaises(ValueError):
            environment_difference(params, DissipatorCoeffs(1e-7, 1e-7, omega_eff=1.),
                                   DissipatorCoeffs(1e-7, 1e-7, omega_eff=1.1), TWO_PI)
        with self.assertRaises(ValueError):
            environment_difference(params, DissipatorCoeffs(2e-7, 1e-7), DissipatorCoeffs(1e-7, 1e-7), TWO_PI)
        with self.assertRaises(ValueError):
            environment_difference(params, DissipatorCoeffs(1e-7, 1e-7), DissipatorCoeffs(1e-7, 1e-7), 0.)


class TestFirstOrder(unittest.TestCase):

    def test_free_space_value(self):
        result = gp_first_order(atom(gamma_ratio=1e-6), Geometry.free())
        self.assertAlmostEqual(result.total, -np.pi - np.pi ** 2 * 1e-6, delta=1e-14)

    def test_excited_state(self):
        self.assertEqual(gp_first_order(atom(theta=0.), Geometry.free()).total, 0.)

    def test_normal_dipole_doubling(self):
        params = atom(alpha='normal', theta=1.)
        near = gp_first_order(params, Geometry(u=1e-8))
        free = gp_first_order(params, Geometry.free())
        assert_allclose(near.environment_part, 2. * free.environment_part, rtol=1e-14)

    def test_convergence_is_linear(self):
        # the second-order coefficient vanishes at pi / 2, use a generic angle
        def scaled_residual(gamma_ratio):
            params = atom(theta=1., gamma_ratio=gamma_ratio)
            env = gp_closed_form(params, coeffs_at(params), TWO_PI).environment_part
            return abs(env - gp_first_order(params, Geometry.free()).environment_part) / gamma_ratio

        self.assertGreaterEqual(scaled_residual(1e-7) / scaled_residual(1e-8), 8.)

    def test_agrees_with_closed_form_near_plate(self):
        params = atom(theta=.8, gamma_ratio=1e-8)
        geom = Geometry(u=.7)
        closed = gp_closed_form(params, build_coeffs(params, geom), TWO_PI)
        first = gp_first_order(params, geom)
        assert_allclose(closed.environment_part, first.environment_part, rtol=1e-6)
        assert_allclose(closed.geometric_part, first.geometric_part, rtol=1e-14)


class TestGeneral(unittest.TestCase):

    def test_stationary_ground_state(self):
        params = atom(theta=np.pi, gamma_ratio=1e-5)
        coeffs = coeffs_at(params)
        traj = trajectory_analytic(np.linspace(0., TWO_PI, 1001), params, coeffs)
        self.assertAlmostEqual(gp_general(traj, coeffs), -TWO_PI, delta=1e-12)

    def test_crossing_raises(self):
        params = atom(theta=0.)
        coeffs = DissipatorCoeffs(1e-3, 1e-3)
        traj = trajectory_analytic(np.linspace(0., 400., 10_001), params, coeffs)
        with self.assertRaises(DegeneracyError):
            gp_general(traj, coeffs)

    def test_short_trajectory(self):
        params = atom()
        coeffs = coeffs_at(params)
        traj = trajectory_analytic(np.linspace(0., TWO_PI, 50), params, coeffs)
        with self.assertRaises(ValueError):
            gp_general(traj, coeffs)

    def test_mixed_initial_state(self):
        phis = np.linspace(0., 1., 200)
        matrices = np.tile(np.array([[.6, .1], [.1, .4]], dtype=complex), (200, 1, 1))
        with self.assertRaises(ValueError):
            gp_general(Trajectory(phis, matrices), DissipatorCoeffs(0., 0.))


if __name__ == '__main__':
    unittest.main()
