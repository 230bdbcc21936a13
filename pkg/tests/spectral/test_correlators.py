import unittest

import numpy as np
from numpy.testing import assert_allclose
from scipy import constants

from skphase.spectral import correlator_boundary, correlator_free, fourier_modulation_oracle, mod_fx, mod_fz
from skphase.spectral.correlators import PREFACTOR
from tests.util import GenerateTestMatrix


class TestCorrelators(unittest.TestCase):

    def test_free_value(self):
        eps = 1e-3
        value = correlator_free(0., eps)
        assert_allclose(value, PREFACTOR / eps ** 4, rtol=1e-14)

    def test_boundary_approaches_free_at_plate(self):
        dtau = 1e-9
        free = correlator_free(dtau, 1e-4)
        assert_allclose(correlator_boundary(dtau, 1e-12, 1e-4, 'z'), free, rtol=1e-6)
        assert_allclose(correlator_boundary(dtau, 1e-12, 1e-4, 'x'), -free, rtol=1e-6)

    def test_boundary_decays_with_distance(self):
        dtau = 1e-9
        near = abs(correlator_boundary(dtau, 1., 1e-4, 'z'))
        far = abs(correlator_boundary(dtau, 100., 1e-4, 'z'))
        self.assertLess(far, 1e-6 * near)

    def test_x_and_y_agree(self):
        dtau = np.linspace(-1e-8, 1e-8, 7)
        assert_allclose(correlator_boundary(dtau, .5, 1e-3, 'x'), correlator_boundary(dtau, .5, 1e-3, 'y'))

    def test_hermitian_symmetry(self):
        dtau = 3e-9
        for component in 'xyz':
            forward = correlator_boundary(dtau, .2, 1e-3, component)
            backward = correlator_boundary(-dtau, .2, 1e-3, component)
            assert_allclose(forward, np.conj(backward), rtol=1e-12)

    def test_regulator_scale(self):
        # at equal times only the regulator sets the scale
        assert_allclose(correlator_free(0., constants.c), PREFACTOR / constants.c ** 4, rtol=1e-14)

    def test_invalid_arguments(self):
        with self.assertRaises(ValueError):
            correlator_boundary(0., 1., 0., 'z')
        with self.assertRaises(ValueError):
            correlator_boundary(0., -1., 1e-3, 'z')
        with self.assertRaises(ValueError):
            correlator_boundary(0., 1., 1e-3, 'w')
        with self.assertRaises(ValueError):
            correlator_free(0., -1e-3)


class TestFourierOracle(unittest.TestCase, metaclass=GenerateTestMatrix):
    params = {
        '_test_oracle_matches': [dict(u=u, component=c) for u in (.3, 1., 2.5, 6.) for c in ('x', 'z')],
    }

    def _test_oracle_matches(self, u, component):
        expected = mod_fz(u) if component == 'z' else mod_fx(u)
        self.assertAlmostEqual(fourier_modulation_oracle(u, component), expected, delta=1e-4)

    def test_y_equals_x(self):
        assert_allclose(fourier_modulation_oracle(1.2, 'y'), fourier_modulation_oracle(1.2, 'x'), rtol=1e-12)

    def test_window_must_enclose_image(self):
        with self.assertRaises(ValueError):
            fourier_modulation_oracle(60., 'z', half_width=100.)
        with self.assertRaises(ValueError):
            fourier_modulation_oracle(0., 'z')
        with self.assertRaises(ValueError):
            fourier_modulation_oracle(1., 'z', eps=0.)


if __name__ == '__main__':
    unittest.main()
