import unittest

import numpy as np

from skphase.base import Estimator, InputFormatError
from skphase.dissipator import DissipatorCoeffs
from skphase.phase import PhaseDifferenceSweep
from tests.factory import atom


class EvilEstimator(Estimator):

    # fit accidentally writes to input array!
    def fit(self, x, y=None):
        x[0] = -1
        return self


class MutableInputDataEstimator(Estimator):
    _MUTABLE_INPUT_DATA = True

    def fit(self, x):
        x[0] = 5
        return self


class WellBehavingEstimator(Estimator):

    def fit(self, x):
        self.y = np.asarray(x) + 1
        return self


class TestImmutableData(unittest.TestCase):
    def setUp(self) -> None:
        self.est = EvilEstimator()

    def test_modifying_raises(self):
        data = np.arange(0, 10)

        with self.assertRaises(ValueError) as cm:
            self.est.fit(data)
        self.assertIn('read-only', cm.exception.args[0])

    def test_mutable_flag(self):
        data = np.zeros(3)
        MutableInputDataEstimator().fit(data)
        self.assertEqual(data[0], 5)

    def test_illegal_input_data_format(self):
        with self.assertRaises(InputFormatError):
            self.est.fit('illegal')

    def test_illegal_input_element(self):
        data = [1e-6, 2e-6, (np.arange(2), )]
        with self.assertRaises(InputFormatError):
            WellBehavingEstimator().fit(data)

    def test_list_of_numbers(self):
        est = WellBehavingEstimator().fit([1., 2, np.float64(3.)])
        np.testing.assert_equal(est.y, [2., 3., 4.])

    def test_model_input(self):
        from skphase.dynamics import LindbladIntegrator
        traj = LindbladIntegrator(atom(), phi_end=1., steps=10).fit(DissipatorCoeffs(0., 0.)).fetch_model()
        self.assertEqual(len(traj), 11)

    def test_flag_remains(self):
        x = np.empty(3)
        old_flag = x.flags.writeable
        try:
            self.est.fit(x)
        except ValueError:
            pass
        assert x.flags.writeable == old_flag

    def test_grid_untouched_by_sweep(self):
        grid = np.array([1e-3, 2e-3])
        PhaseDifferenceSweep(z0=1e-3, params=atom(), T=1e-6).fit(grid)
        self.assertTrue(grid.flags.writeable)
        np.testing.assert_equal(grid, [1e-3, 2e-3])

    def test_result_of_fit(self):
        """ fit should return estimator instance itself """
        result = WellBehavingEstimator().fit(np.empty(0))
        self.assertIsInstance(result, WellBehavingEstimator)

    def test_kw_data_passing(self):
        """ Estimator.fit(data, **kwargs) should allow for fit(data=foobar) calls """
        WellBehavingEstimator().fit(x=np.empty(0))


if __name__ == '__main__':
    unittest.main()
