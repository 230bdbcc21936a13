import contextlib
import io
import os
import tempfile
import unittest

import numpy as np
from numpy.testing import assert_allclose, assert_equal

from skphase.cli import build_config
from skphase.cli.__main__ import EXIT_CONFIGURATION, EXIT_NUMERICAL, EXIT_OK, main
from skphase.dissipator import Geometry, build_coeffs
from skphase.dynamics import TRAJECTORY_COLUMNS, rho_analytic


def _run(*argv):
    """ Runs the command line with output to a string, returns exit code and output. """
    out = io.StringIO()
    with contextlib.redirect_stdout(out):
        code = main(list(argv))
    return code, out.getvalue()


def _record(text):
    """ Parses ``name = value`` lines. """
    return {name.strip(): float(value) for name, value in (line.split('=') for line in text.splitlines())}


class CommandTestCase(unittest.TestCase):

    def setUp(self) -> None:
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        self.tmp.cleanup()

    def path(self, name):
        return os.path.join(self.tmp.name, name)

    def read_csv(self, name):
        with open(self.path(name), 'r') as f:
            lines = f.read().splitlines()
        header = next(line for line in lines if not line.startswith('#'))
        return header, np.atleast_2d(np.loadtxt(self.path(name), delimiter=',', skiprows=lines.index(header) + 1))

    def read_metadata(self, name):
        with open(self.path(name), 'r') as f:
            return dict(tuple(part.strip() for part in line[1:].split('=', 1))
                        for line in f if line.startswith('#'))


class TestModfuncs(CommandTestCase):

    def test_grid(self):
        code = main(['modfuncs', '--z-min', '1e-6', '--z-max', '1e6', '--points', '13', '--out-path', self.path('m.csv')])
        self.assertEqual(code, EXIT_OK)
        header, table = self.read_csv('m.csv')
        self.assertEqual(header, 'z_m,u,fx,fz')
        self.assertEqual(table.shape, (13, 4))
        assert_allclose(table[[0, -1], 0], [1e-6, 1e6], rtol=1e-14)
        assert_allclose(table[0, 2:], [1., -1.], atol=1e-9)
        assert_allclose(table[-1, 2:], 0., atol=1e-6)
        assert_allclose(table[:, 1], 2. * 3e9 * table[:, 0] / 299792458., rtol=1e-14)


class TestEvolve(CommandTestCase):

    def test_analytic(self):
        code = main(['evolve', '--cycles', '1', '--theta-rad', '1.2', '--samples', '11', '--out-path', self.path('e.csv')])
        self.assertEqual(code, EXIT_OK)
        header, table = self.read_csv('e.csv')
        self.assertEqual(header, ','.join(TRAJECTORY_COLUMNS))
        self.assertEqual(table.shape, (11, 6))
        self.assertEqual(table[0, 0], 0.)
        assert_allclose(table[-1, 0], 2. * np.pi, rtol=1e-15)
        self.assertAlmostEqual(table[0, 5], 1., delta=1e-14)
        config = build_config(overrides=dict(cycles=1., theta_rad=1.2))
        coeffs = build_coeffs(config.params, Geometry.from_distance(config.z_m, config.omega0_si))
        rho = rho_analytic(2. * np.pi, config.params, coeffs)
        assert_allclose(table[-1, 1:5], [rho.ee, rho.eg.real, rho.eg.imag, rho.gg], rtol=1e-13, atol=1e-16)

    def test_runge_kutta(self):
        code = main(['evolve', '--method', 'rk4', '--cycles', '0.5', '--steps-per-cycle', '400',
                     '--out-path', self.path('rk.csv')])
        self.assertEqual(code, EXIT_OK)
        _, table = self.read_csv('rk.csv')
        steps = int(np.ceil(400 * (2. * np.pi * .5) / (2. * np.pi)))
        self.assertEqual(table.shape, (steps + 1, 6))
        assert_allclose(table[:, 1] + table[:, 4], 1., atol=1e-10)

    def test_too_many_steps(self):
        code, _ = _run('evolve', '--method', 'rk4', '--cycles', '1e5', '--steps-per-cycle', '2000')
        self.assertEqual(code, EXIT_CONFIGURATION)


class TestPhase(CommandTestCase):

    def test_far_from_plate(self):
        code, text = _run('phase', '--z-m', '1e3', '--cycles', '1', '--theta-rad', repr(.5 * np.pi))
        self.assertEqual(code, EXIT_OK)
        record = _record(text)
        self.assertEqual(set(record), {'total', 'geometric_part', 'environment_part', 'first_order_environment_part',
                                       'cycles', 'u', 'a'})
        assert_allclose(record['environment_part'], -9.8696e-6, rtol=1e-3)
        assert_allclose(record['first_order_environment_part'], record['environment_part'], rtol=1e-5)
        assert_allclose(record['geometric_part'], -np.pi, rtol=1e-15)
        self.assertEqual(record['total'], record['geometric_part'] + record['environment_part'])
        self.assertEqual(record['cycles'], 1.)

    def test_excited_state(self):
        code, text = _run('phase', '--theta-rad', '0', '--cycles', '1')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(_record(text)['total'], 0.)

    def test_defaults_are_finite(self):
        code, text = _run('phase')
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(all(np.isfinite(v) for v in _record(text).values()))

    def test_nonradiative_ratio(self):
        code, text = _run('phase', '--z-m', '1 um', '--beta-cm3', '1e-18')
        self.assertEqual(code, EXIT_OK)
        assert_allclose(_record(text)['nonradiative_ratio'], 1e-6, rtol=1e-12)


class TestSweep(CommandTestCase):

    def test_default_curve(self):
        code = main(['sweep', '--points', '8', '--out-path', self.path('s.csv')])
        self.assertEqual(code, EXIT_OK)
        header, table = self.read_csv('s.csv')
        self.assertEqual(header, 'z_m,delta_rad')
        self.assertEqual(table.shape, (8, 2))
        self.assertEqual(table[0, 1], 0.)
        self.assertTrue(np.all(np.diff(table[:, 1]) > 0))

    def test_metadata(self):
        code = main(['sweep', '--points', '3', '--alpha', 'parallel', '--out-path', self.path('p.csv')])
        self.assertEqual(code, EXIT_OK)
        metadata = self.read_metadata('p.csv')
        self.assertEqual(set(metadata), {'alpha', 'omega0_si', 'gamma_ratio', 'theta_rad', 'z0_m', 'time_s',
                                         'lamb_shift_policy'})
        assert_equal([float(w) for w in metadata['alpha'].split(',')], [.5, .5, 0.])
        assert_allclose(float(metadata['z0_m']), 1e-6, rtol=1e-15)
        assert_allclose(float(metadata['time_s']), 1e-3, rtol=1e-15)
        self.assertEqual(metadata['lamb_shift_policy'], 'bare')

    def test_polarization_changes_curve(self):
        tables = {}
        for alpha in ('parallel', 'normal'):
            self.assertEqual(main(['sweep', '--points', '3', '--alpha', alpha, '--out-path', self.path(alpha)]),
                             EXIT_OK)
            self.assertEqual(self.read_metadata(alpha)['alpha'].split(',')[2], '0' if alpha == 'parallel' else '1')
            tables[alpha] = self.read_csv(alpha)[1]
        assert_equal(tables['parallel'][:, 0], tables['normal'][:, 0])
        self.assertFalse(np.array_equal(tables['parallel'][:, 1], tables['normal'][:, 1]))

    def test_profile(self):
        code = main(['sweep', '--profile', 'magnitude', '--length-unit', 'mm', '--out-path', self.path('mag.csv')])
        self.assertEqual(code, EXIT_OK)
        metadata = self.read_metadata('mag.csv')
        self.assertEqual(float(metadata['omega0_si']), 1e9)
        assert_allclose(float(metadata['z0_m']), 1e-3, rtol=1e-15)
        _, table = self.read_csv('mag.csv')
        assert_allclose(table[:, 0], [1e-2, 1.01e-2], rtol=1e-15)
        assert_allclose(table[0, 1], 84.857977, rtol=1e-5)

    def test_reproducible_output(self):
        for name, extra in (('serial.csv', []), ('again.csv', []), ('threads.csv', ['--n-jobs', '3'])):
            args = ['sweep', '--points', '6', '--z-max', '5 mm', '--out-path', self.path(name)] + extra
            self.assertEqual(main(args), EXIT_OK)
        with open(self.path('serial.csv'), 'rb') as f:
            serial = f.read()
        for name in ('again.csv', 'threads.csv'):
            with open(self.path(name), 'rb') as f:
                self.assertEqual(f.read(), serial)

    def test_standard_output(self):
        code, text = _run('sweep', '--points', '3', '--out-path', '-')
        self.assertEqual(code, EXIT_OK)
        lines = [line for line in text.splitlines() if not line.startswith('#')]
        self.assertTrue(text.startswith('# alpha = '))
        self.assertEqual(lines[0], 'z_m,delta_rad')
        self.assertEqual(len(lines), 4)
        assert_equal(float(lines[1].split(',')[1]), 0.)


class TestVerify(CommandTestCase):

    def test_passes(self):
        code, text = _run('verify')
        self.assertEqual(code, EXIT_OK)
        lines = text.splitlines()
        self.assertEqual(len(lines), 14)
        self.assertTrue(all(line.endswith('PASS') for line in lines))

    def test_perturbation_fails(self):
        code, text = _run('verify', '--perturbation', '1e-3')
        self.assertEqual(code, EXIT_NUMERICAL)
        self.assertIn('FAIL', text)


class TestExitCodes(CommandTestCase):

    def test_empty_grid(self):
        code, _ = _run('sweep', '--z-min', '1e-4', '--z-max', '1e-6')
        self.assertEqual(code, EXIT_CONFIGURATION)

    def test_bad_unit(self):
        code, _ = _run('phase', '--z-m', '10 s')
        self.assertEqual(code, EXIT_CONFIGURATION)

    def test_unknown_key_in_file(self):
        with open(self.path('bad.cfg'), 'w') as f:
            f.write('speed = 1\n')
        code, _ = _run('phase', '--config', self.path('bad.cfg'))
        self.assertEqual(code, EXIT_CONFIGURATION)

    def test_unwritable_output(self):
        code, _ = _run('sweep', '--points', '2', '--out-path', self.path(os.path.join('missing', 'out.csv')))
        self.assertEqual(code, EXIT_CONFIGURATION)

    def test_unknown_flag(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                main(['phase', '--speed', '1'])

    def test_unknown_profile(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit):
                main(['phase', '--profile', 'fig'])


if __name__ == '__main__':
    unittest.main()
