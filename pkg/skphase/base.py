import abc
import functools
import warnings
from inspect import signature

import numpy as np

try:
    from sklearn.base import _pprint as pprint_sklearn
except ImportError:  # removed from newer scikit-learn releases
    pprint_sklearn = None


def _pprint(params, offset=0, printer=repr):
    r""" Parameters as ``name=value`` pairs, sorted by name and wrapped at 75 characters; the layout of
    scikit-learn's estimator repr. """
    if pprint_sklearn is not None:
        return pprint_sklearn(params, offset=offset, printer=printer)
    parts, line_length = [], offset
    line_sep = ',\n' + (1 + offset // 2) * ' '
    with np.printoptions(precision=5, threshold=64, edgeitems=2):
        for i, (k, v) in enumerate(sorted(params.items())):
            this_repr = f'{k}={v}' if type(v) is float else f'{k}={printer(v)}'
            if len(this_repr) > 500:
                this_repr = this_repr[:300] + '...' + this_repr[-100:]
            if i > 0:
                if line_length + len(this_repr) >= 75 or '\n' in this_repr:
                    parts.append(line_sep)
                    line_length = len(line_sep)
                else:
                    parts.append(', ')
                    line_length += 2
            parts.append(this_repr)
            line_length += len(this_repr)
    return '\n'.join(line.rstrip(' ') for line in ''.join(parts).split('\n'))


#: key under which pickled objects remember the package version
_VERSION_KEY = '_skphase_version'


def _owned(obj) -> bool:
    return type(obj).__module__.startswith('skphase.')


def _current_version():
    from skphase import __version__
    return __version__


class _base_methods_mixin(object, metaclass=abc.ABCMeta):
    """ Parameter introspection, representation and version-checked pickling shared by models and estimators.
    Parameters are the arguments of ``__init__``, every parameter has to be readable as an attribute of the same
    name.
    """

    @classmethod
    @functools.lru_cache(maxsize=None)
    def _param_names(cls) -> tuple:
        init = getattr(cls.__init__, 'deprecated_original', cls.__init__)
        names = []
        for parameter in signature(init).parameters.values():
            if parameter.kind == parameter.VAR_POSITIONAL:
                raise RuntimeError(f'{cls.__name__} has to list its parameters in the signature of __init__, '
                                   f'found *{parameter.name}.')
            if parameter.name != 'self' and parameter.kind != parameter.VAR_KEYWORD:
                names.append(parameter.name)
        return tuple(names)

    def get_params(self):
        r""" The constructor parameters of this object.

        Returns
        -------
        params : dict
            parameter names mapped to their current values
        """
        return {name: getattr(self, name, None) for name in self._param_names()}

    def __repr__(self):
        name = f'{self.__class__.__name__}-{id(self)}:'
        return '{name}{params}]'.format(name=name, params=_pprint(self.get_params(), offset=len(name)))

    def __getstate__(self):
        try:
            state = super().__getstate__()
        except AttributeError:
            state = None
        if state is None:
            state = self.__dict__
        if _owned(self):
            state = dict(state.items(), **{_VERSION_KEY: _current_version()})
        return state

    def __setstate__(self, state):
        if _owned(self):
            state = dict(state)
            pickled, current = state.pop(_VERSION_KEY, None), _current_version()
            if pickled != current:
                warnings.warn(f'Restoring {self.__class__.__name__} pickled with scikit-phase {pickled} under '
                              f'version {current}, results may differ.', UserWarning)
        try:
            super().__setstate__(state)
        except AttributeError:
            self.__dict__.update(state)


class Model(_base_methods_mixin):
    """ Value object: a parameter set, a coefficient set or the result of an estimator. """

    def copy(self):
        import copy
        return copy.deepcopy(self)

    def replace(self, **changes):
        r""" A new instance with some constructor parameters changed. The constructor runs again, so the
        changed values are validated.

        Raises
        ------
        ValueError
            if a name is not a constructor parameter
        """
        unknown = set(changes) - set(self._param_names())
        if unknown:
            raise ValueError(f'{sorted(unknown)} are not parameters of {self.__class__.__name__}, '
                             f'known are {self._param_names()}.')
        return type(self)(**dict(self.get_params(), **changes))


class Estimator(_base_methods_mixin):
    """ Base class of all estimators """

    #: whether fit may write to its input arrays
    _MUTABLE_INPUT_DATA = False

    def __init__(self, model=None):
        self._model = model

    @abc.abstractmethod
    def fit(self, data, **kwargs):
        """ Performs the computation on data and stores a new model.

        :param data: ndarray, list of numbers or Model
        :return: self
        """

    def fetch_model(self) -> Model:
        return self._model

    def __getattribute__(self, item):
        if item == 'fit' and not object.__getattribute__(self, '_MUTABLE_INPUT_DATA'):
            return _ImmutableInputData(object.__getattribute__(self, item))
        return object.__getattribute__(self, item)


def _fit_input(args, kwargs):
    if args:
        return args[0]
    if 'data' in kwargs:
        return kwargs['data']
    if len(kwargs) == 1:
        return next(iter(kwargs.values()))
    raise InputFormatError(f'No input at all for fit(). Input was {args}, kw={kwargs}')


def _input_arrays(value) -> list:
    r""" The arrays of a fit input that have to stay untouched during the fit. Models are passed through,
    sequences may mix numbers (grids of distances) and arrays. """
    if isinstance(value, np.ndarray):
        return [value]
    if isinstance(value, Model):
        return []
    if isinstance(value, (list, tuple)):
        arrays = []
        for i, x in enumerate(value):
            if isinstance(x, np.ndarray):
                arrays.append(x)
            elif not isinstance(x, (float, int, np.number)):
                raise InputFormatError(f'Invalid input element in position {i}, only numbers or '
                                       f'numpy.ndarrays allowed.')
        return arrays
    raise InputFormatError(f'Only model, ndarray or list/tuple of numbers allowed. '
                           f'But was of type {type(value)}: {value}.')


class _ImmutableInputData(object):
    """ Wraps Estimator.fit, input arrays are read-only while it runs and get their flags back afterwards. """

    def __init__(self, fit_method):
        self.fit_method = fit_method
        self._arrays = []
        self._flags = []

    def __enter__(self):
        self._flags = [a.flags.writeable for a in self._arrays]
        for a in self._arrays:
            a.flags.writeable = False
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        for a, writeable in zip(self._arrays, self._flags):
            if writeable:
                a.flags.writeable = True

    def __call__(self, *args, **kwargs):
        self._arrays = _input_arrays(_fit_input(args, kwargs))
        with self:
            return self.fit_method(*args, **kwargs)


class InputFormatError(ValueError):
    """Input data for Estimator is not allowed."""


class ConfigurationError(ValueError):
    """A policy, configuration key or grid specification is not supported."""
