import copy
import json
import os
import warnings

from .validator_map import validator_map, validate
from .config import config
from gw_zero import GW_LOGGER
from gw_zero.GeometryConfig import BundleSpec, GeometryConfig
from gw_zero.constants import INTERNAL, METHOD
from gw_zero.localization.CharClassSpec import CharClassSpec


class RunOptions:
    def __init__(self, **kwargs):
        """
        Initialize the object, creating the list of attributes
        based on the contents of validator_map, and assign them based on kwargs

        :param kwargs: any run options to be set immediately
        """
        # init the built in attrs:
        for key in validator_map:
            self.__setattr__(key, None)

        # Apply any parameters passed in:
        for key, value in kwargs.items():
            self.__setattr__(key, value)

    def __setattr__(self, key, value):
        """
        Set a run option, restricting to the keys in validator_map only,
        and applying validation to the value before setting

        :param key: the name of the option to be set
        :param value: the value to which to set the named option
        """
        # self.* calls custom __setattr__ method, creating inf loop. Use super().*
        if key in validator_map:
            if value is None:  # always maintain config on required fields
                super().__setattr__(key, copy.copy(config.get(key)))
            else:
                super().__setattr__(key, validate(key, value))
        else:
            msg = f"key '{key}' is not a valid run option (setattr)"
            GW_LOGGER.error(msg)
            raise KeyError(msg)

    def __delattr__(self, item):
        """
        Clear a run option by setting its value to None

        :param item: the name of the option to clear
        """
        if item in validator_map:
            self.__setattr__(item, None)
        else:
            msg = f"key '{item}' is not a valid run option (delattr)"
            GW_LOGGER.error(msg)
            raise KeyError(msg)

    def __iter__(self):
        """
        Filters run options, only returning populated non-default fields. Used when casting to a dict.
        """
        for key in validator_map:
            if not self._is_val_default(key):
                yield key, self.__getattribute__(key)

    def __str__(self):
        """
        What to display if `print(opts)` is called.
        """
        return json.dumps(dict(self), indent=4, default=str)

    @classmethod
    def from_file(cls, path: str) -> 'RunOptions':
        """
        Load options from a flat JSON object of run option keys

        :param path: path to the JSON config file
        """
        with open(path, 'r') as f:
            try:
                data = json.load(f)
            except json.JSONDecodeError as exc:
                raise ValueError(f'Config file {path} is not valid JSON: {exc}') from exc
        if not isinstance(data, dict):
            raise ValueError(f'Config file {path} must hold a JSON object of run options')
        GW_LOGGER.info(f'Loaded run options from {path}')
        return cls(**data)

    def merge_args(self, **kwargs) -> None:
        """
        Merges all keyword args into this RunOptions object.
        Emits a warning for any options that are over-written by the operation.

        :param kwargs: The run options to merge into the object
        :return: None
        """
        for key in kwargs:
            # Spit out warning if the value is something other than the default:
            if not self._is_val_default(key):
                msg = (
                    'While merging run options, '
                    f'existing option {key}:{getattr(self, key, None)} '
                    f'overwritten by kwarg with value {kwargs[key]}'
                )
                GW_LOGGER.warning(msg)
                warnings.warn(msg)
            self.__setattr__(key, kwargs[key])

    def _is_val_default(self, key) -> bool:
        """
        Returns bool on if the key's current value is the same as it's default value

        :param key: The key to check
        :return: bool
        """
        default_val = config[key] if key in config else None
        current_val = getattr(self, key, None)
        return current_val == default_val

    def resolved_cache_dir(self):
        """The cache directory option, else the GW_ZERO_CACHE_DIR environment variable, else None"""
        if self.cache_dir is not None:
            return self.cache_dir
        from_env = os.environ.get(INTERNAL.GRAPH_CACHE_ENV)
        return validate('cache_dir', from_env) if from_env else None

    def geometry(self) -> GeometryConfig:
        if self.r is None:
            msg = 'No geometry given: set r (and convex/concave degrees) or pick a named geometry'
            GW_LOGGER.error(msg)
            raise ValueError(msg)
        return GeometryConfig(self.r, BundleSpec(self.convex, self.concave))

    def char_class_spec(self) -> CharClassSpec:
        return CharClassSpec(self.char_class, self.chern_parameter)

    def check(self) -> None:
        """
        Cross-field validation: raises ValueError when the chosen method cannot run on
        the chosen geometry.
        """
        geometry = self.geometry()
        D = self.max_degree
        uses_mirror = self.method in (METHOD.MIRROR, METHOD.BOTH)
        uses_localization = self.method in (METHOD.LOCALIZATION, METHOD.BOTH)
        problems = []

        if self.char_class == METHOD.CHERN_POLYNOMIAL and self.method != METHOD.LOCALIZATION:
            problems.append('the Chern polynomial class is only computed by localization')
        if uses_mirror:
            if geometry.index < 0:
                problems.append(
                    f'criticality index {geometry.criticality_index} exceeds r + 1 = {geometry.r + 1}'
                )
            bad = [d for d in range(1, D + 1) if not geometry.is_extractable(d)]
            if bad:
                problems.append(
                    f'invariants of degrees {bad} cannot be read off the mirror J-series '
                    f'for {geometry}'
                )
        if uses_localization and self.char_class == METHOD.EULER:
            bad = [d for d in range(1, D + 1) if geometry.euler_rank(d) != geometry.vdim(d)]
            if bad:
                problems.append(
                    f'the Euler class of the bundle misses the virtual dimension in degrees {bad}'
                )

        if problems:
            msg = f'Invalid run configuration for method={self.method}: ' + '; '.join(problems)
            GW_LOGGER.error(msg)
            raise ValueError(msg)
