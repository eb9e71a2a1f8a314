""" Settings: defaults < settings file < environment < command line """

import logging
import os
from dataclasses import dataclass, fields, replace

from ramanujan_psi.config.settings_file import SettingsFile
from ramanujan_psi.errors import RamanujanPsiError

LOG = logging.getLogger(__name__)

ENV_PREFIX = "RAMANUJAN_"
ENV_KEYS = ("tolerance", "guard_delta", "compensated", "shift_threshold", "oracle_tolerance")

# smallest tolerance reachable in double precision
MIN_TOLERANCE = 1e-15


class ConfigError(RamanujanPsiError):
    """ Custom errors for settings """
    pass


@dataclass(frozen=True)
class Settings:
    """ Process-wide numerical defaults """
    tolerance: float = 1e-13
    guard_delta: float = 1e-3
    shift_threshold: float = 16.0
    oracle_tolerance: float = 1e-15
    max_terms: int = 64
    n_terms_cap: int = 10 ** 6
    classical_cap: int = 10 ** 8
    compensated: bool = False

    def __post_init__(self):
        if not self.tolerance >= MIN_TOLERANCE:
            raise ConfigError("tolerance must be >= %g: %r" % (MIN_TOLERANCE, self.tolerance))
        if not 0 < self.guard_delta < 0.25:
            raise ConfigError("guard_delta must lie in (0, 1/4): %r" % self.guard_delta)
        if not self.shift_threshold > 0:
            raise ConfigError("shift_threshold must be positive: %r" % self.shift_threshold)
        if not self.oracle_tolerance >= MIN_TOLERANCE:
            raise ConfigError("oracle_tolerance must be >= %g: %r"
                              % (MIN_TOLERANCE, self.oracle_tolerance))
        for name in ("max_terms", "n_terms_cap", "classical_cap"):
            if getattr(self, name) < 1:
                raise ConfigError("%s must be >= 1" % name)

    def override(self, **changes):
        """
        Return copy with non-None changes applied
        :param changes: field values
        :return: Settings
        """
        changes = {key: val for key, val in changes.items() if val is not None}
        if not changes:
            return self
        return replace(self, **_coerce(changes))


def _coerce(raw):
    """
    Convert raw strings/numbers to the field types
    :param raw: dict of field name -> value
    :return: dict
    """
    types = {field.name: field.type for field in fields(Settings)}
    coerced = {}
    for key, val in raw.items():
        if key not in types:
            raise ConfigError("Unknown setting: %s" % key)
        try:
            if types[key] in (bool, "bool"):
                coerced[key] = _as_bool(val)
            elif types[key] in (int, "int"):
                coerced[key] = int(val)
            else:
                coerced[key] = float(val)
        except (TypeError, ValueError):
            raise ConfigError("Invalid value for %s: %r" % (key, val))
    return coerced


def _as_bool(val):
    """
    Interpret common truthy spellings
    :param val:
    :return:
    """
    if isinstance(val, bool):
        return val
    text = str(val).strip().lower()
    if text in ("1", "true", "yes", "on"):
        return True
    if text in ("0", "false", "no", "off", ""):
        return False
    raise ValueError(val)


def environment_overrides(environ=None):
    """
    Collect RAMANUJAN_* overrides
    :param environ: mapping (default: os.environ)
    :return: dict
    """
    environ = os.environ if environ is None else environ
    found = {}
    for key in ENV_KEYS:
        name = ENV_PREFIX + key.upper()
        if name in environ:
            LOG.debug("Setting %s from environment", key)
            found[key] = environ[name]
    return found


def load_settings(file_path=None, environ=None):
    """
    Build settings from defaults, settings file and environment
    :param file_path: explicit settings file
    :param environ: environment mapping
    :return: Settings
    """
    try:
        from_file = SettingsFile(file_path).load()
    except (OSError, ValueError) as err:
        raise ConfigError(err)

    settings = Settings()
    settings = replace(settings, **_coerce(from_file))
    return replace(settings, **_coerce(environment_overrides(environ)))
