""" SettingsFile class """
import logging
from os import path

from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

LOG = logging.getLogger(__name__)

DEFAULT_FILENAME = "ramanujan.yaml"


def load_yaml(data):
    """
    Safely load YAML into dictionary
    :param data: string or stream
    :return:
    """
    yaml = YAML(typ="safe")
    return yaml.load(data)


class SettingsFile:
    """ Settings overrides kept in a YAML file """

    def __init__(self, file_path=None):
        """
        Initialize empty settings file object
        :param file_path: explicit path (default: ramanujan.yaml in the work directory)
        """
        self.explicit = file_path is not None
        self.path = file_path or path.join(path.curdir, DEFAULT_FILENAME)
        LOG.debug("Initializing settings file %s", self.path)
        self.values = {}

    def __repr__(self):
        return "SettingsFile({})".format(self.path)

    def __str__(self):
        return str(self.values)

    def load(self):
        """
        Load overrides from file
        :return: dict of overrides
        """
        if not path.isfile(self.path):
            if self.explicit:
                raise OSError("No such settings file: %s" % self.path)
            LOG.debug("No settings file %s, using defaults", self.path)
            return self.values

        LOG.debug("Loading settings from file %s", self.path)
        with open(self.path) as settings_fp:
            try:
                loaded = load_yaml(settings_fp)
            except YAMLError as err:
                raise ValueError("Invalid YAML in %s: %s" % (self.path, err))

        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ValueError("Settings file %s must hold a mapping" % self.path)

        self.values = dict(loaded)
        return self.values
