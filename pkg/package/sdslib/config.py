# Copyright SDSLIB CONTRIBUTORS 2024

from typing import Any, Dict, Optional
import os
import toml

DEFAULTS = {
    "config_name": "default",
    "search.psd_tolerance": 1e-6,
    "search.batch_size": 65536,
    "search.jobs": 1,
    "search.prefix_depth": 3,
    "search.max_classes": 0,
}


class Config:
    """
    Main configuration handler for sdslib.
    Parses TOML config file into a Python dict and stores as data member self.config
    """

    def __init__(self, filename=None):
        """
        Initialize a global config either from the runtime environment,
        or from the supplied file.
        Search defaults are always present, file values override them.
        """
        self.config = {}
        for key, value in DEFAULTS.items():
            self.set(key, value)
        config_file = os.getenv("SDSLIB_CONFIG") if not filename else filename
        if config_file is None:
            return
        if not os.path.exists(config_file):
            raise FileNotFoundError(f"The file {config_file} does not exist")
        self._merge(self.config, toml.load(config_file))

    @staticmethod
    def _merge(target: Dict[str, Any], loaded: Dict[str, Any]) -> None:
        for k, v in loaded.items():
            if isinstance(v, dict) and isinstance(target.get(k), dict):
                Config._merge(target[k], v)
            else:
                target[k] = v

    def get(self, key, default=None):
        """
        Retrieve a configuration parameter specifying the key as a string.
        Parameters nested within groups can be referred to with a single string
        by putting a dot within group names, e.g. search.psd_tolerance
        """
        keys = key.split(".")
        val = self.config
        for k in keys:
            if isinstance(val, dict) and k in val:
                val = val[k]
            else:
                return default
        return val

    def set(self, key, value):
        """
        Add a configuration parameter specifying the key as a string.
        Parameters nested within groups can be referred to with a single string
        by putting a dot within group names, e.g. search.jobs
        """
        keys = key.split(".")
        val = self.config
        for k in keys[:-1]:
            if k not in val:
                val[k] = {}
            val = val[k]
        val[keys[-1]] = value

    def save(self, filename):
        """
        Write current set of configuration parameters to disk.
        """
        with open(filename, "w", encoding="utf-8") as f:
            toml.dump(self.config, f)


_GLOBAL_CONFIG: Optional[Config] = None


def _get_singleton() -> Config:
    """
    Singleton for the main config.
    """
    global _GLOBAL_CONFIG
    if _GLOBAL_CONFIG is None:
        _GLOBAL_CONFIG = Config()
    return _GLOBAL_CONFIG


def load(filename: str) -> Config:
    """
    Replace the global config with one read from a file.
    """
    global _GLOBAL_CONFIG
    _GLOBAL_CONFIG = Config(filename)
    return _GLOBAL_CONFIG


def get(key: str, default: Any = None) -> Any:
    """
    Read a value given a key. If not found, return default
    """
    return _get_singleton().get(key, default)


def set_value(key: str, value: Any) -> None:
    """
    Save a value in the config under a key
    """
    return _get_singleton().set(key, value)


def as_dict() -> Dict[str, Any]:
    """
    Nested dictionary of configuration parameters
    """
    return _get_singleton().config
