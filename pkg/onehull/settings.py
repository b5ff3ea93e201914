'''
Settings for onehull
'''
import importlib.util
import logging
import os
from os import getenv

from typing import Any, Dict

from onehull.constants import ENV_CONFIG

log = logging.getLogger(__name__)

default_settings_dict = {
    'enumeration_cap': 2 ** 28,
    'store_dir': None,
    'search_strata': 8,
    'workers': 1,
    'search_chunk': 2 ** 16,
    'property_runs': 200,
    'full_property_runs': 10 ** 4,
}

OVERRIDE_SETTINGS_PATH = getenv(ENV_CONFIG, '/etc/onehull/global_default_settings.py')


def _load_module(name, path):
    spec = importlib.util.spec_from_file_location(name, path)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)  # type: ignore
    return module


override_settings = {}
if os.path.isfile(OVERRIDE_SETTINGS_PATH):
    override_settings = _load_module('__onehull_override_settings__', OVERRIDE_SETTINGS_PATH)
    log.info('Override settings for onehull available %s', OVERRIDE_SETTINGS_PATH)
else:
    log.debug('Override settings for onehull not available %s', OVERRIDE_SETTINGS_PATH)

runtime_settings: Dict[str, Any] = {}


def get_settings_value(key: str) -> Any:
    '''
    Fetches the value from the override file.
    If the value is not present, falls back to default_settings_dict
    '''
    if key in runtime_settings:
        return runtime_settings[key]

    if hasattr(override_settings, key):
        return getattr(override_settings, key)

    if key in default_settings_dict:
        return default_settings_dict[key]

    return None


def set_settings_value(key: str, value: Any) -> None:
    '''
    Process-wide override taking precedence over the override file, used by the CLI flags
    '''
    runtime_settings[key] = value
