# File: config/configManager.py

"""
TsadLab/config/configManager.py

Manages the configuration file and directory, ensuring defaults are in place.
Resolves the worker count from the command line, the environment and the
configuration.
"""

import copy
import os
import json
import logging
import platform

from core.errors import ParameterError

DEFAULT_CONFIG = {
    "logging": {
        "level": "INFO",
        "logDir": "log/"
    },
    "propcheck": {
        "maxLen": 6,
        "witnessLimit": 10,
        "workers": 1
    },
    "rank": {
        "batterySeed": 7
    }
}

WORKERS_ENV = 'TSADLAB_WORKERS'
CONFIG_DIR_ENV = 'TSADLAB_CONFIG_DIR'

# Spacer for readability
# ------------------------------------------------------------------------------

def defaultConfig():
    return copy.deepcopy(DEFAULT_CONFIG)

def mergeDefaults(config, defaults=None):
    """
    Fills keys missing from a loaded configuration with their defaults.

    Args:
        config (dict): The loaded configuration.
        defaults (dict): Defaults to merge from; DEFAULT_CONFIG when None.

    Returns:
        dict: A new dictionary holding every default key.
    """
    defaults = DEFAULT_CONFIG if defaults is None else defaults
    merged = copy.deepcopy(config) if isinstance(config, dict) else {}
    for key, value in defaults.items():
        if isinstance(value, dict):
            merged[key] = mergeDefaults(merged.get(key, {}), value)
        elif key not in merged:
            merged[key] = copy.deepcopy(value)
    return merged

# Spacer for readability
# ------------------------------------------------------------------------------

def _writeDefault(configFile, reason):
    config = defaultConfig()
    try:
        with open(configFile, 'w') as f:
            json.dump(config, f, indent=4)
        logging.warning(f"{reason} Created default at {configFile}.")
    except Exception as e:
        logging.error(f"Failed to create default configuration file: {e}")
    return config

def loadOrCreateConfig(osFlags, configDir=None):
    """
    Loads the configuration from '<configDir>/config.json' or creates a default if it doesn't exist.

    An unreadable directory or file falls back to the in-memory defaults.

    Args:
        osFlags (dict): Dictionary containing OS-related flags.
        configDir (str): Overrides the OS-specific configuration directory.

    Returns:
        dict: The loaded configuration with defaults filled in.
    """
    configDir = configDir or getConfigDir(osFlags)

    if not os.path.exists(configDir):
        try:
            os.makedirs(configDir, exist_ok=True)
            logging.info(f"Created configuration directory at {configDir}.")
        except Exception as e:
            logging.error(f"Failed to create configuration directory: {e}")
            return defaultConfig()

    configFile = os.path.join(configDir, 'config.json')
    if not os.path.exists(configFile):
        return _writeDefault(configFile, "Configuration file not found.")
    try:
        with open(configFile, 'r') as f:
            config = json.load(f)
    except json.JSONDecodeError as e:
        logging.error(f"Configuration file is invalid: {e}")
        return _writeDefault(configFile, "Invalid configuration file replaced.")
    except OSError as e:
        logging.error(f"Failed to read configuration file: {e}")
        return defaultConfig()
    if not isinstance(config, dict):
        logging.error("Configuration file does not hold a JSON object.")
        return _writeDefault(configFile, "Invalid configuration file replaced.")
    logging.info("Configuration file loaded successfully.")
    return mergeDefaults(config)

# Spacer for readability
# ------------------------------------------------------------------------------

def saveConfig(config, osFlags, configDir=None):
    """
    Saves the configuration back to the config file.

    Args:
        config (dict): The configuration dictionary to save.
        osFlags (dict): Dictionary containing OS-related flags.
        configDir (str): Overrides the OS-specific configuration directory.
    """
    configDir = configDir or getConfigDir(osFlags)
    configFile = os.path.join(configDir, 'config.json')
    try:
        os.makedirs(configDir, exist_ok=True)
        with open(configFile, 'w') as f:
            json.dump(config, f, indent=4)
        logging.info("Configuration file updated successfully.")
    except Exception as e:
        logging.error(f"Failed to save configuration file: {e}")

# Spacer for readability
# ------------------------------------------------------------------------------

def resolveWorkers(cliValue, config):
    """
    Worker count for propcheck and rank: the --workers flag, then the
    TSADLAB_WORKERS environment variable, then propcheck.workers.

    Raises:
        ParameterError: The chosen value is not an integer >= 1.
    """
    if cliValue is not None:
        raw, source = cliValue, '--workers'
    elif os.environ.get(WORKERS_ENV, '').strip():
        raw, source = os.environ[WORKERS_ENV].strip(), WORKERS_ENV
    else:
        raw, source = config.get('propcheck', {}).get('workers', 1), 'config'
    try:
        workers = int(raw)
    except (TypeError, ValueError):
        raise ParameterError(f"{source}: worker count must be an integer, got '{raw}'") from None
    if isinstance(raw, float) and raw != workers:
        raise ParameterError(f"{source}: worker count must be an integer, got '{raw}'")
    if workers < 1:
        raise ParameterError(f"{source}: worker count must be >= 1, got {workers}")
    return workers

# Spacer for readability
# ------------------------------------------------------------------------------

def getConfigDir(osFlags):
    """
    Determines the configuration directory based on the OS.

    TSADLAB_CONFIG_DIR takes precedence when set.

    Args:
        osFlags (dict): Dictionary containing OS-related flags.

    Returns:
        str: The path to the configuration directory.
    """
    override = os.environ.get(CONFIG_DIR_ENV)
    if override:
        return override
    if osFlags['IS_WINDOWS']:
        configDir = os.path.join(os.environ.get('APPDATA', 'C:\\'), 'TsadLab', 'config')
    elif osFlags['IS_MAC'] or osFlags['IS_LINUX'] or osFlags['IS_ANDROID']:
        configDir = os.path.expanduser('~/TsadLab/config')
    else:
        configDir = 'config'  # Fallback
    return configDir

# Spacer for readability
# ------------------------------------------------------------------------------

def detectOS():
    """
    Detects the host operating system and architecture.
    Sets flags accordingly for cross-platform operations.

    Returns:
        dict: A dictionary containing OS-related flags.
    """
    osName = platform.system()
    architecture = platform.machine()
    logging.info(f"Detected OS: {osName}, Architecture: {architecture}")

    osFlags = {
        'IS_WINDOWS': False,
        'IS_MAC': False,
        'IS_LINUX': False,
        'IS_ANDROID': False,
        'ARCHITECTURE': architecture
    }

    if osName == 'Windows':
        osFlags['IS_WINDOWS'] = True
    elif osName == 'Darwin':
        osFlags['IS_MAC'] = True
    elif osName == 'Linux':
        # Additional check for Android
        if 'ANDROID_ROOT' in os.environ:
            osFlags['IS_ANDROID'] = True
        else:
            osFlags['IS_LINUX'] = True
    else:
        logging.warning(f"Unsupported OS: {osName}")

    return osFlags
