# Copyright (C) 2026 pyiex developers
#
# SPDX short identifier: BSD-3-Clause

import logging
import os
from dataclasses import dataclass

import yaml

logger = logging.getLogger(__name__)

CONFIG_DEFAULT_PATH = "/etc/default/pyiex.yaml"
CONFIG_ENV = "IEX_CONFIG"

DEFAULT_THREADS = 1
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class OracleBudget:
    """Hard caps for the brute-force oracles

    max_ground_size: largest h (set systems) scanned exhaustively
    max_factorial_base: largest n whose n! permutations (or maps) are scanned
    max_dnf_variables: largest n whose 2^n assignments are scanned
    max_comp_target: largest target t tabulated by the composition oracles
    """

    max_ground_size: int = 20
    max_factorial_base: int = 10
    max_dnf_variables: int = 24
    max_comp_target: int = 100000


def get_config(filename=None):
    """Load the YAML configuration

    Lookup order: explicit filename, the IEX_CONFIG environment variable,
    then CONFIG_DEFAULT_PATH. Returns None when no file is found.
    """
    if not filename:
        filename = os.environ.get(CONFIG_ENV)
    if not filename and os.path.exists(CONFIG_DEFAULT_PATH):
        filename = CONFIG_DEFAULT_PATH
    if not filename:
        return None

    with open(filename, "r") as stream:
        try:
            config = yaml.safe_load(stream)
        except yaml.YAMLError as ex:
            raise ValueError(f"Invalid configuration file {filename}: {ex}") from ex
    if config is None:
        config = {}
    if not isinstance(config, dict):
        raise ValueError(f"Configuration file {filename} must hold a mapping")
    logger.debug("Loaded configuration from %s", filename)
    return config


def oracle_budget(config=None):
    """Build the oracle caps from a loaded configuration"""
    section = (config or {}).get("oracle") or {}
    defaults = OracleBudget()
    return OracleBudget(
        max_ground_size=int(
            section.get("max_ground_size", defaults.max_ground_size)
        ),
        max_factorial_base=int(
            section.get("max_factorial_base", defaults.max_factorial_base)
        ),
        max_dnf_variables=int(
            section.get("max_dnf_variables", defaults.max_dnf_variables)
        ),
        max_comp_target=int(
            section.get("max_comp_target", defaults.max_comp_target)
        ),
    )


def threads(config=None):
    """Worker count for row scans"""
    value = int((config or {}).get("threads", DEFAULT_THREADS))
    if value < 1:
        raise ValueError(f"Invalid threads: {value}. Must be >= 1")
    return value


def log_level(config=None):
    """Default logging level name"""
    return str((config or {}).get("log_level", DEFAULT_LOG_LEVEL)).upper()
