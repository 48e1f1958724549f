"""Configuration management for the Wozencraft code toolkit."""

import copy
import logging
import os
from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Iterator, Optional, Union

import yaml

logger = logging.getLogger(__name__)


# Parameter file
PARAM_FORMAT = "wozencraft-params-v1"
PARAM_BASIS = "monomial"

# Search limits
DEFAULT_BUDGET = 2**28
DEFAULT_CERTIFY_BUDGET = 2**24
DEFAULT_ARTIN_CAP_FACTOR = 64
MAX_FIELD_ORDER = 2**31
FLOAT_SLACK = 1e-9

# Local file consulted before the per-user one
LOCAL_CONFIG_NAME = "wozencraft.yaml"

DEFAULTS: Dict[str, Any] = {
    "search": {
        "artin_cap_factor": DEFAULT_ARTIN_CAP_FACTOR,
        "budget": DEFAULT_BUDGET,
        "workers": 1,
        "chunk_bits": 16,
    },
    "certify": {
        "budget": DEFAULT_CERTIFY_BUDGET,
    },
    "bounds": {
        "float_slack": FLOAT_SLACK,
    },
    "verify": {
        "trials": 1000,
        "lemma_samples": 10000,
        "exact_limit": 2**20,
    },
}

# CLI configuration
CLI_CONTEXT_SETTINGS = {
    "help_option_names": ["-h", "--help"],
    "max_content_width": 120,
}


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


class Config:
    """Layered YAML settings with dot-notation access.

    Values come from the built-in ``DEFAULTS`` overlaid with the first file
    found among: the explicit path, ``./wozencraft.yaml`` and
    ``<config dir>/config.yaml``. A missing file is not an error; a corrupt
    one is logged and ignored.

    Example:
        >>> config = Config()
        >>> config.get("search.budget")
        268435456
    """

    def __init__(self, config_path: Optional[Union[str, Path]] = None) -> None:
        self.config_path: Optional[Path] = self._resolve_path(config_path)
        self.data: Dict[str, Any] = copy.deepcopy(DEFAULTS)
        if self.config_path is not None and self.config_path.exists():
            self.load()

    @staticmethod
    def _resolve_path(config_path: Optional[Union[str, Path]]) -> Optional[Path]:
        if config_path is not None:
            return Path(config_path)
        local = Path.cwd() / LOCAL_CONFIG_NAME
        if local.exists():
            return local
        user = get_config_dir() / "config.yaml"
        return user if user.exists() else None

    def load(self) -> None:
        """Overlay the YAML file at ``config_path`` on the defaults."""
        assert self.config_path is not None
        try:
            with open(self.config_path, "r", encoding="utf-8") as f:
                loaded = yaml.safe_load(f) or {}
        except (yaml.YAMLError, OSError) as exc:
            logger.warning("Ignoring unreadable config %s: %s", self.config_path, exc)
            return
        if not isinstance(loaded, dict):
            logger.warning("Ignoring config %s: top level must be a mapping", self.config_path)
            return
        self.data = _merge(DEFAULTS, loaded)

    def get(self, key: str, default: Any = None) -> Any:
        """Get a value by dot-separated key, e.g. ``search.budget``."""
        value: Any = self.data
        try:
            for k in key.split("."):
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def has(self, key: str) -> bool:
        return self.get(key) is not None

    def __getitem__(self, key: str) -> Any:
        value = self.get(key)
        if value is None:
            raise KeyError(key)
        return value

    def __contains__(self, key: str) -> bool:
        return self.has(key)

    def __iter__(self) -> Iterator[str]:
        return iter(self.data)

    def __repr__(self) -> str:
        return f"Config(config_path='{self.config_path}')"


@lru_cache(maxsize=None)
def _platform_config_dir() -> Path:
    import platform

    xdg_config_home = os.getenv("XDG_CONFIG_HOME")
    if xdg_config_home:
        return Path(xdg_config_home) / "wozencraft-codes"
    if platform.system() == "Windows":
        local_app_data = os.getenv("LOCALAPPDATA")
        if local_app_data:
            return Path(local_app_data) / "wozencraft-codes"
        return Path.home() / "AppData" / "Local" / "wozencraft-codes"
    return Path.home() / ".config" / "wozencraft-codes"


def get_config_dir() -> Path:
    """Get the XDG-compliant configuration directory.

    Platform-specific behavior:
        - Linux/macOS: ~/.config/wozencraft-codes/
        - Windows: %LOCALAPPDATA%/wozencraft-codes/
        - If XDG_CONFIG_HOME is set, uses that instead of ~/.config/
    """
    return _platform_config_dir()
