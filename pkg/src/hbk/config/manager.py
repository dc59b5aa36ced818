"""Configuration file management and utilities."""

import json
from pathlib import Path
from typing import Any, Dict

from .templates import DEFAULT_CONFIG_TEMPLATE

DEFAULT_CONFIG_PATH = "hbk.json"

DEFAULTS: Dict[str, Any] = {
    "flow_cap": 10**6,
    "brute_cap": 10**6,
    "jobs": 1,
    "seed": 0,
    "samples": 10_000,
}


class ConfigManager:
    """Handles configuration file operations and management."""

    @staticmethod
    def load_config(config_path: str = DEFAULT_CONFIG_PATH) -> Dict[str, Any]:
        """Load configuration from a JSON file; {} when missing or malformed."""
        try:
            config_file = Path(config_path)
            if not config_file.exists():
                return {}
            with open(config_file, "r") as f:
                config = json.load(f)
            return config if isinstance(config, dict) else {}
        except (json.JSONDecodeError, OSError):
            return {}

    @staticmethod
    def merge_config_with_args(
        config: Dict[str, Any], **cli_args: Any
    ) -> Dict[str, Any]:
        """Merge configuration with CLI arguments, giving priority to CLI args."""
        merged: Dict[str, Any] = dict(DEFAULTS)

        def add_if_not_none(key: str, value: Any) -> None:
            if value is not None:
                merged[key] = value

        def pick(section: Dict[str, Any], key: str) -> Any:
            value = cli_args.get(key)
            return value if value is not None else section.get(key)

        # Field configuration
        field_config = config.get("field", {})
        for key in ("p", "f", "s", "m"):
            add_if_not_none(key, pick(field_config, key))

        # Limits
        limits_config = config.get("limits", {})
        for key in ("flow_cap", "brute_cap"):
            add_if_not_none(key, pick(limits_config, key))

        # Run configuration
        run_config = config.get("run", {})
        for key in ("jobs", "seed", "samples"):
            add_if_not_none(key, pick(run_config, key))

        # Polynomials may be written as JSON lists in the file
        for key in ("f", "s"):
            if isinstance(merged.get(key), list):
                merged[key] = ",".join(str(c) for c in merged[key])
        for key in ("p", "m"):
            if isinstance(merged.get(key), str):
                merged[key] = int(merged[key])
        return merged

    @staticmethod
    def write_default_config(config_path: str = DEFAULT_CONFIG_PATH) -> Path:
        path = Path(config_path)
        path.write_text(
            DEFAULT_CONFIG_TEMPLATE.format(
                p=2,
                f="1,1,1",
                s="1",
                m=3,
                flow_cap=DEFAULTS["flow_cap"],
                brute_cap=DEFAULTS["brute_cap"],
                jobs=DEFAULTS["jobs"],
                seed=DEFAULTS["seed"],
                samples=DEFAULTS["samples"],
            )
        )
        return path
