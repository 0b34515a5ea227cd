import os
from pathlib import Path
from typing import Any, Dict, List, Optional

import yaml
from pydantic import ValidationError

from ..models.config import ConfigModel
from ..utils.file_utils import safe_read_yaml, safe_write_yaml
from ..utils.logging import get_logger
from .exceptions import ConfigError, ConfigValidationError
from .paths import get_config_file

ENUMERATION_BUDGETS = ("coloring_leaves", "list_coloring_leaves", "assignment_evaluations")


class ConfigManager:
    def __init__(self, config_file: Optional[Path] = None):
        self.logger = get_logger("chromagap.config")
        self.config_file = config_file or get_config_file()
        self._config: Optional[ConfigModel] = None

    @property
    def is_first_run(self) -> bool:
        """Check whether no configuration file exists yet"""
        return not self.config_file.exists()

    @property
    def config(self) -> ConfigModel:
        """Get current configuration"""
        if self._config is None:
            self._config = self._apply_env_overrides(self._load_config())
        return self._config

    def _load_config(self) -> ConfigModel:
        """Load configuration from the YAML file, falling back to defaults"""
        if self.is_first_run:
            self.logger.debug(f"No config at {self.config_file}, using defaults")
            return ConfigModel()

        try:
            config_data = safe_read_yaml(self.config_file) or {}
        except (yaml.YAMLError, UnicodeDecodeError) as e:
            raise ConfigError(f"Configuration load error in {self.config_file}: {e}")
        if not isinstance(config_data, dict):
            raise ConfigValidationError(f"{self.config_file} must contain a mapping")

        config_data = self._migrate_config(config_data)
        try:
            return ConfigModel(**config_data)
        except ValidationError as e:
            raise ConfigValidationError(f"Invalid configuration in {self.config_file}: {e}")

    def _migrate_config(self, config_data: Dict[str, Any]) -> Dict[str, Any]:
        """Migrate configuration to current schema version"""
        current_version = config_data.get("version", 1)
        target_version = 1

        if current_version > target_version:
            raise ConfigValidationError(
                f"Config version {current_version} is newer than supported version {target_version}"
            )
        config_data["version"] = target_version
        return config_data

    def _apply_env_overrides(self, config: ConfigModel) -> ConfigModel:
        """Apply CHROMAGAP_BUDGET and CHROMAGAP_WORKERS"""
        budget = os.environ.get("CHROMAGAP_BUDGET")
        if budget:
            value = self._parse_env_int("CHROMAGAP_BUDGET", budget)
            for field in ENUMERATION_BUDGETS:
                setattr(config.budgets, field, value)
            self.logger.debug(f"Enumeration budgets overridden from environment: {value}")

        workers = os.environ.get("CHROMAGAP_WORKERS")
        if workers:
            config.workers = self._parse_env_int("CHROMAGAP_WORKERS", workers)
        return config

    @staticmethod
    def _parse_env_int(name: str, raw: str) -> int:
        try:
            value = int(raw)
        except ValueError:
            raise ConfigValidationError(f"{name} must be an integer, got '{raw}'")
        if value <= 0:
            raise ConfigValidationError(f"{name} must be positive, got {value}")
        return value

    def save_config(self) -> None:
        """Save configuration to the YAML file"""
        if self._config is None:
            raise ConfigError("No configuration to save")

        safe_write_yaml(self._config.model_dump(), self.config_file)
        self.logger.info(f"Configuration saved to {self.config_file}")

    def update_budgets(self, updates: Dict[str, int]) -> None:
        """Update budget fields in memory"""
        for key, value in updates.items():
            if not hasattr(self.config.budgets, key):
                raise ConfigValidationError(f"Unknown budget '{key}'")
            if value <= 0:
                raise ConfigValidationError(f"Budget '{key}' must be positive")
            setattr(self.config.budgets, key, value)

    def validate_config(self) -> List[str]:
        """Validate current configuration and return any errors"""
        errors = []
        budgets = self.config.budgets

        if budgets.deletion_contraction_max_edges > 64:
            errors.append("deletion_contraction_max_edges above 64 is not tractable")
        if budgets.forest_sample_cap > budgets.list_coloring_leaves:
            errors.append("forest_sample_cap exceeds list_coloring_leaves")
        if not self.config.verify.x_offsets:
            errors.append("verify.x_offsets must not be empty")
        if any(offset < -1 for offset in self.config.verify.x_offsets):
            errors.append("verify.x_offsets below -1 fall outside x >= m-1")

        return errors
