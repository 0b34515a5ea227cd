import pytest

from chromagap.config.exceptions import ConfigError, ConfigValidationError
from chromagap.config.manager import ConfigManager
from chromagap.config.paths import get_config_file, get_data_dir, get_logs_dir, initialize_directories
from chromagap.models.config import ConfigModel
from chromagap.utils.file_utils import safe_read_yaml


class TestConfigManager:

    def test_first_run_detection(self, tmp_path):
        """No file means defaults"""
        config_manager = ConfigManager(tmp_path / "config.yaml")
        assert config_manager.is_first_run
        assert config_manager.config == ConfigModel()

        config_manager.config_file.touch()
        assert not ConfigManager(config_manager.config_file).is_first_run

    def test_default_location(self, isolated_config):
        assert get_config_file() == isolated_config / "config" / "chromagap" / "config.yaml"
        assert ConfigManager().config_file == get_config_file()

    def test_explicit_config_env(self, tmp_path, monkeypatch):
        path = tmp_path / "elsewhere.yaml"
        monkeypatch.setenv("CHROMAGAP_CONFIG", str(path))
        assert get_config_file() == path

    def test_load_yaml(self, write_file):
        path = write_file("config.yaml", "budgets:\n  list_coloring_leaves: 500\nworkers: 3\n")
        config = ConfigManager(path).config
        assert config.budgets.list_coloring_leaves == 500
        assert config.budgets.coloring_leaves == 10 ** 8
        assert config.workers == 3

    def test_empty_file_gives_defaults(self, write_file):
        assert ConfigManager(write_file("config.yaml", "")).config == ConfigModel()

    def test_invalid_yaml(self, write_file):
        with pytest.raises(ConfigError):
            ConfigManager(write_file("config.yaml", "budgets: [unclosed\n")).config

    def test_undecodable_file(self, tmp_path):
        path = tmp_path / "config.yaml"
        path.write_bytes(b"search:\n  seed: \xff\n")
        with pytest.raises(ConfigError):
            ConfigManager(path).config

    def test_not_a_mapping(self, write_file):
        with pytest.raises(ConfigValidationError):
            ConfigManager(write_file("config.yaml", "- 1\n- 2\n")).config

    def test_invalid_values(self, write_file):
        with pytest.raises(ConfigValidationError):
            ConfigManager(write_file("config.yaml", "budgets:\n  coloring_leaves: 0\n")).config

    def test_newer_version_rejected(self, write_file):
        with pytest.raises(ConfigValidationError):
            ConfigManager(write_file("config.yaml", "version: 2\n")).config

    def test_env_overrides(self, tmp_path, monkeypatch):
        monkeypatch.setenv("CHROMAGAP_BUDGET", "1000")
        monkeypatch.setenv("CHROMAGAP_WORKERS", "2")
        config = ConfigManager(tmp_path / "config.yaml").config
        assert config.budgets.coloring_leaves == 1000
        assert config.budgets.list_coloring_leaves == 1000
        assert config.budgets.assignment_evaluations == 1000
        assert config.budgets.forest_sample_cap == 10 ** 4
        assert config.workers == 2

    @pytest.mark.parametrize("raw", ["many", "0", "-3"])
    def test_bad_env_override(self, tmp_path, monkeypatch, raw):
        monkeypatch.setenv("CHROMAGAP_WORKERS", raw)
        with pytest.raises(ConfigValidationError):
            ConfigManager(tmp_path / "config.yaml").config

    def test_config_validation(self, tmp_path):
        """Defaults validate cleanly; inconsistent budgets are reported"""
        config_manager = ConfigManager(tmp_path / "config.yaml")
        assert config_manager.validate_config() == []

        config_manager.config.budgets.deletion_contraction_max_edges = 100
        config_manager.config.verify.x_offsets = [-4]
        errors = config_manager.validate_config()
        assert "deletion_contraction_max_edges above 64 is not tractable" in errors
        assert "verify.x_offsets below -1 fall outside x >= m-1" in errors

    def test_update_and_save(self, tmp_path):
        path = tmp_path / "nested" / "config.yaml"
        config_manager = ConfigManager(path)
        config_manager.update_budgets({"assignment_evaluations": 42})
        config_manager.save_config()

        assert safe_read_yaml(path)["budgets"]["assignment_evaluations"] == 42
        assert ConfigManager(path).config.budgets.assignment_evaluations == 42

    def test_update_rejects_unknown_budget(self, tmp_path):
        config_manager = ConfigManager(tmp_path / "config.yaml")
        with pytest.raises(ConfigValidationError):
            config_manager.update_budgets({"galaxies": 3})
        with pytest.raises(ConfigValidationError):
            config_manager.update_budgets({"coloring_leaves": 0})

    def test_save_without_config(self, tmp_path):
        with pytest.raises(ConfigError):
            ConfigManager(tmp_path / "config.yaml").save_config()


class TestDirectories:

    def test_initialize_directories(self, isolated_config):
        initialize_directories()
        assert get_logs_dir().is_dir()
        assert get_data_dir().is_dir()
        assert get_logs_dir().parent == isolated_config / "data" / "chromagap"
