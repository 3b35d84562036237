# -*- coding: utf-8 -*-
import json
import logging
import os
import subprocess
import sys

import pytest

from lib.common.errors import UsageError
from lib.config.config_manager import ConfigManager, truncation_override
from lib.logger.logger_manager import JsonFormatter, LoggerManager, get_logger, parse_level
from stcibox.script_template import ScriptTemplate

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


class TestConfigManager:
    def test_default_instance(self, config_manager):
        config = config_manager.get_component_config("stci")
        assert config["truncation_slack"] == 1
        assert config["max_subduction_rounds"] == 64
        assert config["sympy_crosscheck"] is True

    def test_instance_overrides_common(self, config_manager):
        config = config_manager.get_component_config("stci", "regression")
        assert config["truncation_slack"] == 8
        assert config["max_subduction_rounds"] == 128
        assert config["certificate_witnesses"] is True

    def test_instances(self, config_manager):
        assert config_manager.list_instances("stci") == ["default", "regression"]
        assert config_manager.get_default_instance_name("stci") == "default"

    def test_unknown_env(self):
        with pytest.raises(ValueError):
            ConfigManager(env="staging")

    def test_env_variable(self, monkeypatch):
        monkeypatch.setenv("STCI_ENV", "dev")
        assert ConfigManager().env == "dev"

    def test_unknown_component_or_instance(self, config_manager):
        with pytest.raises(ValueError):
            config_manager.get_component_config("missing_component")
        with pytest.raises(ValueError):
            config_manager.get_component_config("stci", "missing")

    def test_custom_root(self, tmp_path):
        (tmp_path / "test").mkdir()
        (tmp_path / "test" / "stci.yaml").write_text("truncation_slack: 3\n", encoding="utf-8")
        manager = ConfigManager(env="test", config_root=str(tmp_path))
        assert manager.get_component_config("stci") == {"truncation_slack": 3}


class TestTruncationOverride:
    def test_unset(self):
        assert truncation_override() is None

    def test_value(self, monkeypatch):
        monkeypatch.setenv("STCI_TRUNC", "120")
        assert truncation_override() == 120

    @pytest.mark.parametrize("raw", ["abc", "0", "-5"])
    def test_invalid(self, monkeypatch, raw):
        monkeypatch.setenv("STCI_TRUNC", raw)
        with pytest.raises(UsageError):
            truncation_override()


class TestLogger:
    def test_parse_level(self):
        assert parse_level("debug") == logging.DEBUG
        assert parse_level(None, logging.WARNING) == logging.WARNING
        assert parse_level(logging.ERROR) == logging.ERROR
        assert parse_level("nonsense") == logging.INFO

    def test_json_formatter_includes_extra(self):
        record = logging.LogRecord("lib.deform", logging.INFO, __file__, 1, "证书 %s", ("Certified",), None)
        record.semigroup = [5, 7, 13]
        data = json.loads(JsonFormatter().format(record))
        assert data["message"] == "证书 Certified"
        assert data["level"] == "INFO"
        assert data["semigroup"] == [5, 7, 13]

    def test_file_handler(self, tmp_path):
        manager = LoggerManager("stci-test", log_dir=str(tmp_path), level=logging.DEBUG, console=False)
        manager.info("写入文件", extra={"rows": 3})
        for handler in manager.logger.handlers:
            handler.flush()
        files = list(tmp_path.glob("stci-test_*.log"))
        assert len(files) == 1
        assert json.loads(files[0].read_text(encoding="utf-8").splitlines()[0])["rows"] == 3

    def test_set_level_reaches_library(self):
        manager = get_logger("stci-level", console=False)
        manager.set_level(logging.ERROR)
        assert logging.getLogger("lib").level == logging.ERROR
        assert manager.logger.level == logging.ERROR


class TestScriptTemplate:
    def test_config_and_logger(self):
        template = ScriptTemplate(env="test")
        assert template.env == "test"
        assert template.config["truncation_slack"] == 1
        assert template.instance == "default"
        assert logging.getLogger("lib").handlers == template.logger.handlers

    def test_unknown_instance(self):
        with pytest.raises(UsageError) as info:
            ScriptTemplate(env="test", instance="nightly")
        assert "regression" in str(info.value)

    def test_regression_instance(self):
        template = ScriptTemplate(env="test", instance="regression")
        assert template.instance == "regression"
        assert template.config["truncation_slack"] == 8
        assert template.config["max_subduction_rounds"] == 128

    def test_debug_flag(self):
        template = ScriptTemplate(env="test", debug=True)
        assert template.logger.level == logging.DEBUG

    def test_run_function(self):
        template = ScriptTemplate(env="test", instance="regression")
        assert template.run_function("get_component_config", component_name="stci")["truncation_slack"] == 1
        with pytest.raises(AttributeError):
            template.run_function("missing")
        with pytest.raises(ValueError):
            template.run_function("get_component_config", wrong=1)


class TestLibraryLogging:
    def test_warnings_silent_without_configuration(self):
        # 子约化轮数上限触发 WARNING；未配置日志的调用方不应在 stderr 看到它
        code = (
            "from lib.deform import make_parametrization, value_semigroup\n"
            "P = make_parametrization(5, 17, 28, {'y': [[18, 1]]})\n"
            "print(value_semigroup(P, 60, max_rounds=1).verdict)\n"
        )
        completed = subprocess.run([sys.executable, "-c", code], cwd=ROOT, capture_output=True, text=True)
        assert completed.returncode == 0
        assert completed.stdout.strip() == "Undetermined"
        assert completed.stderr == ""
