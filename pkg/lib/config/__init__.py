# -*- coding: utf-8 -*-
"""
配置管理模块
"""

from lib.config.config_manager import ConfigManager, truncation_override  # noqa: F401
