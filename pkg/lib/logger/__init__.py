# -*- coding: utf-8 -*-
"""
日志管理模块
"""

from lib.logger.logger_manager import LoggerManager, JsonFormatter, get_logger, parse_level  # noqa: F401
