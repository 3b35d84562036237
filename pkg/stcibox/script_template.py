#!/usr/bin/env python
# -*- coding: utf-8 -*-

import inspect
import logging
import time
from typing import Any, Dict, Optional

from lib.common.errors import UsageError
from lib.config.config_manager import ConfigManager
from lib.logger.logger_manager import LoggerManager, get_logger, parse_level

COMPONENT = "stci"


class ScriptTemplate:
    """脚本模板基类，提供配置、日志与反射执行"""

    def __init__(self, env: Optional[str] = None, instance: Optional[str] = None, debug: bool = False):
        """
        初始化脚本模板

        Args:
            env: 环境名称 (dev/test/prod)，如果为None则使用默认环境
            instance: stci 组件的实例名称，None 使用配置中的 default_instance
            debug: 是否启用调试日志

        Raises:
            UsageError: 实例名称不在配置中
        """
        # 先创建配置管理器
        self.config_manager = ConfigManager(env=env)
        self.env = self.config_manager.env
        self.instance = instance or self.config_manager.get_default_instance_name(COMPONENT)
        available = self.config_manager.list_instances(COMPONENT)
        if self.instance is not None and self.instance not in available:
            raise UsageError(f"未知的 {COMPONENT} 实例: {self.instance}，可选: {', '.join(available)}")
        self.config = self.get_component_config(COMPONENT, self.instance)

        # 然后设置日志
        self.log_manager = self._setup_logger(debug)
        self.logger = self.log_manager.logger

    def _setup_logger(self, debug: bool = False) -> LoggerManager:
        """按 stci 配置创建日志管理器，库模块 (lib.*) 共用同一组处理器"""
        level = logging.DEBUG if debug else parse_level(self.config.get('log_level'), logging.WARNING)
        manager = get_logger(
            name=self.__class__.__name__,
            log_dir=self.config.get('log_dir'),
            level=level,
            format=self.config.get('log_format', 'json'),
        )
        library_logger = logging.getLogger('lib')
        library_logger.handlers = list(manager.logger.handlers)
        library_logger.propagate = False
        manager.set_level(level)
        manager.debug(f"日志系统初始化完成，环境 {self.env}，实例 {self.instance}，级别 {logging.getLevelName(level)}")
        return manager

    def get_component_config(self, component_name: str, instance_name: Optional[str] = None) -> Dict[str, Any]:
        """
        获取组件配置

        Args:
            component_name: 组件名称
            instance_name: 实例名称（可选）

        Returns:
            Dict[str, Any]: 组件配置
        """
        return self.config_manager.get_component_config(component_name, instance_name)

    def run_function(self, function_name: str, **kwargs) -> Any:
        """
        通过反射执行指定的函数

        Args:
            function_name: 要执行的函数名
            **kwargs: 传递给函数的参数

        Returns:
            函数的返回值

        Raises:
            AttributeError: 当指定的函数不存在时
            ValueError: 参数与函数签名不匹配
        """
        if not hasattr(self, function_name):
            raise AttributeError(f"函数 {function_name} 不存在")

        function = getattr(self, function_name)

        # 验证参数
        try:
            inspect.signature(function).bind(**kwargs)
        except TypeError as e:
            raise ValueError(f"函数 {function_name} 参数错误: {str(e)}")

        start_time = time.time()
        try:
            result = function(**kwargs)
            execution_time = time.time() - start_time
            self.logger.info(f"函数 {function_name} 执行完成，耗时: {execution_time:.2f}秒")
            return result
        except Exception:
            execution_time = time.time() - start_time
            self.logger.error(f"函数 {function_name} 执行失败，耗时: {execution_time:.2f}秒")
            raise
