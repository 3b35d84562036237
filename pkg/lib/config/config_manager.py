import os
import yaml
import logging
from pathlib import Path
from typing import Dict, Any, Optional
from copy import deepcopy

from lib.common.errors import UsageError

logger = logging.getLogger(__name__)

# 仓库根目录（config/ 所在目录）
DEFAULT_CONFIG_ROOT = Path(__file__).resolve().parents[2] / "config"

SUPPORTED_ENVS = ['dev', 'test', 'prod']


class ConfigManager:
    def __init__(self, env: Optional[str] = None, config_root: Optional[str] = None):
        """
        初始化配置管理器
        :param env: 环境名称 (dev/test/prod)，如果为None则从环境变量 STCI_ENV 获取
        :param config_root: 配置根目录，默认使用仓库下的 config/
        """
        self.env = env or os.getenv('STCI_ENV', 'prod')
        if self.env not in SUPPORTED_ENVS:
            raise ValueError(f"不支持的环境: {self.env}，必须是 dev/test/prod 之一")

        root = Path(config_root) if config_root else DEFAULT_CONFIG_ROOT
        self.config_dir = root / self.env
        self.configs: Dict[str, Dict[str, Any]] = {}

        self._load_configs()

    def _load_configs(self):
        """加载指定环境下的所有配置文件"""
        if not self.config_dir.exists():
            raise ValueError(f"配置目录不存在: {self.config_dir}")

        for config_path in sorted(self.config_dir.glob('*.yaml')):
            component_name = config_path.stem
            with open(config_path, 'r', encoding='utf-8') as f:
                self.configs[component_name] = yaml.safe_load(f) or {}
            logger.debug(f"已加载配置: {config_path}")

    def _merge_config(self, common_config: Dict[str, Any], instance_config: Dict[str, Any]) -> Dict[str, Any]:
        """
        合并common配置和实例配置
        :param common_config: 公共配置
        :param instance_config: 实例配置
        :return: 合并后的配置
        """
        merged_config = deepcopy(common_config)
        merged_config.update(instance_config or {})
        return merged_config

    def get_component_config(self, component_name: str, instance_name: Optional[str] = None) -> Dict[str, Any]:
        """
        获取组件配置
        :param component_name: 组件名称
        :param instance_name: 实例名称（可选），如果为None则使用default_instance
        :return: 组件配置字典
        """
        if component_name not in self.configs:
            raise ValueError(f"未找到组件配置: {component_name}")

        config = self.configs[component_name]

        # 如果没有指定实例名，使用默认实例
        if instance_name is None:
            instance_name = config.get('default_instance')
            if not instance_name:
                if 'instances' in config and config['instances']:
                    instance_name = list(config['instances'].keys())[0]
                else:
                    # 没有instances结构时返回整个配置
                    return deepcopy(config)

        if 'instances' not in config:
            raise ValueError(f"组件 {component_name} 不支持多实例配置")
        if instance_name not in config['instances']:
            raise ValueError(f"未找到组件 {component_name} 的实例: {instance_name}")

        instance_config = config['instances'][instance_name] or {}

        if 'common' in config:
            return self._merge_config(config['common'], instance_config)
        return deepcopy(instance_config)

    def get_default_instance_name(self, component_name: str) -> Optional[str]:
        """
        获取组件的默认实例名称
        :param component_name: 组件名称
        :return: 默认实例名称
        """
        if component_name not in self.configs:
            raise ValueError(f"未找到组件配置: {component_name}")
        return self.configs[component_name].get('default_instance')

    def list_instances(self, component_name: str) -> list:
        """
        列出组件的所有实例名称
        :param component_name: 组件名称
        :return: 实例名称列表
        """
        if component_name not in self.configs:
            raise ValueError(f"未找到组件配置: {component_name}")
        return list((self.configs[component_name].get('instances') or {}).keys())


def truncation_override() -> Optional[int]:
    """
    读取环境变量 STCI_TRUNC 指定的截断阶

    Returns:
        Optional[int]: 未设置时返回 None

    Raises:
        UsageError: 取值不是正整数
    """
    raw = os.getenv('STCI_TRUNC')
    if raw is None or raw.strip() == '':
        return None
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"STCI_TRUNC 必须是正整数: {raw!r}")
    if value <= 0:
        raise UsageError(f"STCI_TRUNC 必须是正整数: {raw!r}")
    return value
