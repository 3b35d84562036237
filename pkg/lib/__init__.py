# -*- coding: utf-8 -*-
"""
stcibox 公共库模块

提供数值半群、稀疏多项式、Herzog 关系、Bresinsky 约化与形变证书等计算组件
"""

import logging

__version__ = "1.0.0"

# 调用方未配置日志时库模块保持静默
logging.getLogger(__name__).addHandler(logging.NullHandler())
