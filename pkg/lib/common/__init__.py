# -*- coding: utf-8 -*-
"""
公共工具模块：异常体系与 JSON 渲染
"""

from lib.common.errors import *  # noqa: F401,F403
from lib.common.rendering import render_rational, to_jsonable, dumps_canonical  # noqa: F401
