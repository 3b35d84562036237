# -*- coding: utf-8 -*-
"""
单项式曲线的集合论完全交：Bresinsky 约化、合冲恒等式与 Moh 条件
"""

from lib.stci.bresinsky import (  # noqa: F401
    BresinskyData,
    ROUTE,
    bresinsky_reduce,
    moh_check,
    syzygy_check,
)
