# -*- coding: utf-8 -*-
"""
三生成元数值半群模块
"""

from lib.numsg.semigroup import (  # noqa: F401
    NumericalSemigroup,
    GapData,
    make_semigroup,
    contains,
    gap_data,
    apery_set,
    factorize,
    membership_table,
    in_two_generated,
)
