# -*- coding: utf-8 -*-
"""
稀疏多项式与截断级数模块
"""

from lib.poly.sparse_poly import SparsePoly, poly_arith, VARIABLES  # noqa: F401
from lib.poly.trunc_series import TruncSeries, series_arith  # noqa: F401
from lib.poly.substitution import PowerCache, substitute_param  # noqa: F401
