# -*- coding: utf-8 -*-
"""
JSON 渲染工具

有理数一律序列化为 "p/q" 字符串，无穷大序列化为 "inf"，保证输出逐字节稳定。
"""

import json
import math
from fractions import Fraction
from typing import Any


def render_rational(value: Fraction) -> str:
    """
    有理数规范化字符串

    Args:
        value: 有理数

    Returns:
        str: 分母为 1 时为整数形式，否则为 "p/q"
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_jsonable(obj: Any) -> Any:
    """递归地把结果对象转换为可 JSON 序列化的结构"""
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return render_rational(obj)
    if isinstance(obj, float):
        if math.isinf(obj):
            return "inf" if obj > 0 else "-inf"
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(v) for v in items]
    return str(obj)


def dumps_canonical(obj: Any, indent: int = 2) -> str:
    """按键排序输出 JSON"""
    return json.dumps(to_jsonable(obj), sort_keys=True, ensure_ascii=False, indent=indent)
