# -*- coding: utf-8 -*-
"""
形变参数化 ξ_j = t^{ℓ_j} + Σ ξ_{j,i} t^i s^{i−ℓ_j}（尾项指数 i > ℓ_j）。
"""

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterable, Mapping, Sequence, Tuple, Union

from lib.common.errors import InvalidTail, TailAtOrBelowBase
from lib.common.rendering import render_rational
from lib.numsg import NumericalSemigroup, make_semigroup
from lib.poly import TruncSeries

Tail = Tuple[Tuple[int, Fraction], ...]
Offset = Union[int, float]

GENERATOR_NAMES = ("x", "y", "z")


@dataclass(frozen=True)
class Parametrization:
    ell: int
    m: int
    n: int
    tails: Tuple[Tail, Tail, Tail]

    @property
    def weights(self) -> Tuple[int, int, int]:
        return (self.ell, self.m, self.n)

    @property
    def semigroup(self) -> NumericalSemigroup:
        return make_semigroup(self.ell, self.m, self.n)

    @property
    def offsets(self) -> Tuple[Offset, Offset, Offset]:
        """(Δℓ, Δm, Δn)，空尾项为 inf"""
        return tuple(
            tail[0][0] - base if tail else math.inf
            for base, tail in zip(self.weights, self.tails)
        )

    @property
    def delta(self) -> Offset:
        return min(self.offsets)

    @property
    def is_monomial(self) -> bool:
        return not any(self.tails)

    def generator_series(self, index: int, order: int, with_s: bool = True) -> TruncSeries:
        """
        第 index 个生成元的截断级数

        Args:
            index: 0,1,2 对应 ξ,η,ζ
            order: 截断阶
            with_s: False 时 s 特化为 1
        """
        base = self.weights[index]
        terms: Dict[Tuple[int, int], Fraction] = {(base, 0): Fraction(1)}
        for exponent, coeff in self.tails[index]:
            key = (exponent, exponent - base if with_s else 0)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return TruncSeries(terms, order)

    def without_s(self, order: int) -> Tuple[TruncSeries, TruncSeries, TruncSeries]:
        """s = 1 时的 (ξ′,η′,ζ′)"""
        return tuple(self.generator_series(j, order, with_s=False) for j in range(3))

    def render(self) -> str:
        parts = []
        for base, tail in zip(self.weights, self.tails):
            pieces = [f"t^{base}"]
            for exponent, coeff in tail:
                body = f"t^{exponent}" if coeff == 1 else f"{render_rational(coeff)}*t^{exponent}"
                pieces.append(body)
            parts.append(" + ".join(pieces))
        return "(" + ", ".join(parts) + ")"

    def to_dict(self):
        return {
            "l": self.ell,
            "m": self.m,
            "n": self.n,
            "tails": {
                name: [[exponent, render_rational(coeff)] for exponent, coeff in tail]
                for name, tail in zip(GENERATOR_NAMES, self.tails)
            },
            "offsets": list(self.offsets),
            "delta": self.delta,
        }


def _parse_coefficient(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise InvalidTail(f"系数必须是整数或有理数字符串，而不是 {value!r}")
    try:
        coeff = Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidTail(f"无法解析系数 {value!r}: {e}")
    if coeff == 0:
        raise InvalidTail("尾项系数不能为零")
    return coeff


def _normalize_tail(base: int, name: str, items: Iterable[Sequence[Any]]) -> Tail:
    seen = {}
    for item in items or ():
        if len(item) != 2:
            raise InvalidTail(f"{name} 的尾项必须是 [指数, 系数]: {item!r}")
        exponent, raw = item
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            raise InvalidTail(f"{name} 的尾项指数必须是整数: {exponent!r}")
        exponent = int(exponent)
        if exponent <= base:
            raise TailAtOrBelowBase(f"{name} 的尾项指数 {exponent} 不大于基指数 {base}")
        if exponent in seen:
            raise InvalidTail(f"{name} 的尾项指数 {exponent} 重复")
        seen[exponent] = _parse_coefficient(raw)
    return tuple(sorted(seen.items()))


def make_parametrization(ell: int, m: int, n: int, tails: Union[Mapping[str, Any], Sequence[Any], None] = None) -> Parametrization:
    """
    构造形变参数化

    Args:
        ell, m, n: 基指数（须生成数值半群）
        tails: {"x": [[i, c], ...], "y": ..., "z": ...} 或按 x,y,z 顺序的三个列表

    Returns:
        Parametrization

    Raises:
        TailAtOrBelowBase: 尾项指数 ≤ 基指数
        InvalidTail: 尾项格式或系数非法
    """
    S = make_semigroup(ell, m, n)
    if tails is None:
        tails = {}
    if isinstance(tails, Mapping):
        unknown = set(tails) - set(GENERATOR_NAMES)
        if unknown:
            raise InvalidTail(f"未知的生成元名 {sorted(unknown)}，应为 x/y/z")
        raw = [tails.get(name, []) for name in GENERATOR_NAMES]
    else:
        raw = list(tails)
        if len(raw) != 3:
            raise InvalidTail("尾项列表必须恰好包含三个分量")
    normalized = tuple(
        _normalize_tail(base, name, items)
        for base, name, items in zip(S.generators, GENERATOR_NAMES, raw)
    )
    return Parametrization(ell=S.ell, m=S.m, n=S.n, tails=normalized)


def parametrization_from_dict(data: Mapping[str, Any]) -> Parametrization:
    """从 {"l":5,"m":7,"n":13,"tails":{...}} 构造"""
    try:
        ell, m, n = data["l"], data["m"], data["n"]
    except KeyError as e:
        raise InvalidTail(f"参数化缺少字段 {e}")
    return make_parametrization(ell, m, n, data.get("tails"))


def load_parametrization(path: Union[str, Path]) -> Parametrization:
    """读取参数化 JSON 文件"""
    path = Path(path)
    try:
        with path.open("r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise InvalidTail(f"无法读取参数化文件 {path}: {e}")
    if not isinstance(data, Mapping):
        raise InvalidTail(f"参数化文件 {path} 的顶层必须是对象")
    return parametrization_from_dict(data)
