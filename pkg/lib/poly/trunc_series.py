# -*- coding: utf-8 -*-
"""
t,s 上的截断二元幂级数，deg t = 1, deg s = −1。

t 阶 ≥ T 的项被丢弃并记录在 truncated 标志中，截断从不静默发生。
"""

from fractions import Fraction
from typing import Dict, Optional, Tuple, Union

from lib.common.errors import ValuationOfZero, StciError
from lib.common.rendering import render_rational

Scalar = Union[int, Fraction]


class TruncSeries:
    """截断级数 Σ c·t^e_t·s^e_s (e_t < T)"""

    __slots__ = ("terms", "order", "truncated")

    def __init__(self, terms: Optional[Dict[Tuple[int, int], Scalar]] = None, order: int = 1, truncated: bool = False):
        if order <= 0:
            raise StciError(f"截断阶必须为正: {order}")
        self.order = int(order)
        self.truncated = bool(truncated)
        self.terms: Dict[Tuple[int, int], Fraction] = {}
        for (et, es), coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            if et >= self.order:
                self.truncated = True
                continue
            key = (int(et), int(es))
            value = self.terms.get(key, Fraction(0)) + coeff
            if value:
                self.terms[key] = value
            else:
                self.terms.pop(key, None)

    @classmethod
    def monomial(cls, coeff: Scalar, et: int, es: int = 0, order: int = 1) -> "TruncSeries":
        return cls({(et, es): coeff}, order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls({(0, 0): 1}, order)

    def _align(self, other: "TruncSeries"):
        order = min(self.order, other.order)
        return order, self.truncated or other.truncated

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order, truncated = self._align(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return TruncSeries(terms, order, truncated)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries({k: -c for k, c in self.terms.items()}, self.order, self.truncated)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        order, truncated = self._align(other)
        terms: Dict[Tuple[int, int], Fraction] = {}
        for (t1, s1), c1 in self.terms.items():
            if t1 >= order:
                truncated = True
                continue
            for (t2, s2), c2 in other.terms.items():
                et = t1 + t2
                if et >= order:
                    truncated = True
                    continue
                key = (et, s1 + s2)
                terms[key] = terms.get(key, Fraction(0)) + c1 * c2
        return TruncSeries(terms, order, truncated)

    __rmul__ = __mul__

    def scale(self, factor: Scalar) -> "TruncSeries":
        factor = Fraction(factor)
        return TruncSeries({k: c * factor for k, c in self.terms.items()}, self.order, self.truncated)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> int:
        """t-adic 赋值 υ：非零项中最小的 e_t"""
        if not self.terms:
            raise ValuationOfZero("零级数（在截断阶以下）没有赋值")
        return min(et for et, _ in self.terms)

    def initial_symbol(self) -> "TruncSeries":
        """最低 t 阶部分 σ"""
        v = self.valuation()
        return TruncSeries({k: c for k, c in self.terms.items() if k[0] == v}, self.order, self.truncated)

    def leading_coefficient(self) -> Fraction:
        """s 特化为 1 后最低 t 阶的系数"""
        v = self.valuation()
        return sum((c for (et, _), c in self.terms.items() if et == v), Fraction(0))

    def specialize_s(self, value: Scalar = 1) -> "TruncSeries":
        """代入 s = value，得到 t 的一元截断级数"""
        value = Fraction(value)
        terms: Dict[Tuple[int, int], Fraction] = {}
        for (et, es), coeff in self.terms.items():
            terms[(et, 0)] = terms.get((et, 0), Fraction(0)) + coeff * value ** es
        return TruncSeries(terms, self.order, self.truncated)

    def derivative_t(self) -> "TruncSeries":
        """对 t 求导（阶数降一，截断阶同步降一）"""
        terms = {(et - 1, es): c * et for (et, es), c in self.terms.items() if et > 0}
        return TruncSeries(terms, max(self.order - 1, 1), self.truncated)

    def graded_degrees(self) -> set:
        """各项 e_t − e_s 的集合，齐次代入时应为单元素"""
        return {et - es for et, es in self.terms}

    def coefficient(self, et: int, es: int = 0) -> Fraction:
        return self.terms.get((et, es), Fraction(0))

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for index, ((et, es), coeff) in enumerate(sorted(self.terms.items())):
            factors = []
            if es:
                factors.append("s" if es == 1 else f"s^{es}")
            if et:
                factors.append("t" if et == 1 else f"t^{et}")
            magnitude = abs(coeff)
            if not factors:
                body = render_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = render_rational(magnitude) + "*" + "*".join(factors)
            if index == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        suffix = f" + O(t^{self.order})" if self.truncated else ""
        return "".join(pieces) + suffix

    def __repr__(self):
        return f"TruncSeries({self.render()!r}, order={self.order})"


def series_arith(u: TruncSeries, v: Optional[TruncSeries], op: str, factor: Scalar = 1) -> TruncSeries:
    """
    级数运算分发

    Args:
        u, v: 操作数（scale 时忽略 v）
        op: add/sub/mul/scale
        factor: scale 的系数
    """
    if op == "add":
        return u + v
    if op == "sub":
        return u - v
    if op == "mul":
        return u * v
    if op == "scale":
        return u.scale(factor)
    raise StciError(f"未知的级数运算: {op}")
