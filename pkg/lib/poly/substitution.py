# -*- coding: utf-8 -*-
"""
多项式在形变参数化 (ξ,η,ζ,s) 处的分次代入。
"""

from typing import Dict, Optional, Tuple

from lib.common.errors import InternalInconsistency, WeightMismatch
from lib.poly.sparse_poly import SparsePoly
from lib.poly.trunc_series import TruncSeries


class PowerCache:
    """缓存 ξ^k、η^k、ζ^k 与单项式 ξ^α η^β ζ^γ s^e 的截断级数"""

    def __init__(self, parametrization, order: int, with_s: bool = True):
        self.order = order
        self.with_s = with_s
        self.weights = tuple(parametrization.weights)
        self.base = [parametrization.generator_series(j, order, with_s=with_s) for j in range(3)]
        self.powers: Dict[Tuple[int, int], TruncSeries] = {}
        self.monomials: Dict[Tuple[int, ...], TruncSeries] = {}

    def power(self, index: int, exponent: int) -> TruncSeries:
        if index == 3:
            return TruncSeries.monomial(1, 0, exponent if self.with_s else 0, self.order)
        if exponent == 0:
            return TruncSeries.one(self.order)
        key = (index, exponent)
        if key not in self.powers:
            half = self.power(index, exponent // 2)
            value = half * half
            if exponent % 2:
                value = value * self.base[index]
            self.powers[key] = value
        return self.powers[key]

    def monomial(self, exp) -> TruncSeries:
        key = tuple(exp) + (0,) * (4 - len(exp))
        if key not in self.monomials:
            result = TruncSeries.one(self.order)
            for index, e in enumerate(key):
                if e:
                    result = result * self.power(index, e)
            self.monomials[key] = result
        return self.monomials[key]


def substitute_param(p: SparsePoly, parametrization, order: int, with_s: bool = True,
                     cache: Optional[PowerCache] = None) -> TruncSeries:
    """
    把多项式 p 代入 (ξ,η,ζ,s)，在 t 阶 order 处截断

    齐次 p（加权次数 d）代入后每一项满足 e_t − e_s = d。

    Args:
        p: 多项式
        parametrization: 形变参数化（需提供 weights 与 generator_series）
        order: 截断阶 T
        with_s: False 时代入 s = 1
        cache: 可选的 PowerCache，阶与 with_s 须与本次调用一致

    Returns:
        TruncSeries: 代入结果
    """
    if tuple(parametrization.weights) != p.weights:
        raise WeightMismatch(f"参数化权重 {parametrization.weights} 与多项式权重 {p.weights} 不一致")
    if cache is None:
        cache = PowerCache(parametrization, order, with_s)
    elif (cache.order, cache.with_s, cache.weights) != (order, with_s, p.weights):
        raise InternalInconsistency(f"PowerCache(order={cache.order}, with_s={cache.with_s}) 与代入参数不一致")
    result = TruncSeries({}, order)
    for exp, coeff in p.terms.items():
        result = result + cache.monomial(exp).scale(coeff)
    return result
