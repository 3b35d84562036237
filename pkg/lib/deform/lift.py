# -*- coding: utf-8 -*-
"""
关系提升：求 f′_i 使 f_i(ξ,η,ζ) = f′_i(ξ,η,ζ,s)·s，并记 F_i = f_i − f′_i·s。

贪心剥离余式的最低 t 阶项 c·t^u·s^v：把 u 分解为 αℓ+βm+γn，
减去 c·ξ^α η^β ζ^γ s^v，并把 c·x^α y^β z^γ s^{v−1} 累加到 f′_i。
"""

import logging
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple, Union

from lib.common.errors import InternalInconsistency, SemigroupJump, TruncationExhausted
from lib.deform.parametrization import Parametrization
from lib.herzog import DefiningEquations
from lib.numsg import contains, factorize
from lib.poly import PowerCache, SparsePoly, substitute_param

logger = logging.getLogger(__name__)

Margin = Union[int, float]


@dataclass(frozen=True)
class LiftResult:
    f_prime: Tuple[SparsePoly, ...]
    F: Tuple[SparsePoly, ...]
    ord_margins: Tuple[Margin, ...]
    x_divisibility: Dict[str, Optional[int]]
    fallbacks: Tuple[Tuple[int, int], ...]
    truncation: int
    verified: bool

    def to_dict(self):
        return {
            "f_prime": [p.render() for p in self.f_prime],
            "F": [p.render() for p in self.F],
            "ord_margins": list(self.ord_margins),
            "x_divisibility": dict(self.x_divisibility),
            "fallbacks": [{"relation": i + 1, "value": u} for i, u in self.fallbacks],
            "truncation": self.truncation,
            "identity_verified": self.verified,
        }


def _lift_one(index: int, f: SparsePoly, degree: int, P: Parametrization, cache: PowerCache,
              preferred_x: int, fallbacks: List[Tuple[int, int]]) -> SparsePoly:
    S = P.semigroup
    T = cache.order
    weights = f.weights
    residual = substitute_param(f, P, T, with_s=True, cache=cache)
    lifted: Dict[Tuple[int, int, int, int], object] = {}
    steps = 0
    while not residual.is_zero():
        u = residual.valuation()
        # 齐次代入：u 处只有 s 次数 u − d 的一项
        v = u - degree
        coeff = residual.coefficient(u, v)
        if len(residual.initial_symbol().terms) != 1 or coeff == 0 or v < 1:
            raise InternalInconsistency(f"f{index + 1} 的代入结果在 t^{u} 处不是齐次的")
        if not contains(S, u):
            raise SemigroupJump(u, index)
        exps = None
        if preferred_x:
            exps = factorize(S, u, min_x=preferred_x)
            if exps is None:
                fallbacks.append((index, u))
                logger.debug(f"f{index + 1}: {u} 没有 α ≥ {preferred_x} 的分解，改用一般分解")
        if exps is None:
            exps = factorize(S, u)
        alpha, beta, gamma = exps
        correction = cache.monomial((alpha, beta, gamma, v)).scale(coeff)
        residual = residual - correction
        key = (alpha, beta, gamma, v - 1)
        lifted[key] = lifted.get(key, 0) + coeff
        steps += 1
    logger.debug(f"f{index + 1} 提升完成，共剥离 {steps} 项")
    return SparsePoly(lifted, weights)


def lift_relations(E: DefiningEquations, P: Parametrization, T: int, k: int = 0) -> LiftResult:
    """
    提升全部定义方程

    Args:
        E: 定义方程
        P: 形变参数化（权重须与 E 一致）
        T: 截断阶
        k: f′₁、f′₃ 优先使用 α ≥ k 的分解

    Returns:
        LiftResult

    Raises:
        SemigroupJump: 余式赋值不在 Γ 中
        TruncationExhausted: T 不足以确认 ord(f′_i(x,y,z,1)) ≥ d_i + δ
        InternalInconsistency: 提升后恒等式不成立
    """
    delta = P.delta
    for index, degree in enumerate(E.degrees):
        if delta != math.inf and T <= degree + delta:
            raise TruncationExhausted(
                f"截断阶 T={T} 不超过 d{index + 1}+δ={degree + delta}，无法确认提升的阶"
            )

    s = SparsePoly.variable("s", E.polys[0].weights)
    cache = PowerCache(P, T, with_s=True)
    f_prime: List[SparsePoly] = []
    F: List[SparsePoly] = []
    margins: List[Margin] = []
    fallbacks: List[Tuple[int, int]] = []
    for index, (f, degree) in enumerate(zip(E.polys, E.degrees)):
        preferred = k if index in (0, 2) and len(E.polys) == 3 else 0
        lifted = _lift_one(index, f, degree, P, cache, preferred, fallbacks)
        if not (substitute_param(f, P, T, cache=cache) - substitute_param(lifted * s, P, T, cache=cache)).is_zero():
            raise InternalInconsistency(f"f{index + 1}(ξ) ≠ f′{index + 1}(ξ,s)·s")
        if lifted.degrees() - {degree + 1}:
            raise InternalInconsistency(f"f′{index + 1} 不是加权次数 {degree + 1} 的齐次多项式")
        if lifted.is_zero():
            margin: Margin = math.inf
        else:
            margin = lifted.specialize_s(1).weighted_order() - degree
            if margin < delta:
                raise InternalInconsistency(f"ord(f′{index + 1}(x,1)) − d{index + 1} = {margin} < δ = {delta}")
        f_prime.append(lifted)
        F.append(f - lifted * s)
        margins.append(margin)

    if len(E.polys) == 3:
        divisibility = {"f1": f_prime[0].x_adic_order(), "f3": f_prime[2].x_adic_order()}
    else:
        divisibility = {f"f{i + 1}": p.x_adic_order() for i, p in enumerate(f_prime)}
    if fallbacks:
        logger.warning(f"有 {len(fallbacks)} 步提升未能使用 x^{k} 的倍数")
    return LiftResult(
        f_prime=tuple(f_prime), F=tuple(F), ord_margins=tuple(margins),
        x_divisibility=divisibility, fallbacks=tuple(fallbacks), truncation=T, verified=True,
    )
