# -*- coding: utf-8 -*-
"""
Bresinsky 约化：f₁^c = q·f₃ + x^k·g, k = a₁c₂。

按推导逐轮用 f₃ 把 z^c 换成 x^{a₁}y^{b₂}，共 c₂ 轮，余式被 x^k 整除。
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict

from lib.common.errors import InvalidParameters, ReductionFailure
from lib.herzog import DefiningEquations, HerzogData
from lib.poly import SparsePoly

logger = logging.getLogger(__name__)

# 只实现 (f₁,f₃) 与 x 幂次这一条路径
ROUTE = "f1,f3;x"


@dataclass(frozen=True)
class BresinskyData:
    q: SparsePoly
    k: int
    g: SparsePoly
    c: int
    residue_sign: int
    identity_verified: bool
    x_power: int
    q_degree: int
    g_degree: int
    route: str = ROUTE

    def to_dict(self):
        return {
            "c": self.c,
            "k": self.k,
            "q": self.q.render(),
            "g": self.g.render(),
            "residue_sign": self.residue_sign,
            "identity_verified": self.identity_verified,
            "x_power": self.x_power,
            "degrees": {"q": self.q_degree, "g": self.g_degree},
            "route": self.route,
        }


def _require_h1(H: HerzogData) -> None:
    if not H.is_h1:
        raise InvalidParameters("Bresinsky 约化只适用于 H1 情形")


def _reduce_round(terms: Dict, c: int, a1: int, b2: int, quotient: Dict) -> Dict:
    """对每个 z 次数 ≥ c 的项做一次替换 z^c → x^{a₁}y^{b₂}，乘子累加到商"""
    result: Dict = {}
    for (ex, ey, ez, es), coeff in terms.items():
        if ez >= c:
            multiplier = (ex, ey, ez - c, es)
            quotient[multiplier] = quotient.get(multiplier, Fraction(0)) + coeff
            key = (ex + a1, ey + b2, ez - c, es)
        else:
            key = (ex, ey, ez, es)
        result[key] = result.get(key, Fraction(0)) + coeff
    return {k: v for k, v in result.items() if v}


def bresinsky_reduce(E: DefiningEquations, H: HerzogData, crosscheck: bool = False) -> BresinskyData:
    """
    计算 f₁^c = q·f₃ + x^k·g

    Args:
        E: H1 定义方程
        H: 对应的 Herzog 数据
        crosscheck: 额外用 sympy 展开复核恒等式

    Returns:
        BresinskyData

    Raises:
        ReductionFailure: 恒等式、整除性或剩余检验失败
    """
    _require_h1(H)
    weights = E.f1.weights
    c, k = H.c, H.k
    power = E.f1 ** c
    remainder = dict(power.terms)
    quotient: Dict = {}
    for round_index in range(H.c2):
        remainder = _reduce_round(remainder, c, H.a1, H.b2, quotient)
        logger.debug(f"第 {round_index + 1} 轮替换后余式有 {len(remainder)} 项")
    if any(exp[2] >= c for exp in remainder):
        raise ReductionFailure(f"{H.c2} 轮替换后仍有 z 次数 ≥ {c} 的项")

    q = SparsePoly(quotient, weights)
    r = SparsePoly(remainder, weights)
    x_power = r.x_adic_order()
    if x_power is None or x_power < k:
        raise ReductionFailure(f"余式不被 x^{k} 整除（x 的幂次为 {x_power}）")
    g = r.divide_by_x(k)

    x_k = SparsePoly.monomial(1, k, weights=weights)
    verified = power == q * E.f3 + x_k * g
    if not verified:
        raise ReductionFailure("f₁^c ≠ q·f₃ + x^k·g")
    if crosscheck:
        import sympy

        difference = E.f1.to_sympy() ** c - q.to_sympy() * E.f3.to_sympy() - x_k.to_sympy() * g.to_sympy()
        if sympy.expand(difference) != 0:
            raise ReductionFailure("sympy 复核 f₁^c = q·f₃ + x^k·g 失败")

    residue = g.modulo_xz()
    ell = weights[0]
    expected = SparsePoly.monomial(1, 0, ell, weights=weights)
    if residue == expected:
        sign = 1
    elif residue == -expected:
        sign = -1
    else:
        raise ReductionFailure(f"g 模 ⟨x,z⟩ 为 {residue.render()}，不是 ±y^{ell}")

    d1, d3 = E.degrees[0], E.degrees[2]
    q_degree, g_degree = c * d1 - d3, c * d1 - k * ell
    if q.degrees() - {q_degree} or g.degrees() - {g_degree}:
        raise ReductionFailure(f"q 或 g 不是次数 {q_degree}/{g_degree} 的齐次多项式")
    return BresinskyData(
        q=q, k=k, g=g, c=c, residue_sign=sign, identity_verified=verified,
        x_power=x_power, q_degree=q_degree, g_degree=g_degree,
    )


def syzygy_check(E: DefiningEquations, H: HerzogData) -> bool:
    """
    验证 x^{a₁}f₂ = y^{b₁}f₃′ − z^{c₁}f₁ 与 z^{c₂}f₂ = x^{a₂}f₃′ − y^{b₂}f₁，其中 f₃′ = −f₃
    """
    _require_h1(H)
    w = E.f1.weights

    def mono(ex=0, ey=0, ez=0):
        return SparsePoly.monomial(1, ex, ey, ez, weights=w)

    f3_prime = -E.f3
    first = mono(ex=H.a1) * E.f2 == mono(ey=H.b1) * f3_prime - mono(ez=H.c1) * E.f1
    second = mono(ez=H.c2) * E.f2 == mono(ex=H.a2) * f3_prime - mono(ey=H.b2) * E.f1
    return first and second


def moh_check(ell: int, m: int, n: int) -> bool:
    """Moh 条件：gcd(ℓ,m)=1, ℓ<m, (ℓ−2)m<n"""
    return gcd(ell, m) == 1 and ell < m and (ell - 2) * m < n
