# -*- coding: utf-8 -*-
"""
特殊族：M₀ = (z x y; y^b z x^a)，a,b ≥ 2, b+2 < 2a+1, gcd(b+2,2a+1)=1。

族内记号 a,b 与一般 Herzog 数据中的 a,b 不同：一般数据为
(a₁,a₂,b₁,b₂,c₁,c₂) = (1,a,1,b,1,1)，(A,B,C) = (a+1,b+1,2)。
"""

import logging
import math
from dataclasses import dataclass
from math import gcd
from typing import Any, Dict, Optional, Tuple

from lib.common.errors import InternalInconsistency, InvalidParameters, InvalidTail
from lib.deform import Inequality, Parametrization, make_parametrization
from lib.deform.one_form import tail_one_form_valuation
from lib.herzog import DefiningEquations, HerzogData, defining_equations, herzog_data
from lib.numsg import NumericalSemigroup, contains, gap_data, make_semigroup
from lib.poly import SparsePoly
from lib.stci import BresinskyData, bresinsky_reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FamilyInstance:
    a: int
    b: int
    semigroup: NumericalSemigroup
    herzog: HerzogData
    equations: DefiningEquations
    bresinsky: BresinskyData
    conductor: int

    k: int = 1
    c: int = 2

    @property
    def ell(self) -> int:
        return self.semigroup.ell

    @property
    def m(self) -> int:
        return self.semigroup.m

    @property
    def n(self) -> int:
        return self.semigroup.n

    @property
    def degrees(self) -> Tuple[int, int, int]:
        return self.equations.degrees

    @property
    def g(self) -> SparsePoly:
        return self.bresinsky.g

    @property
    def canonical_p(self) -> int:
        """γ − 1 − ℓ"""
        return self.conductor - 1 - self.ell

    def to_dict(self):
        return {
            "a": self.a,
            "b": self.b,
            "semigroup": self.semigroup.to_dict(),
            "conductor": self.conductor,
            "degrees": list(self.degrees),
            "equations": [p.render() for p in self.equations.polys],
            "g": self.g.render(),
            "k": self.k,
            "c": self.c,
            "sextuple": list(self.herzog.sextuple),
        }


def _check_parameters(a: int, b: int) -> None:
    if isinstance(a, bool) or isinstance(b, bool) or not isinstance(a, int) or not isinstance(b, int):
        raise InvalidParameters(f"a,b 必须是整数: ({a!r},{b!r})")
    if a < 2 or b < 2:
        raise InvalidParameters(f"要求 a,b ≥ 2: (a,b)=({a},{b})")
    if not b + 2 < 2 * a + 1:
        raise InvalidParameters(f"要求 b+2 < 2a+1（ℓ<m）: (a,b)=({a},{b})")
    if gcd(b + 2, 2 * a + 1) != 1:
        raise InvalidParameters(f"要求 gcd(b+2,2a+1)=1: gcd({b + 2},{2 * a + 1}) = {gcd(b + 2, 2 * a + 1)}")


def family_instance(a: int, b: int, crosscheck: bool = False) -> FamilyInstance:
    """
    构造族实例，并与一般的 Herzog/Bresinsky 计算交叉核对

    Args:
        a, b: 族参数
        crosscheck: 是否用 sympy 复核

    Returns:
        FamilyInstance

    Raises:
        InvalidParameters: 参数不满足族的条件（消息中给出具体条件）
        InternalInconsistency: 一般计算与族公式不符
    """
    _check_parameters(a, b)
    ell, m, n = b + 2, 2 * a + 1, a * b + b + 1
    S = make_semigroup(ell, m, n)
    H = herzog_data(S)
    if not H.is_h1 or H.sextuple != (1, a, 1, b, 1, 1):
        raise InternalInconsistency(f"({a},{b}): Herzog 数据 {H.to_dict()} 与 M₀ 的形状不符")
    E = defining_equations(S, H, crosscheck=crosscheck)
    B = bresinsky_reduce(E, H, crosscheck=crosscheck)

    w = S.generators

    def mono(coeff=1, ex=0, ey=0, ez=0):
        return SparsePoly.monomial(coeff, ex, ey, ez, weights=w)

    expected = (
        mono(ex=a + 1) - mono(ey=1, ez=1),
        mono(ey=b + 1) - mono(ex=a, ez=1),
        mono(ez=2) - mono(ex=1, ey=b),
    )
    if E.polys != expected:
        raise InternalInconsistency(f"({a},{b}): 定义方程与 f₁=x^(a+1)−yz 等公式不符")
    degrees = ((a + 1) * (b + 2), (2 * a + 1) * (b + 1), 2 * a * b + 2 * b + 2)
    if E.degrees != degrees or not degrees[0] < degrees[2] < degrees[1]:
        raise InternalInconsistency(f"({a},{b}): 次数 {E.degrees} 与族公式 {degrees} 不符")
    g = mono(ex=2 * a + 1) - mono(2, ex=a, ey=1, ez=1) + mono(ey=b + 2)
    if (B.k, B.c, B.g, B.q) != (1, 2, g, mono(ey=2)):
        raise InternalInconsistency(f"({a},{b}): Bresinsky 约化不是 f₁²−y²f₃ = xg")
    if n != (a + 1) * ell - m:
        raise InternalInconsistency(f"({a},{b}): n ≠ (a+1)ℓ−m")
    return FamilyInstance(a=a, b=b, semigroup=S, herzog=H, equations=E, bresinsky=B,
                          conductor=gap_data(S).conductor)


@dataclass(frozen=True)
class Lemma43Check:
    lhs: int
    mid: int
    rhs: int
    holds: bool
    gamma1: int
    d2_bound: bool
    d3_bound: bool

    def to_dict(self):
        return {
            "lhs": self.lhs, "mid": self.mid, "rhs": self.rhs, "holds": self.holds,
            "gamma1": self.gamma1,
            "d2_ge_gamma_plus_2l": self.d2_bound,
            "d3_gt_gamma_plus_l": self.d3_bound,
        }


def lemma43_check(F: FamilyInstance) -> Lemma43Check:
    """
    评估 γ+ℓ ≤ d₂ − ⌊m/ℓ⌋ℓ < d₃ 及由此得到的 d₂ ≥ γ+2ℓ、d₃ > γ+ℓ

    同时核对 ⟨ℓ,m⟩ 的导子 γ₁ = (ℓ−1)(m−1) 满足 γ₁+ℓ−1 = d₂。
    """
    gamma, ell, m = F.conductor, F.ell, F.m
    _, d2, d3 = F.degrees
    gamma1 = (ell - 1) * (m - 1)
    if gamma1 + ell - 1 != d2:
        raise InternalInconsistency(f"({F.a},{F.b}): γ₁+ℓ−1 = {gamma1 + ell - 1} ≠ d₂ = {d2}")
    lhs, mid = gamma + ell, d2 - (m // ell) * ell
    return Lemma43Check(
        lhs=lhs, mid=mid, rhs=d3, holds=lhs <= mid < d3, gamma1=gamma1,
        d2_bound=d2 >= gamma + 2 * ell, d3_bound=d3 > gamma + ell,
    )


def family_parametrization(F: FamilyInstance, p: Optional[int] = None, q: Optional[int] = None,
                           coeff=1) -> Parametrization:
    """(t^ℓ, t^m + c·t^p, t^n + c·t^q)，缺省的 p 或 q 表示该分量没有尾项"""
    tails: Dict[str, Any] = {}
    if p is not None:
        tails["y"] = [[p, coeff]]
    if q is not None:
        tails["z"] = [[q, coeff]]
    return make_parametrization(F.ell, F.m, F.n, tails)


def cor44_evaluate(F: FamilyInstance, p: Optional[int] = None, q: Optional[int] = None) -> Dict[str, Any]:
    """
    逐条评估证书条款 (a)(b)(c)

    Args:
        F: 族实例
        p: y 的尾项指数（None 表示无）
        q: z 的尾项指数（None 表示无）

    Returns:
        dict: delta、a、b、c 各条款的 {lhs, rhs, holds} 以及 canonical_p 等

    Raises:
        InvalidTail: p ≤ m 或 q ≤ n
    """
    if p is not None and p <= F.m:
        raise InvalidTail(f"要求 p > m: p={p}, m={F.m}")
    if q is not None and q <= F.n:
        raise InvalidTail(f"要求 q > n: q={q}, n={F.n}")
    lemma43 = lemma43_check(F)
    if not lemma43.holds:
        raise InternalInconsistency(f"({F.a},{F.b}): 导子界 {lemma43.to_dict()} 不成立")

    gamma, ell, m, n = F.conductor, F.ell, F.m, F.n
    d1 = F.degrees[0]
    p_offset = p - m if p is not None else math.inf
    q_offset = q - n if q is not None else math.inf
    delta = min(p_offset, q_offset)
    clause_a = Inequality(d1 + delta, gamma)
    clause_b = Inequality(d1 + delta, gamma + ell)

    applicable = F.a >= 3 and F.b >= 3
    canonical_p = F.canonical_p
    clause_c = Inequality(d1 + q_offset, gamma + ell)
    if applicable and canonical_p <= m:
        raise InternalInconsistency(f"({F.a},{F.b}): γ−1−ℓ = {canonical_p} 不大于 m = {m}")
    # (a−1)b ≥ 4 ⇔ d₁ + p − m ≥ γ+ℓ（p 取 γ−1−ℓ）
    if ((F.a - 1) * F.b >= 4) != (d1 + canonical_p - m >= gamma + ell):
        raise InternalInconsistency(f"({F.a},{F.b}): (a−1)b ≥ 4 与 d₁+p−m ≥ γ+ℓ 不等价")

    result: Dict[str, Any] = {
        "delta": delta,
        "a": clause_a.to_dict(),
        "b": clause_b.to_dict(),
        "c": dict(
            clause_c.to_dict(),
            applicable=applicable,
            holds=applicable and clause_c.holds and canonical_p > m,
            canonical_p=canonical_p,
            canonical_p_exceeds_m=canonical_p > m,
        ),
        "lemma43": lemma43.to_dict(),
    }
    if p is not None:
        valuation = tail_one_form_valuation(ell, m, p)
        result["one_form"] = {
            "valuation": valuation,
            "in_semigroup": contains(F.semigroup, valuation),
            "nonisomorphy_witness": not contains(F.semigroup, valuation),
        }
    logger.debug(f"({F.a},{F.b}) p={p} q={q}: {result}")
    return result
