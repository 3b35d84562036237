# -*- coding: utf-8 -*-
"""
逆构造：由 H1 的六元组或 H2 的 (a,b,c,a₁,b₂) 反求生成元，并判定是否为某个半群的像。
"""

import logging
from math import gcd
from typing import Any, Dict, List, Tuple

from lib.common.errors import DegenerateRelation, InternalInconsistency, InvalidParameters
from lib.herzog.relations import herzog_data
from lib.numsg import make_semigroup

logger = logging.getLogger(__name__)

Sextuple = Tuple[int, int, int, int, int, int]


def relation_matrix(sextuple: Sextuple) -> Tuple[Tuple[int, int, int], ...]:
    """六元组对应的 3×3 关系矩阵，行依次为 (a,−b₁,−c₂), (−a₂,b,−c₁), (−a₁,−b₂,c)"""
    a1, a2, b1, b2, c1, c2 = sextuple
    return ((a1 + a2, -b1, -c2), (-a2, b1 + b2, -c1), (-a1, -b2, c1 + c2))


def submaximal_minors(sextuple: Sextuple) -> List[List[int]]:
    """
    关系矩阵的 2×2 子式绝对值

    Returns:
        三个列表，第 j 个为删去第 j 列后三对行给出的子式绝对值
    """
    rows = relation_matrix(sextuple)
    result = []
    for column in range(3):
        keep = [j for j in range(3) if j != column]
        values = []
        for r, s in ((0, 1), (0, 2), (1, 2)):
            p, q = rows[r][keep[0]], rows[r][keep[1]]
            u, v = rows[s][keep[0]], rows[s][keep[1]]
            values.append(abs(p * v - q * u))
        result.append(values)
    return result


def _validate_sextuple(sextuple) -> Sextuple:
    values = tuple(sextuple)
    if len(values) != 6 or any(int(v) != v or v < 1 for v in values):
        raise InvalidParameters(f"六元组必须是六个正整数: {sextuple}")
    return tuple(int(v) for v in values)


def gs1_forward(sextuple: Sextuple) -> Tuple[int, int, int, int]:
    """
    由 (a₁,a₂,b₁,b₂,c₁,c₂) 求 (ℓ′,m′,n′,e′)

    Raises:
        InvalidParameters: 输入不是六个正整数
        InternalInconsistency: 三种等价公式不一致
    """
    a1, a2, b1, b2, c1, c2 = _validate_sextuple(sextuple)
    a, b, c = a1 + a2, b1 + b2, c1 + c2
    ell = b1 * c1 + b1 * c2 + b2 * c2
    m = a1 * c1 + a2 * c1 + a2 * c2
    n = a1 * b1 + a1 * b2 + a2 * b2
    if (ell, m, n) != (b * c - b2 * c1, a * c - a1 * c2, a * b - a2 * b1):
        raise InternalInconsistency(f"{sextuple}: 展开式与 bc−b₂c₁ 等形式不一致")
    for expected, minors in zip((ell, m, n), submaximal_minors((a1, a2, b1, b2, c1, c2))):
        if any(v != expected for v in minors):
            raise InternalInconsistency(f"{sextuple}: 子式 {minors} 与 {expected} 不一致")
    return ell, m, n, gcd(gcd(ell, m), n)


def gs1_is_image(sextuple: Sextuple) -> bool:
    """
    六元组是否为某个 H1 半群的 Herzog 数据（当且仅当 e′=1），为真时校验往返

    Raises:
        InternalInconsistency: e′=1 但重算结果不等于输入
    """
    ell, m, n, e = gs1_forward(sextuple)
    if e != 1:
        return False
    H = herzog_data(make_semigroup(ell, m, n))
    if not H.is_h1 or H.sextuple != tuple(sextuple):
        raise InternalInconsistency(f"{sextuple}: 往返失败，重算得到 {H.to_dict()}")
    return True


def _validate_h2(a, b, c, a1, b2) -> None:
    if any(int(v) != v for v in (a, b, c, a1, b2)):
        raise InvalidParameters(f"参数必须是整数: {(a, b, c, a1, b2)}")
    if min(a, b, c) < 1 or min(a1, b2) < 0:
        raise InvalidParameters(f"要求 a,b,c ≥ 1 且 a₁,b₂ ≥ 0: {(a, b, c, a1, b2)}")


def gs2_forward(a: int, b: int, c: int, a1: int, b2: int) -> Tuple[int, int, int, int]:
    """
    由 H2 数据求 (ℓ′,m′,n′,d′)，n′/d′ = (a₁b+ab₂)/c 为既约分数

    Raises:
        DegenerateRelation: a₁b+ab₂ = 0
    """
    _validate_h2(a, b, c, a1, b2)
    numerator = a1 * b + a * b2
    if numerator == 0:
        raise DegenerateRelation(f"a₁b+ab₂ = 0: {(a, b, c, a1, b2)}")
    g = gcd(numerator, c)
    d = c // g
    return b * d, a * d, numerator // g, d


def gs2_analysis(a: int, b: int, c: int, a1: int, b2: int) -> Dict[str, Any]:
    """
    逐项检查 H2 像的判定条件

    Returns:
        dict: forward、coprime_ab、coprime_shifts、gcd_one、recomputed、relations_match、is_image、reasons
    """
    ell, m, n, d = gs2_forward(a, b, c, a1, b2)
    reasons = []
    cond_a = gcd(a, b) == 1
    if not cond_a:
        reasons.append(f"gcd(a,b) = {gcd(a, b)} ≠ 1")
    failing_q = [q for q in range(a1 // a + 1) if gcd(gcd(-a1 + q * a, -b2 - q * b), c) != 1]
    cond_b = not failing_q
    if not cond_b:
        reasons.append(f"q ∈ {failing_q} 时 gcd(−a₁+qa, −b₂−qb, c) ≠ 1")
    gcd_one = gcd(gcd(ell, m), n) == 1
    analysis: Dict[str, Any] = {
        "forward": {"l": ell, "m": m, "n": n, "d": d},
        "coprime_ab": cond_a,
        "coprime_shifts": cond_b,
        "gcd_one": gcd_one,
        "recomputed": None,
        "relations_match": False,
    }
    if not gcd_one:
        reasons.append(f"gcd({ell},{m},{n}) ≠ 1")
    else:
        H = herzog_data(make_semigroup(ell, m, n))
        analysis["recomputed"] = H.to_dict()
        # 第二关系模第一关系化到 0 ≤ a₁ < a
        q = a1 // a
        canonical = (a1 - q * a, b2 + q * b, c)
        if H.is_h1:
            reasons.append(f"({ell},{m},{n}) 属于情形 H1")
        elif H.permutation != (0, 1, 2) or (H.a, H.b) != (a, b):
            reasons.append(f"(a,−b,0) 不是极小关系，重算的第一关系为 {list(H.relations[0])}")
        elif (H.a1, H.b2, H.c) != canonical:
            reasons.append(f"(−a₁,−b₂,c) 不是极小关系，重算的第二关系为 {list(H.relations[1])}")
        else:
            analysis["relations_match"] = True
    analysis["is_image"] = cond_a and cond_b and gcd_one and analysis["relations_match"]
    if cond_a and cond_b and gcd_one and not analysis["relations_match"]:
        logger.debug(f"{(a, b, c, a1, b2)} 满足数值条件但重算关系不符")
    analysis["reasons"] = reasons
    return analysis


def gs2_is_image(a: int, b: int, c: int, a1: int, b2: int) -> bool:
    """
    (a,b,c,a₁,b₂) 是否为某个 xy 型 H2 半群的极小关系数据
    """
    return gs2_analysis(a, b, c, a1, b2)["is_image"]
