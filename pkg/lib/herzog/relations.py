# -*- coding: utf-8 -*-
"""
三生成元半群的 Herzog 极小关系与 H1/H2 分类。

a,b,c 取最小的正整数使 aℓ ∈ ⟨m,n⟩, bm ∈ ⟨ℓ,n⟩, cn ∈ ⟨ℓ,m⟩，见证分解用穷举搜索。
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from math import gcd
from typing import List, Optional, Tuple

from lib.common.errors import InternalInconsistency, NonUniqueH1Witness, StciError
from lib.numsg import NumericalSemigroup, in_two_generated

logger = logging.getLogger(__name__)

VARIABLE_NAMES = ("x", "y", "z")

# 纯二项关系的变量对，按检测顺序
PURE_PAIRS = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class HerzogData:
    """
    极小关系系数

    H1: 三行关系依次为 (a,−b₁,−c₂), (−a₂,b,−c₁), (−a₁,−b₂,c)。
    H2: 在置换后的变量 (permutation[0], permutation[1], permutation[2]) 下，
        第一关系 a·g_i = b·g_j，第二关系 c·g_k = a1·g_i + b2·g_j (0 ≤ a1 < a)；
        a2, b1, c1, c2 记为 0。
    """

    a: int
    b: int
    c: int
    a1: int
    a2: int
    b1: int
    b2: int
    c1: int
    c2: int
    case: str
    subcase: Optional[str] = None
    permutation: Tuple[int, int, int] = (0, 1, 2)
    overlap: bool = False
    overlap_matrix: Optional[int] = None
    relations: Tuple[Tuple[int, int, int], ...] = ()

    @property
    def is_h1(self) -> bool:
        return self.case == "H1"

    @property
    def sextuple(self) -> Tuple[int, int, int, int, int, int]:
        return (self.a1, self.a2, self.b1, self.b2, self.c1, self.c2)

    @property
    def k(self) -> int:
        """Bresinsky 约化中 x 的幂次 k = a1·c2（仅 H1 有意义）"""
        return self.a1 * self.c2 if self.is_h1 else 0

    @property
    def overlap_triple(self) -> Optional[Tuple[int, int, int]]:
        """重叠情形下 (bc, ac, ab)（按置换后的变量顺序）"""
        if not self.overlap:
            return None
        return (self.b * self.c, self.a * self.c, self.a * self.b)

    def to_dict(self):
        data = {
            "case": self.case,
            "a": self.a, "b": self.b, "c": self.c,
            "relations": [list(row) for row in self.relations],
        }
        if self.is_h1:
            data.update({
                "a1": self.a1, "a2": self.a2, "b1": self.b1,
                "b2": self.b2, "c1": self.c1, "c2": self.c2,
            })
        else:
            data.update({
                "a1": self.a1, "b2": self.b2,
                "subcase": self.subcase,
                "permutation": [VARIABLE_NAMES[i] for i in self.permutation],
                "overlap": self.overlap,
                "overlap_matrix": self.overlap_matrix,
            })
        return data


def _minimal_multiple(gens: Tuple[int, int, int], index: int) -> Tuple[int, List[Tuple[int, int]]]:
    """
    最小的 a > 0 使 a·g_index 属于另外两个生成元的半群，并返回全部分解

    Returns:
        (a, [(β,γ), ...])，分解按另两个生成元的原始顺序
    """
    others = [g for i, g in enumerate(gens) if i != index]
    g = gens[index]
    # a = others[0]·others[1] 时必然可表示
    for a in range(1, others[0] * others[1] + 1):
        decompositions = in_two_generated(a * g, others[0], others[1])
        if decompositions:
            return a, decompositions
    raise InternalInconsistency(f"未找到 {g} 的极小倍数")


def _check_rows(gens, rows) -> None:
    for row in rows:
        if sum(r * g for r, g in zip(row, gens)) != 0:
            raise InternalInconsistency(f"关系 {row} 不消去生成元 {gens}")


@lru_cache(maxsize=4096)
def _herzog_cached(gens: Tuple[int, int, int]) -> HerzogData:
    multiples = [_minimal_multiple(gens, i) for i in range(3)]
    values = [multiples[i][0] * gens[i] for i in range(3)]

    pure = [(i, j) for i, j in PURE_PAIRS if values[i] == values[j]]
    if not pure:
        positives = []
        for i in range(3):
            candidates = [d for d in multiples[i][1] if d[0] > 0 and d[1] > 0]
            if not candidates:
                raise InternalInconsistency(f"{gens}: 既无纯二项关系，{VARIABLE_NAMES[i]} 也无正分解")
            if len(candidates) > 1:
                raise NonUniqueH1Witness(f"{gens}: {VARIABLE_NAMES[i]} 的正分解不唯一 {candidates}")
            positives.append(candidates[0])
        a, b, c = (multiples[i][0] for i in range(3))
        (b1, c2), (a2, c1), (a1, b2) = positives
        if (a, b, c) != (a1 + a2, b1 + b2, c1 + c2):
            raise InternalInconsistency(f"{gens}: 系数和不满足 a=a1+a2, b=b1+b2, c=c1+c2")
        rows = ((a, -b1, -c2), (-a2, b, -c1), (-a1, -b2, c))
        _check_rows(gens, rows)
        return HerzogData(a=a, b=b, c=c, a1=a1, a2=a2, b1=b1, b2=b2, c1=c1, c2=c2,
                          case="H1", relations=rows)

    i, j = pure[0]
    k = 3 - i - j
    a, b, c = multiples[i][0], multiples[j][0], multiples[k][0]
    # 第二关系的规范化：取 a1 最小（必有 0 ≤ a1 < a）
    a1, b2 = in_two_generated(c * gens[k], gens[i], gens[j])[0]
    if a1 >= a:
        raise InternalInconsistency(f"{gens}: 第二关系未能规范化 (a1={a1}, a={a})")
    first = [0, 0, 0]
    first[i], first[j] = a, -b
    second = [0, 0, 0]
    second[i], second[j], second[k] = -a1, -b2, c
    rows = (tuple(first), tuple(second))
    _check_rows(gens, rows)
    overlap = len(pure) > 1
    return HerzogData(a=a, b=b, c=c, a1=a1, a2=0, b1=0, b2=b2, c1=0, c2=0,
                      case="H2", subcase=VARIABLE_NAMES[i] + VARIABLE_NAMES[j],
                      permutation=(i, j, k), overlap=overlap,
                      overlap_matrix=2 if overlap else None, relations=rows)


def herzog_data(S: NumericalSemigroup) -> HerzogData:
    """
    计算 Herzog 极小关系并判定 H1/H2

    Args:
        S: 半群

    Returns:
        HerzogData: 关系系数与情形标签

    Raises:
        NonUniqueH1Witness: H1 中正分解不唯一
        InternalInconsistency: 关系校验失败
    """
    data = _herzog_cached(S.generators)
    logger.debug(f"半群 {S.generators} 属于情形 {data.case}")
    return data


def lemma3_pair(S: NumericalSemigroup, H: HerzogData) -> Tuple[int, int]:
    """
    H1 中使 x^ñ − z^l̃ ∈ I 的最小 ñ 及对应 l̃

    (ñ, l̃) = (n, ℓ)/gcd(b1,b2)，并与独立刻画 ñ = n/gcd(ℓ,n) 相互校验。
    """
    if not H.is_h1:
        raise StciError("lemma3_pair 只适用于 H1 情形")
    g = gcd(H.b1, H.b2)
    if S.n % g or S.ell % g:
        raise InternalInconsistency(f"gcd(b1,b2)={g} 不整除 (n,ℓ)=({S.n},{S.ell})")
    n_tilde, l_tilde = S.n // g, S.ell // g
    if gcd(n_tilde, l_tilde) != 1 or n_tilde != S.n // gcd(S.ell, S.n):
        raise InternalInconsistency(f"(ñ,l̃)=({n_tilde},{l_tilde}) 与 ñ = n/gcd(ℓ,n) 不一致")
    return n_tilde, l_tilde
