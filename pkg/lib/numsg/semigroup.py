# -*- coding: utf-8 -*-
"""
数值半群 Γ=⟨ℓ,m,n⟩ 的精确算术：成员判定、间隙、Frobenius 数、导子、Apéry 集与分解。

所有对象构造后不可变，函数均为纯函数，可在多个执行上下文中并发使用。
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd
from typing import List, Optional, Tuple

from lib.common.errors import NotMember, NotNumerical, ZeroGenerator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NumericalSemigroup:
    """半群 Γ=⟨ℓ,m,n⟩，d = gcd(ℓ,m)"""

    ell: int
    m: int
    n: int
    d: int = field(compare=False)

    @property
    def generators(self) -> Tuple[int, int, int]:
        return (self.ell, self.m, self.n)

    def to_dict(self):
        return {"l": self.ell, "m": self.m, "n": self.n, "d": self.d}


@dataclass(frozen=True)
class GapData:
    gaps: Tuple[int, ...]
    frobenius: int
    conductor: int

    def to_dict(self):
        return {"gaps": list(self.gaps), "frobenius": self.frobenius, "conductor": self.conductor}


def make_semigroup(ell: int, m: int, n: int) -> NumericalSemigroup:
    """
    构造半群记录

    Args:
        ell, m, n: 生成元

    Returns:
        NumericalSemigroup: d = gcd(ℓ,m)

    Raises:
        ZeroGenerator: 存在非正生成元
        NotNumerical: gcd(ℓ,m,n) ≠ 1
    """
    for value in (ell, m, n):
        if int(value) != value or value <= 0:
            raise ZeroGenerator(f"生成元必须是正整数: ({ell},{m},{n})")
    ell, m, n = int(ell), int(m), int(n)
    if gcd(gcd(ell, m), n) != 1:
        raise NotNumerical(f"gcd({ell},{m},{n}) = {gcd(gcd(ell, m), n)} ≠ 1，不是数值半群")
    return NumericalSemigroup(ell=ell, m=m, n=n, d=gcd(ell, m))


@lru_cache(maxsize=256)
def _table(generators: Tuple[int, int, int], size: int) -> Tuple[bool, ...]:
    reachable = [False] * size
    if size:
        reachable[0] = True
    for k in range(1, size):
        reachable[k] = any(k >= g and reachable[k - g] for g in generators)
    return tuple(reachable)


def membership_table(S: NumericalSemigroup, upto: int) -> Tuple[bool, ...]:
    """
    动态规划成员表

    Args:
        S: 半群
        upto: 表覆盖 0..upto

    Returns:
        长度为 upto+1 的布尔元组，第 k 位表示 k ∈ Γ
    """
    # 按 2 的幂取整，减少缓存条目
    size = 64
    while size < upto + 1:
        size *= 2
    return _table(S.generators, size)[: upto + 1]


def contains(S: NumericalSemigroup, k: int) -> bool:
    """k 是否可写为 αℓ+βm+γn（α,β,γ ≥ 0）"""
    if k < 0:
        return False
    return membership_table(S, k)[k]


def in_two_generated(k: int, u: int, v: int) -> List[Tuple[int, int]]:
    """
    k 在 ⟨u,v⟩ 中的全部分解 (β,γ)，k = βu + γv，按 β 升序
    """
    result = []
    for beta in range(k // u + 1):
        rest = k - beta * u
        if rest % v == 0:
            result.append((beta, rest // v))
    return result


def _gap_bound(S: NumericalSemigroup) -> Optional[int]:
    # ⟨ℓ,m⟩ 互素时其导子 (ℓ−1)(m−1) 控制 Γ 的导子
    for u, v in ((S.ell, S.m), (S.ell, S.n), (S.m, S.n)):
        if gcd(u, v) == 1:
            return (u - 1) * (v - 1)
    return None


@lru_cache(maxsize=256)
def gap_data(S: NumericalSemigroup) -> GapData:
    """
    计算间隙集合、Frobenius 数与导子 γ

    Args:
        S: 半群

    Returns:
        GapData: 无间隙时 frobenius = -1, conductor = 0
    """
    bound = _gap_bound(S)
    if bound is None:
        # 没有互素的生成元对，扫描到出现 min(生成元) 个连续成员为止
        smallest = min(S.generators)
        upto = 64
        while True:
            table = membership_table(S, upto)
            run = 0
            last_gap = -1
            for k, member in enumerate(table):
                if member:
                    run += 1
                    if run >= smallest:
                        break
                else:
                    run = 0
                    last_gap = k
            if run >= smallest:
                bound = last_gap + 1
                break
            upto *= 2
    table = membership_table(S, max(bound, 0))
    gaps = tuple(k for k in range(bound + 1) if not table[k])
    frobenius = gaps[-1] if gaps else -1
    logger.debug(f"半群 {S.generators} 的导子为 {frobenius + 1}")
    return GapData(gaps=gaps, frobenius=frobenius, conductor=frobenius + 1)


def apery_set(S: NumericalSemigroup, w: int) -> List[int]:
    """
    Apéry 集：对每个模 w 剩余类，取 Γ 中该类的最小元

    Args:
        S: 半群
        w: Γ 中的正元素

    Returns:
        List[int]: 下标为剩余类

    Raises:
        NotMember: w ∉ Γ 或 w ≤ 0
    """
    if w <= 0 or not contains(S, w):
        raise NotMember(f"{w} 不是 Γ={S.generators} 的正元素")
    conductor = gap_data(S).conductor
    table = membership_table(S, conductor + w)
    result: List[Optional[int]] = [None] * w
    for k, member in enumerate(table):
        if member and result[k % w] is None:
            result[k % w] = k
    return [int(v) for v in result]


def factorize(S: NumericalSemigroup, k: int, min_x: int = 0) -> Optional[Tuple[int, int, int]]:
    """
    求 k = αℓ+βm+γn 且 α ≥ min_x 的分解

    按 (γ, β) 字典序取最小者，即优先使用 x 的幂。

    Args:
        S: 半群
        k: 待分解的非负整数
        min_x: α 的下界

    Returns:
        Optional[Tuple[int, int, int]]: (α,β,γ)，不可表示时为 None
    """
    if k < 0:
        return None
    for gamma in range(k // S.n + 1):
        rest_z = k - gamma * S.n
        for beta in range(rest_z // S.m + 1):
            rest = rest_z - beta * S.m
            if rest % S.ell == 0 and rest // S.ell >= min_x:
                return (rest // S.ell, beta, gamma)
    return None
