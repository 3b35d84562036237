# -*- coding: utf-8 -*-
"""
形变曲线 (ξ′,η′,ζ′)（s = 1）的值半群：子约化 (subduction) 到不动点。

对当前导子以下每个有两种以上单项式表示的值，取字典序最小的表示与其余表示配对，
相减消去首项后继续约化；若赋值落在当前半群之外，即得到新的生成元。
导子以上的值都已属于半群，因此只需截断阶 T 大于 Γ 的导子。
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from lib.common.errors import TruncationTooSmall
from lib.deform.parametrization import Parametrization
from lib.numsg import contains, gap_data
from lib.poly import TruncSeries

logger = logging.getLogger(__name__)

EQUALS_GAMMA = "EqualsGamma"
EXCEEDS_GAMMA = "ExceedsGamma"
UNDETERMINED = "Undetermined"

BASE_LABELS = ("x", "y", "z")


@dataclass(frozen=True)
class ValueSemigroupResult:
    values: Tuple[int, ...]
    verdict: str
    extra: Tuple[int, ...] = ()
    witnesses: Tuple[dict, ...] = ()
    reason: Optional[str] = None
    truncation: int = 0
    rounds: int = 0
    basis_values: Tuple[int, ...] = field(default=())

    @property
    def equals_gamma(self) -> bool:
        return self.verdict == EQUALS_GAMMA

    def to_dict(self):
        data = {
            "verdict": self.verdict,
            "extra_values": list(self.extra),
            "witnesses": list(self.witnesses),
            "truncation": self.truncation,
            "rounds": self.rounds,
            "basis_values": list(self.basis_values),
        }
        if self.reason:
            data["reason"] = self.reason
        return data


def _strip(exponents: Tuple[int, ...]) -> Tuple[int, ...]:
    end = len(exponents)
    while end and exponents[end - 1] == 0:
        end -= 1
    return exponents[:end]


class _Subduction:
    """子约化的工作状态：基、幂缓存与当前半群成员表"""

    def __init__(self, generators: List[TruncSeries], values: List[int], order: int):
        self.order = order
        self.basis = list(generators)
        self.values = list(values)
        self.powers: Dict[Tuple[int, int], TruncSeries] = {}
        self.products: Dict[Tuple[int, ...], TruncSeries] = {}
        self.refresh()

    def refresh(self) -> None:
        member = [False] * self.order
        member[0] = True
        for k in range(1, self.order):
            member[k] = any(k >= g and member[k - g] for g in self.values)
        self.member = member
        last_gap = max((k for k in range(self.order) if not member[k]), default=-1)
        self.conductor = last_gap + 1
        self._reps: Dict[int, List[Tuple[int, ...]]] = {}

    def add(self, series: TruncSeries) -> None:
        self.basis.append(series)
        self.values.append(series.valuation())
        self.refresh()

    def representations(self, v: int) -> List[Tuple[int, ...]]:
        """v 在当前基值上的全部表示，按指数向量字典序升序"""
        if v not in self._reps:
            result: List[Tuple[int, ...]] = []

            def walk(index: int, rest: int, prefix: Tuple[int, ...]):
                if index == len(self.values) - 1:
                    if rest % self.values[index] == 0:
                        result.append(prefix + (rest // self.values[index],))
                    return
                for e in range(rest // self.values[index] + 1):
                    walk(index + 1, rest - e * self.values[index], prefix + (e,))

            walk(0, v, ())
            self._reps[v] = result
        return self._reps[v]

    def power(self, index: int, exponent: int) -> TruncSeries:
        if exponent == 0:
            return TruncSeries.one(self.order)
        key = (index, exponent)
        if key not in self.powers:
            half = self.power(index, exponent // 2)
            value = half * half
            if exponent % 2:
                value = value * self.basis[index]
            self.powers[key] = value
        return self.powers[key]

    def product(self, exponents: Tuple[int, ...]) -> TruncSeries:
        key = _strip(exponents)
        if key not in self.products:
            result = TruncSeries.one(self.order)
            for index, e in enumerate(key):
                if e:
                    result = result * self.power(index, e)
            self.products[key] = result
        return self.products[key]

    def subduce(self, f: TruncSeries) -> Tuple[Optional[TruncSeries], int]:
        """
        约化 f 直到赋值不小于当前导子或落在半群之外

        Returns:
            (新元素或 None, 约化步数)
        """
        steps = 0
        while not f.is_zero():
            v = f.valuation()
            if v >= self.conductor:
                return None, steps
            if not self.member[v]:
                return f, steps
            rep = self.representations(v)[0]
            f = f - self.product(rep).scale(f.leading_coefficient())
            steps += 1
        return None, steps

    def label(self, exponents: Tuple[int, ...]) -> str:
        factors = []
        for index, e in enumerate(exponents):
            if not e:
                continue
            name = BASE_LABELS[index] if index < 3 else f"w{index - 2}"
            factors.append(name if e == 1 else f"{name}^{e}")
        return "*".join(factors) or "1"


def value_semigroup(P: Parametrization, T: int, max_rounds: int = 64) -> ValueSemigroupResult:
    """
    计算 T 以下的值半群 Γ′

    Args:
        P: 形变参数化
        T: 截断阶，须大于 Γ 的导子
        max_rounds: 新增生成元的轮数上限，超出则结论为 Undetermined

    Returns:
        ValueSemigroupResult

    Raises:
        TruncationTooSmall: T 不大于导子
    """
    S = P.semigroup
    gamma = gap_data(S).conductor
    if T <= gamma:
        raise TruncationTooSmall(f"截断阶 T={T} 必须大于导子 γ={gamma}")

    state = _Subduction(list(P.without_s(T)), list(S.generators), T)
    processed = set()
    witnesses: List[dict] = []
    rounds = 0
    while True:
        rounds += 1
        if rounds > max_rounds:
            logger.warning(f"{P.render()}: 子约化超过 {max_rounds} 轮仍未收敛")
            return _result(state, S, T, rounds - 1, witnesses, UNDETERMINED,
                           f"超过 {max_rounds} 轮子约化仍未达到不动点")
        found = None
        for v in range(1, state.conductor):
            reps = state.representations(v)
            if len(reps) < 2:
                continue
            first = reps[0]
            for other in reps[1:]:
                key = (_strip(first), _strip(other))
                if key in processed:
                    continue
                processed.add(key)
                difference = state.product(first) - state.product(other)
                residual, steps = state.subduce(difference)
                if residual is not None:
                    found = (residual, v, first, other, steps)
                    break
            if found:
                break
        if found is None:
            break
        residual, v, first, other, steps = found
        new_value = residual.valuation()
        witnesses.append({
            "value": new_value,
            "cancelled_value": v,
            "pair": [list(first), list(other)],
            "combination": f"{state.label(first)} - {state.label(other)}",
            "subduction_steps": steps,
        })
        logger.debug(f"第 {rounds} 轮：{state.label(first)} 与 {state.label(other)} 在 {v} 处相消，得到新值 {new_value}")
        state.add(residual.scale(Fraction(1) / residual.leading_coefficient()))

    verdict = EXCEEDS_GAMMA if len(state.values) > 3 else EQUALS_GAMMA
    return _result(state, S, T, rounds, witnesses, verdict, None)


def _result(state: _Subduction, S, T, rounds, witnesses, verdict, reason) -> ValueSemigroupResult:
    values = tuple(k for k in range(T) if state.member[k])
    extra = tuple(k for k in values if not contains(S, k))
    return ValueSemigroupResult(
        values=values, verdict=verdict, extra=extra, witnesses=tuple(witnesses),
        reason=reason, truncation=T, rounds=rounds, basis_values=tuple(state.values),
    )
