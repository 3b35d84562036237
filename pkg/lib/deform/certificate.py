# -*- coding: utf-8 -*-
"""
Γ 不变性与集合论完全交的数值证书。

判据：min(d₁,d₂+kℓ,d₃)+δ ≥ γ+kℓ（与两不等式形式等价）；
min(d)+δ ≥ γ 时值半群不变。证书只给出充分条件，不会断言“不是完全交”。
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

from lib.common.errors import (
    InternalInconsistency,
    InvalidParameters,
    SemigroupJump,
    StciError,
    TruncationExhausted,
    WeightMismatch,
)
from lib.config import truncation_override
from lib.deform.lift import LiftResult, lift_relations
from lib.deform.parametrization import Parametrization
from lib.deform.value_semigroup import EXCEEDS_GAMMA, UNDETERMINED, ValueSemigroupResult, value_semigroup
from lib.herzog import DefiningEquations, HerzogData, defining_equations, herzog_data
from lib.numsg import NumericalSemigroup, gap_data
from lib.stci import BresinskyData, bresinsky_reduce

logger = logging.getLogger(__name__)

CERTIFIED = "Certified"
NOT_CERTIFIED = "NotCertified"

Number = Union[int, float]


@dataclass(frozen=True)
class Inequality:
    lhs: Number
    rhs: Number

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    def to_dict(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "holds": self.holds}


@dataclass(frozen=True)
class StciCertificate:
    semigroup: NumericalSemigroup
    conductor: int
    degrees: Tuple[int, int, int]
    k: int
    delta: Number
    lemma21: Inequality
    prop29: Inequality
    prop29_pair: Tuple[Inequality, Inequality]
    verdict: str
    bresinsky: BresinskyData
    parametrization: Parametrization
    truncation: int
    value_semigroup: Optional[ValueSemigroupResult] = None
    lift: Optional[LiftResult] = None
    lift_error: Optional[Dict[str, Any]] = None
    extras: Dict[str, Any] = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return self.verdict == CERTIFIED

    def to_dict(self):
        data = {
            "semigroup": self.semigroup.to_dict(),
            "conductor": self.conductor,
            "degrees": list(self.degrees),
            "k": self.k,
            "delta": self.delta,
            "lemma21": self.lemma21.to_dict(),
            "prop29": self.prop29.to_dict(),
            "prop29_pair": [ineq.to_dict() for ineq in self.prop29_pair],
            "verdict": self.verdict,
            "bresinsky": self.bresinsky.to_dict(),
            "parametrization": self.parametrization.to_dict(),
            "truncation": self.truncation,
        }
        witnesses = {}
        if self.value_semigroup is not None:
            witnesses["value_semigroup"] = self.value_semigroup.to_dict()
        if self.lift is not None:
            witnesses["lift"] = self.lift.to_dict()
        if self.lift_error is not None:
            witnesses["lift_error"] = self.lift_error
        if witnesses:
            data["witnesses"] = witnesses
        data.update(self.extras)
        return data


def default_truncation(S: NumericalSemigroup, E: DefiningEquations, delta: Number, slack: int = 1) -> int:
    """
    默认截断阶 T = γ + max(d) + δ + slack（δ = ∞ 时去掉 δ），环境变量 STCI_TRUNC 可覆盖

    T > γ 满足值半群的要求，T > d_i + δ 满足提升确认阶的要求。
    """
    override = truncation_override()
    if override is not None:
        return override
    base = gap_data(S).conductor + max(E.degrees) + slack
    return base if delta == math.inf else base + int(delta)


def _witnesses(E: DefiningEquations, P: Parametrization, T: int, k: int, max_rounds: int):
    vs = value_semigroup(P, T, max_rounds=max_rounds)
    lift = None
    lift_error = None
    try:
        lift = lift_relations(E, P, T, k=k)
    except SemigroupJump as e:
        lift_error = {"error": "SemigroupJump", "value": e.value, "relation": e.relation_index + 1}
        if e.value not in vs.extra and vs.verdict != UNDETERMINED:
            raise InternalInconsistency(f"提升在 {e.value} 处跳出 Γ，但值半群未包含该值")
    except TruncationExhausted as e:
        lift_error = {"error": "TruncationExhausted", "message": str(e)}
    return vs, lift, lift_error


def certify_stci(S: NumericalSemigroup, H: HerzogData, E: DefiningEquations, B: BresinskyData,
                 P: Parametrization, T: Optional[int] = None, witnesses: bool = True,
                 max_rounds: int = 64, slack: int = 1) -> StciCertificate:
    """
    评估集合论完全交判据并附加佐证

    Args:
        S, H, E, B: 单项式曲线的半群、Herzog 数据、定义方程与 Bresinsky 数据
        P: 形变参数化
        T: 截断阶，默认见 default_truncation
        witnesses: 是否计算值半群与关系提升
        max_rounds: 子约化轮数上限
        slack: 默认截断阶在 γ + max(d) + δ 之上的余量

    Returns:
        StciCertificate: verdict 为 Certified 或 NotCertified

    Raises:
        InvalidParameters: 不是 H1 情形
        WeightMismatch: 参数化与半群不一致
    """
    if not H.is_h1:
        raise InvalidParameters("完全交证书只适用于 H1 情形")
    if P.weights != S.generators:
        raise WeightMismatch(f"参数化基指数 {P.weights} 与半群 {S.generators} 不一致")
    gamma = gap_data(S).conductor
    d1, d2, d3 = E.degrees
    k, ell, delta = B.k, S.ell, P.delta
    lemma21 = Inequality(min(d1, d2, d3) + delta, gamma)
    prop29 = Inequality(min(d1, d2 + k * ell, d3) + delta, gamma + k * ell)
    pair = (lemma21, Inequality(min(d1, d3) + delta, gamma + k * ell))
    if prop29.holds != (pair[0].holds and pair[1].holds):
        raise InternalInconsistency("两种形式的完全交判据结论不一致")
    verdict = CERTIFIED if prop29.holds else NOT_CERTIFIED

    if T is None:
        T = default_truncation(S, E, delta, slack)
    vs = lift = lift_error = None
    if witnesses:
        vs, lift, lift_error = _witnesses(E, P, T, k, max_rounds)
        if lemma21.holds and vs.verdict == EXCEEDS_GAMMA:
            raise InternalInconsistency(f"min(d)+δ ≥ γ 但值半群多出 {list(vs.extra)}")
        if vs.verdict == UNDETERMINED:
            logger.warning(f"{P.render()}: 值半群结论未定 ({vs.reason})")
    logger.info(f"{P.render()}: {verdict} (lhs={prop29.lhs}, rhs={prop29.rhs})")
    return StciCertificate(
        semigroup=S, conductor=gamma, degrees=(d1, d2, d3), k=k, delta=delta,
        lemma21=lemma21, prop29=prop29, prop29_pair=pair, verdict=verdict,
        bresinsky=B, parametrization=P, truncation=T,
        value_semigroup=vs, lift=lift, lift_error=lift_error,
    )


class DeformationCertifier:
    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        初始化证书生成器

        Args:
            config: stci 组件配置，使用以下字段：
                - truncation_slack: 默认截断阶在 γ + max(d) + δ 之上的余量，默认1
                - max_subduction_rounds: 子约化轮数上限，默认64
                - certificate_witnesses: 是否计算值半群与提升佐证，默认True
                - sympy_crosscheck: 是否用 sympy 复核恒等式，默认False
        """
        config = config or {}
        self.slack = int(config.get('truncation_slack', 1))
        self.max_rounds = int(config.get('max_subduction_rounds', 64))
        self.witnesses = bool(config.get('certificate_witnesses', True))
        self.crosscheck = bool(config.get('sympy_crosscheck', False))
        self.logger = logger

    def set_logger(self, logger: logging.Logger) -> None:
        """
        设置日志记录器

        Args:
            logger: 日志记录器实例
        """
        self.logger = logger

    def monomial_data(self, S: NumericalSemigroup):
        """
        单项式曲线的 Herzog 数据、定义方程与 Bresinsky 数据

        Raises:
            InvalidParameters: 半群不属于 H1 情形
        """
        H = herzog_data(S)
        if not H.is_h1:
            raise InvalidParameters(f"{S.generators} 属于情形 H2（完全交），不需要证书")
        E = defining_equations(S, H, crosscheck=self.crosscheck)
        B = bresinsky_reduce(E, H, crosscheck=self.crosscheck)
        return H, E, B

    def certify(self, P: Parametrization, truncation: Optional[int] = None,
                witnesses: Optional[bool] = None) -> StciCertificate:
        """
        从参数化出发生成完整证书

        Args:
            P: 形变参数化
            truncation: 截断阶，None 使用默认值
            witnesses: 覆盖配置中的 certificate_witnesses

        Returns:
            StciCertificate
        """
        S = P.semigroup
        H, E, B = self.monomial_data(S)
        try:
            certificate = certify_stci(
                S, H, E, B, P, T=truncation,
                witnesses=self.witnesses if witnesses is None else witnesses,
                max_rounds=self.max_rounds, slack=self.slack,
            )
        except StciError as e:
            self.logger.error(f"{P.render()} 证书生成失败: {e}")
            raise
        self.logger.debug(f"{P.render()} 证书: {certificate.verdict}")
        return certificate
