# -*- coding: utf-8 -*-
"""
异常定义

所有业务异常都继承自 StciError（ValueError 的子类），命令行层统一捕获并以退出码 2 结束。
"""

__all__ = [
    "StciError",
    "ZeroGenerator",
    "NotNumerical",
    "NotMember",
    "WeightMismatch",
    "ZeroPolynomial",
    "ValuationOfZero",
    "NonUniqueH1Witness",
    "InternalInconsistency",
    "DegenerateRelation",
    "ReductionFailure",
    "TailAtOrBelowBase",
    "TruncationTooSmall",
    "SemigroupJump",
    "TruncationExhausted",
    "ShapeMismatch",
    "InvalidParameters",
    "InvalidTail",
    "UsageError",
]


class StciError(ValueError):
    """库内所有可预期错误的基类"""


class ZeroGenerator(StciError):
    pass


class NotNumerical(StciError):
    pass


class NotMember(StciError):
    pass


class WeightMismatch(StciError):
    pass


class ZeroPolynomial(StciError):
    pass


class ValuationOfZero(StciError):
    pass


class NonUniqueH1Witness(StciError):
    """H1 情形下正分解不唯一（与 Herzog 唯一性结论矛盾，说明实现有误）"""


class InternalInconsistency(StciError):
    """代数恒等式校验失败"""


class DegenerateRelation(StciError):
    pass


class ReductionFailure(StciError):
    pass


class TailAtOrBelowBase(StciError):
    pass


class TruncationTooSmall(StciError):
    pass


class SemigroupJump(StciError):
    """提升过程中出现不属于 Γ 的赋值"""

    def __init__(self, value: int, relation_index: int = -1):
        self.value = value
        self.relation_index = relation_index
        super().__init__(f"剩余项赋值 {value} 不在半群 Γ 中 (关系 f{relation_index + 1})")


class TruncationExhausted(StciError):
    pass


class ShapeMismatch(StciError):
    pass


class InvalidParameters(StciError):
    pass


class InvalidTail(StciError):
    pass


class UsageError(StciError):
    pass
