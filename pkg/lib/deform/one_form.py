# -*- coding: utf-8 -*-
"""
1-形式 ω = m·y·dx − ℓ·x·dy 的赋值，用作形变芽与单项式芽不同构的见证。
"""

from fractions import Fraction

from lib.common.errors import ShapeMismatch
from lib.deform.parametrization import Parametrization
from lib.numsg import NumericalSemigroup, contains
from lib.poly import TruncSeries


def _valuation(ell: int, m: int, y_tail, order: int) -> int:
    xi = TruncSeries({(ell, 0): 1}, order)
    eta_terms = {(m, 0): Fraction(1)}
    for exponent, coeff in y_tail:
        eta_terms[(exponent, 0)] = eta_terms.get((exponent, 0), Fraction(0)) + Fraction(coeff)
    eta = TruncSeries(eta_terms, order)
    omega = eta.scale(m) * xi.derivative_t() - xi.scale(ell) * eta.derivative_t()
    if omega.is_zero():
        raise ShapeMismatch("ω 在截断阶以下为零")
    # h·dt 的赋值记为 υ(h)+1
    return omega.valuation() + 1


def tail_one_form_valuation(ell: int, m: int, p: int, coeff=1) -> int:
    """
    x = t^ℓ, y = t^m + c·t^p 时 ω 的赋值，应为 p+ℓ

    Raises:
        ShapeMismatch: p ≤ m（不是尾项）
    """
    if p <= m:
        raise ShapeMismatch(f"y 的尾项指数 p={p} 必须大于 m={m}")
    return _valuation(ell, m, ((p, coeff),), p + ell + 2)


def one_form_valuation(P: Parametrization) -> int:
    """
    计算 υ(m·η′·dξ′ − ℓ·ξ′·dη′)

    Args:
        P: x 无尾项、y 恰有一个尾项的参数化（z 的尾项不参与）

    Returns:
        int: 赋值

    Raises:
        ShapeMismatch: 参数化不是该形状
    """
    x_tail, y_tail, _ = P.tails
    if x_tail or len(y_tail) != 1:
        raise ShapeMismatch(f"{P.render()} 不是 (t^ℓ, t^m + c·t^p, ...) 的形状")
    p, coeff = y_tail[0]
    value = tail_one_form_valuation(P.ell, P.m, p, coeff)
    if value != p + P.ell:
        raise ShapeMismatch(f"ω 的赋值 {value} 不等于 p+ℓ = {p + P.ell}")
    return value


def cor44_nonisomorphy_witness(S: NumericalSemigroup, P: Parametrization) -> bool:
    """ω 的赋值不在 Γ 中时为真，即形变芽不同构于单项式芽"""
    return not contains(S, one_form_valuation(P))
