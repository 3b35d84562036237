# -*- coding: utf-8 -*-
"""
定义方程：H1 情形的 2×3 单项式矩阵 M₀ 及其极大子式 f₁,f₂,f₃，H2 情形的两个二项式。

符号约定：f₃ = z^c − x^{a₁}y^{b₂}，即 M₀ 第 1、2 列子式。
"""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from lib.common.errors import InternalInconsistency
from lib.herzog.relations import HerzogData
from lib.numsg import NumericalSemigroup
from lib.poly import SparsePoly

logger = logging.getLogger(__name__)

Matrix = Tuple[Tuple[SparsePoly, SparsePoly, SparsePoly], Tuple[SparsePoly, SparsePoly, SparsePoly]]


@dataclass(frozen=True)
class DefiningEquations:
    """
    曲线理想的生成元

    H1: polys = (f₁,f₂,f₃)，matrix = M₀；H2: polys 为两个二项式，matrix = None。
    degrees 与 polys 一一对应。
    """

    polys: Tuple[SparsePoly, ...]
    degrees: Tuple[int, ...]
    matrix: Optional[Matrix] = None

    @property
    def f1(self) -> SparsePoly:
        return self.polys[0]

    @property
    def f2(self) -> SparsePoly:
        return self.polys[1]

    @property
    def f3(self) -> SparsePoly:
        return self.polys[2]

    def to_dict(self):
        data = {
            "equations": [p.render() for p in self.polys],
            "degrees": list(self.degrees),
        }
        if self.matrix is not None:
            data["matrix"] = [[entry.render() for entry in row] for row in self.matrix]
        return data


def _mono(weights, ex=0, ey=0, ez=0) -> SparsePoly:
    return SparsePoly.monomial(1, ex, ey, ez, 0, weights=weights)


def maximal_minors(matrix: Matrix) -> Tuple[SparsePoly, SparsePoly, SparsePoly]:
    """
    2×3 矩阵的三个 2×2 子式 (Δ₁,Δ₂,Δ₃)，Δ_j 删去第 j 列，按列的自然顺序展开
    """
    top, bottom = matrix

    def minor(i, j):
        return top[i] * bottom[j] - top[j] * bottom[i]

    return minor(1, 2), minor(0, 2), minor(0, 1)


def _sympy_minors_agree(matrix: Matrix, minors) -> bool:
    import sympy

    sym = sympy.Matrix([[entry.to_sympy() for entry in row] for row in matrix])
    for column, expected in enumerate(minors):
        keep = [j for j in range(3) if j != column]
        if sympy.expand(sym.extract([0, 1], keep).det() - expected.to_sympy()) != 0:
            return False
    return True


def _check_kernel(S: NumericalSemigroup, polys) -> None:
    for index, p in enumerate(polys, start=1):
        if p.monomial_curve_image():
            raise InternalInconsistency(f"{S.generators}: 第 {index} 个方程在单项式曲线上不为零")
        if not p.is_homogeneous():
            raise InternalInconsistency(f"{S.generators}: 第 {index} 个方程不是齐次的")


def defining_equations(S: NumericalSemigroup, H: HerzogData, crosscheck: bool = False) -> DefiningEquations:
    """
    构造定义方程并校验

    Args:
        S: 半群
        H: 由 S 计算的 Herzog 数据
        crosscheck: 额外用 sympy 独立展开子式

    Returns:
        DefiningEquations

    Raises:
        InternalInconsistency: 子式、合冲或核检验失败
    """
    w = S.generators
    if not H.is_h1:
        i, j, k = H.permutation
        first = [0, 0, 0]
        first[i] = H.a
        second = [0, 0, 0]
        second[i], second[j] = H.a1, H.b2
        e_j = [0, 0, 0]
        e_j[j] = H.b
        e_k = [0, 0, 0]
        e_k[k] = H.c
        p1 = _mono(w, *first) - _mono(w, *e_j)
        p2 = _mono(w, *e_k) - _mono(w, *second)
        polys = (p1, p2)
        _check_kernel(S, polys)
        return DefiningEquations(polys=polys, degrees=(H.a * w[i], H.c * w[k]))

    matrix: Matrix = (
        (_mono(w, ez=H.c1), _mono(w, ex=H.a1), _mono(w, ey=H.b1)),
        (_mono(w, ey=H.b2), _mono(w, ez=H.c2), _mono(w, ex=H.a2)),
    )
    f1 = _mono(w, ex=H.a) - _mono(w, ey=H.b1, ez=H.c2)
    f2 = _mono(w, ey=H.b) - _mono(w, ex=H.a2, ez=H.c1)
    f3 = _mono(w, ez=H.c) - _mono(w, ex=H.a1, ey=H.b2)
    polys = (f1, f2, f3)

    delta1, delta2, delta3 = maximal_minors(matrix)
    if (delta1, delta2, delta3) != (f1, -f2, f3):
        raise InternalInconsistency(f"{S.generators}: M₀ 的极大子式与 f₁,f₂,f₃ 不一致")
    for row in matrix:
        if not (row[0] * f1 + row[1] * f2 + row[2] * f3).is_zero():
            raise InternalInconsistency(f"{S.generators}: M₀ 的行不是 (f₁,f₂,f₃) 的合冲")
    _check_kernel(S, polys)
    if crosscheck and not _sympy_minors_agree(matrix, (delta1, delta2, delta3)):
        raise InternalInconsistency(f"{S.generators}: sympy 复核子式失败")

    degrees = (H.a * S.ell, H.b * S.m, H.c * S.n)
    logger.debug(f"{S.generators} 的定义方程次数 {degrees}")
    return DefiningEquations(polys=polys, degrees=degrees, matrix=matrix)


def row_syzygies(E: DefiningEquations) -> List[SparsePoly]:
    """M₀ 每行与 (f₁,f₂,f₃) 的内积，H1 中应全为零"""
    if E.matrix is None:
        return []
    return [row[0] * E.f1 + row[1] * E.f2 + row[2] * E.f3 for row in E.matrix]
