# -*- coding: utf-8 -*-
"""
x,y,z,s 上的有理系数稀疏多项式，带加权分次 deg(x,y,z)=(ℓ,m,n), deg s = −1。

项以指数向量 (e_x,e_y,e_z,e_s) 为键，系数为非零 Fraction。
"""

from fractions import Fraction
from typing import Dict, Iterable, Optional, Tuple, Union

from lib.common.errors import WeightMismatch, ZeroPolynomial, StciError
from lib.common.rendering import render_rational

Exponent = Tuple[int, int, int, int]
Scalar = Union[int, Fraction]

VARIABLES = ("x", "y", "z", "s")


class SparsePoly:
    """加权分次稀疏多项式，值语义（运算均返回新对象）"""

    __slots__ = ("terms", "weights")

    def __init__(self, terms: Optional[Dict[Exponent, Scalar]] = None, weights: Iterable[int] = (1, 1, 1)):
        self.weights: Tuple[int, int, int] = tuple(int(w) for w in weights)
        self.terms: Dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(exp) + (0,) * (4 - len(exp))
            if any(e < 0 for e in exp):
                raise StciError(f"指数必须非负: {exp}")
            coeff = Fraction(coeff)
            if coeff != 0:
                self.terms[exp] = self.terms.get(exp, Fraction(0)) + coeff
                if self.terms[exp] == 0:
                    del self.terms[exp]

    # ---- 构造 ----

    @classmethod
    def zero(cls, weights) -> "SparsePoly":
        return cls({}, weights)

    @classmethod
    def constant(cls, value: Scalar, weights) -> "SparsePoly":
        return cls({(0, 0, 0, 0): value}, weights)

    @classmethod
    def monomial(cls, coeff: Scalar, ex: int = 0, ey: int = 0, ez: int = 0, es: int = 0, weights=(1, 1, 1)) -> "SparsePoly":
        return cls({(ex, ey, ez, es): coeff}, weights)

    @classmethod
    def variable(cls, name: str, weights) -> "SparsePoly":
        exp = [0, 0, 0, 0]
        exp[VARIABLES.index(name)] = 1
        return cls({tuple(exp): 1}, weights)

    # ---- 算术 ----

    def _coerce(self, other) -> "SparsePoly":
        if isinstance(other, SparsePoly):
            if other.weights != self.weights:
                raise WeightMismatch(f"权重不一致: {self.weights} vs {other.weights}")
            return other
        if isinstance(other, (int, Fraction)):
            return SparsePoly.constant(other, self.weights)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for exp, coeff in other.terms.items():
            value = terms.get(exp, Fraction(0)) + coeff
            if value:
                terms[exp] = value
            else:
                terms.pop(exp, None)
        return SparsePoly(terms, self.weights)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({exp: -c for exp, c in self.terms.items()}, self.weights)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms: Dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                terms[exp] = terms.get(exp, Fraction(0)) + c1 * c2
        return SparsePoly(terms, self.weights)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise StciError("多项式不支持负指数")
        result = SparsePoly.constant(1, self.weights)
        base = self
        # 反复平方
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def scale(self, factor: Scalar) -> "SparsePoly":
        factor = Fraction(factor)
        return SparsePoly({exp: c * factor for exp, c in self.terms.items()}, self.weights)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(other, self.weights)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return self.weights == other.weights and self.terms == other.terms

    def __hash__(self):
        return hash((self.weights, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # ---- 分次 ----

    def monomial_degree(self, exp: Exponent) -> int:
        ell, m, n = self.weights
        return exp[0] * ell + exp[1] * m + exp[2] * n - exp[3]

    def weighted_order(self) -> int:
        """最小加权次数（零多项式报错）"""
        if not self.terms:
            raise ZeroPolynomial("零多项式没有加权阶")
        return min(self.monomial_degree(exp) for exp in self.terms)

    def initial_part(self) -> "SparsePoly":
        """达到加权阶的项之和 inp(p)"""
        order = self.weighted_order()
        return SparsePoly(
            {exp: c for exp, c in self.terms.items() if self.monomial_degree(exp) == order},
            self.weights,
        )

    def is_homogeneous(self) -> bool:
        return not self.terms or self.initial_part() == self

    def degrees(self) -> set:
        return {self.monomial_degree(exp) for exp in self.terms}

    # ---- 其他 ----

    def x_adic_order(self) -> Optional[int]:
        """整除 p 的 x 的最高幂次，零多项式返回 None"""
        if not self.terms:
            return None
        return min(exp[0] for exp in self.terms)

    def divide_by_x(self, power: int) -> "SparsePoly":
        """除以 x^power，要求整除"""
        if power and any(exp[0] < power for exp in self.terms):
            raise StciError(f"多项式不能被 x^{power} 整除")
        return SparsePoly({(e[0] - power, e[1], e[2], e[3]): c for e, c in self.terms.items()}, self.weights)

    def specialize_s(self, value: Scalar = 1) -> "SparsePoly":
        """代入 s = value"""
        value = Fraction(value)
        terms: Dict[Exponent, Fraction] = {}
        for exp, coeff in self.terms.items():
            key = (exp[0], exp[1], exp[2], 0)
            terms[key] = terms.get(key, Fraction(0)) + coeff * value ** exp[3]
        return SparsePoly(terms, self.weights)

    def modulo_xz(self) -> "SparsePoly":
        """模理想 ⟨x,z⟩ 的剩余：只保留不含 x、z 的项"""
        return SparsePoly({e: c for e, c in self.terms.items() if e[0] == 0 and e[2] == 0}, self.weights)

    def monomial_curve_image(self) -> Dict[int, Fraction]:
        """
        代入单项式曲线 (t^ℓ,t^m,t^n)（s 取 1）后各 t 次数上的系数，只返回非零项
        """
        image: Dict[int, Fraction] = {}
        for exp, coeff in self.terms.items():
            degree = self.monomial_degree((exp[0], exp[1], exp[2], 0))
            image[degree] = image.get(degree, Fraction(0)) + coeff
        return {k: v for k, v in image.items() if v}

    def sort_key(self, exp: Exponent):
        # 先按加权次数，再按 x,y,z,s 上的反字典序
        return (self.monomial_degree(exp), -exp[3], -exp[2], -exp[1], -exp[0])

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: self.sort_key(item[0]), reverse=True)

    def render(self) -> str:
        """规范文本形式，例如 x^3 - y*z"""
        if not self.terms:
            return "0"
        pieces = []
        for index, (exp, coeff) in enumerate(self.sorted_terms()):
            factors = []
            for name, e in zip(VARIABLES, exp):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            magnitude = abs(coeff)
            if not factors:
                body = render_rational(magnitude)
            elif magnitude == 1:
                body = "*".join(factors)
            else:
                body = render_rational(magnitude) + "*" + "*".join(factors)
            if index == 0:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)

    def to_sympy(self):
        """转换为 sympy 表达式，用于独立复核"""
        import sympy

        x, y, z, s = sympy.symbols("x y z s")
        return sympy.Add(*[
            sympy.Rational(c.numerator, c.denominator) * x ** e[0] * y ** e[1] * z ** e[2] * s ** e[3]
            for e, c in self.terms.items()
        ])

    def __repr__(self):
        return f"SparsePoly({self.render()!r}, weights={self.weights})"

    def __str__(self):
        return self.render()


def poly_arith(p: SparsePoly, q: Optional[SparsePoly], op: str, exponent: int = 0) -> SparsePoly:
    """
    多项式运算分发

    Args:
        p, q: 操作数（pow 时忽略 q）
        op: add/sub/mul/pow
        exponent: pow 的指数

    Returns:
        SparsePoly: 精确结果
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    if op == "pow":
        return p ** exponent
    raise StciError(f"未知的多项式运算: {op}")
