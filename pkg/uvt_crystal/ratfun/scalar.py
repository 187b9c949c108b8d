"""系数域 Q(v, t^{1/D}) 的精确标量。

底层使用 sympy 的有理函数域 QQ(v, s)，其中 s 代表 t^{1/D}。每个标量记录自己的
分母 D，并在构造时约化到能表示该值的最小 D，因此相等的值总有相同的表示。
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterator, List, Optional, Tuple, Union

from sympy import QQ
from sympy.polys.fields import field

from ..errors import DivisionByZeroError, PoleError, ScalarError

FIELD, _V_GEN, _S_GEN = field("v,s", QQ)
RING = FIELD.ring
DOMAIN = FIELD.to_domain()

Monomial = Tuple[int, int]
ScalarLike = Union["Scalar", int, Fraction]


def _to_fraction(coeff) -> Fraction:
    return Fraction(int(coeff.numerator), int(coeff.denominator))


def _poly(terms: Dict[Monomial, object]):
    return RING.from_dict({m: c for m, c in terms.items() if c}) if terms else RING.zero


def _lift_poly(poly, k: int):
    """s ↦ s^k。"""
    if k == 1:
        return poly
    return RING.from_dict({(a, b * k): c for (a, b), c in poly.items()})


def _shrink_poly(poly, g: int):
    return RING.from_dict({(a, b // g): c for (a, b), c in poly.items()})


def _reflect(poly, index: int) -> Tuple[object, int]:
    """把第 index 个变量 x 换成 x^{-1}，返回 (多项式, 需要乘上的 x 的幂次)。"""
    if not poly:
        return poly, 0
    top = max(m[index] for m in poly.keys())
    out = {}
    for monom, coeff in poly.items():
        m = list(monom)
        m[index] = top - m[index]
        out[tuple(m)] = coeff
    return RING.from_dict(out), -top


def _monomial_poly(a: int, b: int):
    return RING.from_dict({(a, b): 1})


def _ord(poly, index: int) -> int:
    return min(m[index] for m in poly.keys())


def _deg(poly, index: int) -> int:
    return max(m[index] for m in poly.keys())


class Scalar:
    """Q(v, t^{1/D}) 中的元素。

    Attributes:
        frac: sympy FracElement，变量为 v 和 s = t^{1/D}
        den: 正整数 D
    """

    __slots__ = ("_frac", "_den", "_key")

    def __init__(self, value: ScalarLike = 0) -> None:
        if isinstance(value, Scalar):
            frac, den = value._frac, value._den
        elif isinstance(value, (int, Fraction)):
            frac, den = FIELD.ground_new(QQ(value.numerator, value.denominator)), 1
        else:
            raise ValueError(f"无法把 {value!r} 转换为标量")
        self._frac = frac
        self._den = den
        self._key = None

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------
    @classmethod
    def _make(cls, frac, den: int) -> "Scalar":
        g = den
        if g > 1:
            for poly in (frac.numer, frac.denom):
                for _, b in poly.keys():
                    g = gcd(g, b)
                    if g == 1:
                        break
                if g == 1:
                    break
        if g > 1:
            frac = FIELD.raw_new(_shrink_poly(frac.numer, g), _shrink_poly(frac.denom, g))
            den //= g
        obj = cls.__new__(cls)
        obj._frac = frac
        obj._den = den
        obj._key = None
        return obj

    @classmethod
    def zero(cls) -> "Scalar":
        return cls(0)

    @classmethod
    def one(cls) -> "Scalar":
        return cls(1)

    @classmethod
    def monomial(cls, coeff: Union[int, Fraction] = 1, v_exp: int = 0, t_exp: Union[int, Fraction] = 0) -> "Scalar":
        """c · v^a · t^b，其中 b 可以是分数。

        Examples:
            >>> str(Scalar.monomial(-1, 2, Fraction(1, 3)))
            '(-1) * v^2 * t^(1/3)'
        """
        t_exp = Fraction(t_exp)
        return cls.from_laurent({(int(v_exp), t_exp): Fraction(coeff)})

    @classmethod
    def from_laurent(cls, terms: Dict[Tuple[int, Fraction], Fraction]) -> "Scalar":
        """由 Laurent 项 {(v 指数, t 指数): 系数} 构造。"""
        terms = {(a, Fraction(b)): Fraction(c) for (a, b), c in terms.items() if c}
        if not terms:
            return cls(0)
        den = 1
        for _, b in terms:
            den = lcm(den, b.denominator)
        lattice = {(a, int(b * den)): c for (a, b), c in terms.items()}
        min_a = min(0, min(a for a, _ in lattice))
        min_b = min(0, min(b for _, b in lattice))
        numer = _poly({(a - min_a, b - min_b): QQ(c.numerator, c.denominator) for (a, b), c in lattice.items()})
        denom = _monomial_poly(-min_a, -min_b)
        return cls._make(FIELD.new(numer, denom), den)

    @classmethod
    def _from_polys(cls, numer, denom, den: int) -> "Scalar":
        if not denom:
            raise DivisionByZeroError("分母为零")
        return cls._make(FIELD.new(numer, denom), den)

    # ------------------------------------------------------------------
    # 内部工具
    # ------------------------------------------------------------------
    @staticmethod
    def coerce(value: ScalarLike) -> "Scalar":
        return value if isinstance(value, Scalar) else Scalar(value)

    def lifted(self, den: int):
        """返回在分母 den 下的 FracElement（den 必须是 self.den 的倍数）。"""
        if den % self._den:
            raise ScalarError(f"无法把分母 {self._den} 提升到 {den}")
        k = den // self._den
        if k == 1:
            return self._frac
        return FIELD.raw_new(_lift_poly(self._frac.numer, k), _lift_poly(self._frac.denom, k))

    def _common(self, other: ScalarLike) -> Tuple[object, object, int]:
        other = Scalar.coerce(other)
        den = lcm(self._den, other._den)
        return self.lifted(den), other.lifted(den), den

    @property
    def den(self) -> int:
        return self._den

    @property
    def frac(self):
        return self._frac

    @property
    def key(self) -> Tuple:
        """规范键：分母首一化后的分子、分母项。"""
        if self._key is None:
            numer, denom = self._frac.numer, self._frac.denom
            lc = denom.LC
            self._key = (
                self._den,
                tuple(sorted((m, _to_fraction(c / lc)) for m, c in numer.items())),
                tuple(sorted((m, _to_fraction(c / lc)) for m, c in denom.items())),
            )
        return self._key

    # ------------------------------------------------------------------
    # 域运算
    # ------------------------------------------------------------------
    def __add__(self, other: ScalarLike) -> "Scalar":
        a, b, den = self._common(other)
        return Scalar._make(a + b, den)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        a, b, den = self._common(other)
        return Scalar._make(a - b, den)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        a, b, den = self._common(other)
        return Scalar._make(a * b, den)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        other = Scalar.coerce(other)
        if other.is_zero:
            raise DivisionByZeroError(f"除以零：{self} / 0")
        a, b, den = self._common(other)
        return Scalar._make(a / b, den)

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return Scalar.coerce(other) / self

    def __neg__(self) -> "Scalar":
        return Scalar._make(-self._frac, self._den)

    def __pos__(self) -> "Scalar":
        return self

    def __pow__(self, n: int) -> "Scalar":
        if not isinstance(n, int):
            raise ValueError("指数必须是整数")
        if n < 0 and self.is_zero:
            raise DivisionByZeroError("零的负幂")
        return Scalar._make(self._frac ** n, self._den)

    def inverse(self) -> "Scalar":
        return Scalar.one() / self

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (Scalar, int, Fraction)):
            return NotImplemented
        other = Scalar.coerce(other)
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __bool__(self) -> bool:
        return bool(self._frac.numer)

    @property
    def is_zero(self) -> bool:
        return not self._frac.numer

    # ------------------------------------------------------------------
    # 对合
    # ------------------------------------------------------------------
    def bar(self) -> "Scalar":
        """v ↦ v^{-1}，t 不变。"""
        return self._reflected(0)

    def star(self) -> "Scalar":
        """t ↦ t^{-1}，v 不变。"""
        return self._reflected(1)

    def _reflected(self, index: int) -> "Scalar":
        if self.is_zero:
            return self
        numer, shift_n = _reflect(self._frac.numer, index)
        denom, shift_d = _reflect(self._frac.denom, index)
        shift = shift_n - shift_d
        exps = [0, 0]
        if shift >= 0:
            exps[index] = shift
            numer = numer * _monomial_poly(*exps)
        else:
            exps[index] = -shift
            denom = denom * _monomial_poly(*exps)
        return Scalar._from_polys(numer, denom, self._den)

    # ------------------------------------------------------------------
    # v 进结构
    # ------------------------------------------------------------------
    def v_valuation(self) -> Optional[int]:
        """v=0 处的赋值；零元返回 None。"""
        if self.is_zero:
            return None
        return _ord(self._frac.numer, 0) - _ord(self._frac.denom, 0)

    def v_degree_at_infinity(self) -> Optional[int]:
        """deg_v(分子) - deg_v(分母)；为正表示 v=∞ 处有极点。"""
        if self.is_zero:
            return None
        return _deg(self._frac.numer, 0) - _deg(self._frac.denom, 0)

    def _v_slice(self, poly, a: int) -> "Scalar":
        part = {(0, b): c for (x, b), c in poly.items() if x == a}
        return Scalar._make(FIELD.new(_poly(part)), self._den)

    def eval_v0(self) -> "Scalar":
        """在 v=0 处求值，结果只含 t。

        Raises:
            PoleError: 在 v=0 处有极点
        """
        val = self.v_valuation()
        if val is None or val > 0:
            return Scalar.zero()
        if val < 0:
            raise PoleError(val)
        numer, denom = self._frac.numer, self._frac.denom
        return self._v_slice(numer, _ord(numer, 0)) / self._v_slice(denom, _ord(denom, 0))

    def laurent_coefficients(self, upto: int) -> Dict[int, "Scalar"]:
        """v=0 处 Laurent 展开中次数 ≤ upto 的系数（系数只含 t）。"""
        if self.is_zero:
            return {}
        numer, denom = self._frac.numer, self._frac.denom
        e_n, e_d = _ord(numer, 0), _ord(denom, 0)
        shift = e_n - e_d
        if upto < shift:
            return {}
        n_terms = upto - shift + 1
        num_c = [self._v_slice(numer, e_n + k) for k in range(n_terms)]
        den_c = [self._v_slice(denom, e_d + k) for k in range(n_terms)]
        lead = den_c[0]
        series: List[Scalar] = []
        for k in range(n_terms):
            acc = num_c[k]
            for j in range(1, k + 1):
                if den_c[j]:
                    acc = acc - den_c[j] * series[k - j]
            series.append(acc / lead)
        return {shift + k: c for k, c in enumerate(series) if c}

    def nonpositive_part(self) -> "Scalar":
        """Laurent 展开中 v 次数 ≤ 0 的部分。"""
        total = Scalar.zero()
        for k, c in self.laurent_coefficients(0).items():
            total = total + c * Scalar.monomial(1, k)
        return total

    # ------------------------------------------------------------------
    # 其他
    # ------------------------------------------------------------------
    def is_t_free(self) -> bool:
        return all(b == 0 for poly in (self._frac.numer, self._frac.denom) for _, b in poly.keys())

    def is_v_free(self) -> bool:
        return all(a == 0 for poly in (self._frac.numer, self._frac.denom) for a, _ in poly.keys())

    def is_laurent(self) -> bool:
        """分母是单项式（即 Laurent 多项式）。"""
        return len(self._frac.denom) == 1

    def laurent_terms(self) -> Dict[Tuple[int, Fraction], Fraction]:
        """Laurent 多项式的项 {(v 指数, t 指数): 系数}。"""
        if not self.is_laurent():
            raise ScalarError(f"{self} 不是 Laurent 多项式")
        ((da, db), dc), = self._frac.denom.items()
        dc = _to_fraction(dc)
        return {
            (a - da, Fraction(b - db, self._den)): _to_fraction(c) / dc
            for (a, b), c in self._frac.numer.items()
        }

    def unit_monomial(self) -> Optional[Tuple[int, Fraction]]:
        """若值为 ±t^{k/D}，返回 (符号, t 指数)，否则 None。"""
        if self.is_zero or not self.is_laurent():
            return None
        terms = self.laurent_terms()
        if len(terms) != 1:
            return None
        ((a, b), c), = terms.items()
        if a != 0 or abs(c) != 1:
            return None
        return (1 if c > 0 else -1, b)

    def at_t1(self) -> "Scalar":
        """代入 t = 1。"""

        def collapse(poly):
            out: Dict[Monomial, object] = {}
            for (a, _), c in poly.items():
                out[(a, 0)] = out.get((a, 0), QQ(0)) + c
            return _poly(out)

        denom = collapse(self._frac.denom)
        if not denom:
            raise PoleError(0, f"{self} 在 t=1 处有极点")
        return Scalar._from_polys(collapse(self._frac.numer), denom, 1)

    def leading_sign_at_t1(self) -> int:
        """t=1 时最低 v 次项系数的符号；在 t=1 处为零时返回 0。"""

        def lowest(poly) -> Fraction:
            by_a: Dict[int, Fraction] = {}
            for (a, _), c in poly.items():
                by_a[a] = by_a.get(a, Fraction(0)) + _to_fraction(c)
            for a in sorted(by_a):
                if by_a[a]:
                    return by_a[a]
            return Fraction(0)

        num, den = lowest(self._frac.numer), lowest(self._frac.denom)
        if not num or not den:
            return 0
        return 1 if (num > 0) == (den > 0) else -1

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def __str__(self) -> str:
        from .printing import format_scalar

        return format_scalar(self)


def iter_terms(poly) -> Iterator[Tuple[Monomial, Fraction]]:
    for monom, coeff in poly.items():
        yield monom, _to_fraction(coeff)


V = Scalar.monomial(1, 1)
T = Scalar.monomial(1, 0, 1)
