"""标量的规范字符串形式，例如 "(-1) * v^2 * t^(1/3)"。"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Tuple, TYPE_CHECKING

if TYPE_CHECKING:
    from .scalar import Scalar


def _coeff(c: Fraction) -> str:
    if c.denominator == 1 and c > 0:
        return str(c.numerator)
    return f"({c})"


def _power(name: str, e: Fraction) -> str:
    if e == 1:
        return name
    if e.denominator == 1 and e > 0:
        return f"{name}^{e.numerator}"
    return f"{name}^({e})"


def format_term(coeff: Fraction, v_exp: int, t_exp: Fraction) -> str:
    factors: List[str] = []
    if v_exp:
        factors.append(_power("v", Fraction(v_exp)))
    if t_exp:
        factors.append(_power("t", t_exp))
    if coeff != 1 or not factors:
        factors.insert(0, _coeff(coeff))
    return " * ".join(factors)


def format_terms(terms: Dict[Tuple[int, Fraction], Fraction]) -> str:
    if not terms:
        return "0"
    ordered = sorted(terms.items(), key=lambda item: (-item[0][0], -item[0][1]))
    return " + ".join(format_term(c, a, b) for (a, b), c in ordered)


def format_scalar(x: "Scalar") -> str:
    if x.is_zero:
        return "0"
    if x.is_laurent():
        return format_terms(x.laurent_terms())
    den, numer, denom = x.key
    numer_terms = {(a, Fraction(b, den)): c for (a, b), c in numer}
    denom_terms = {(a, Fraction(b, den)): c for (a, b), c in denom}
    return f"({format_terms(numer_terms)}) / ({format_terms(denom_terms)})"
