# /src/utils/formatting.py

from typing import Iterable, Sequence, Tuple


def monomial_label(exponents: Sequence[int], names: Sequence[str]) -> str:
    """``(0, 2, 1)`` over ``x1, x2, x3`` -> ``"x2^2*x3"``; the empty monomial is ``"1"``."""
    parts = []
    for name, power in zip(names, exponents):
        if power == 1:
            parts.append(name)
        elif power > 1:
            parts.append(f"{name}^{power}")
    return "*".join(parts) if parts else "1"


def format_polynomial(terms: Iterable[Tuple[int, str]]) -> str:
    """Renders ``[(2, "x2^2"), (-4, "x1*x2")]`` as ``"2*x2^2 - 4*x1*x2"``."""
    out = ""
    for coef, label in terms:
        if coef == 0:
            continue
        magnitude = abs(coef)
        if label == "1":
            body = str(magnitude)
        elif magnitude == 1:
            body = label
        else:
            body = f"{magnitude}*{label}"
        if not out:
            out = f"-{body}" if coef < 0 else body
        else:
            out += f" - {body}" if coef < 0 else f" + {body}"
    return out or "0"


def poincare_polynomial(coefficients: Sequence[int], variable: str = "t") -> str:
    """``[1, 1, 0, 1]`` -> ``"1 + t + t^3"``."""
    return format_polynomial((c, monomial_label((d,), (variable,))) for d, c in enumerate(coefficients))
