# /src/fields/numbers.py

"""Exact quaternions and octonions (Cayley-Dickson doubling of the quaternions)."""

__all__ = ["Quaternion", "Octonion", "left_multiply"]

from fractions import Fraction
from numbers import Number
from typing import Sequence, Tuple


class Quaternion:
    def __init__(self, data: Sequence):
        if len(data) != 4:
            raise ValueError(f"a quaternion has 4 coordinates, got {len(data)}")
        self.data: Tuple[Fraction, ...] = tuple(Fraction(x) for x in data)

    def __repr__(self):
        a, b, c, d = self.data
        return f"{a} + {b} i + {c} j + {d} k"

    def __eq__(self, other):
        return isinstance(other, Quaternion) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion([x + y for x, y in zip(self.data, other.data)])

    def __neg__(self) -> "Quaternion":
        return Quaternion([-x for x in self.data])

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-other)

    def conjugate(self) -> "Quaternion":
        a, b, c, d = self.data
        return Quaternion((a, -b, -c, -d))

    def __mul__(self, other):
        if isinstance(other, Number):
            return Quaternion([other * x for x in self.data])
        if not isinstance(other, Quaternion):
            return NotImplemented
        a1, b1, c1, d1 = self.data
        a2, b2, c2, d2 = other.data
        return Quaternion((
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ))

    def __rmul__(self, other):
        if isinstance(other, Number):
            return Quaternion([other * x for x in self.data])
        return NotImplemented


class Octonion:
    def __init__(self, data: Sequence):
        if len(data) != 8:
            raise ValueError(f"an octonion has 8 coordinates, got {len(data)}")
        self.data: Tuple[Fraction, ...] = tuple(Fraction(x) for x in data)

    def __repr__(self):
        return " + ".join(f"{x} e{i}" for i, x in enumerate(self.data))

    def __eq__(self, other):
        return isinstance(other, Octonion) and self.data == other.data

    def __hash__(self):
        return hash(self.data)

    def halves(self) -> Tuple[Quaternion, Quaternion]:
        return Quaternion(self.data[:4]), Quaternion(self.data[4:])

    def __mul__(self, other):
        if isinstance(other, Number):
            return Octonion([other * x for x in self.data])
        if not isinstance(other, Octonion):
            return NotImplemented
        # (a, b)(c, d) = (ac - d*b, da + bc*)
        a, b = self.halves()
        c, d = other.halves()
        first = a * c - d.conjugate() * b
        second = d * a + b * c.conjugate()
        return Octonion(first.data + second.data)


def left_multiply(unit: int, x: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """e_unit * x for x in C, H or O (len(x) = 2, 4 or 8) and 1 <= unit < len(x)."""
    size = len(x)
    if size == 2:
        if unit != 1:
            raise ValueError("the complex numbers have one imaginary unit")
        return (-Fraction(x[1]), Fraction(x[0]))
    basis = [1 if i == unit else 0 for i in range(size)]
    if size == 4:
        return (Quaternion(basis) * Quaternion(x)).data
    if size == 8:
        return (Octonion(basis) * Octonion(x)).data
    raise ValueError(f"no normed algebra of dimension {size}")
