"""Exact arithmetic in Q(zeta) for zeta = exp(i*pi/8), a primitive 16th root of unity.

Elements are stored as an integer coefficient vector of length 8 (basis
1, z, ..., z^7 reduced by z^8 = -1) over a positive integer denominator.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from math import gcd
from numbers import Rational

from .errors import CycZeroDivisionError

DEGREE = 8


def _reduce(coeffs) -> list[int]:
    """Fold an arbitrary-length coefficient list into length 8 via z^8 = -1."""
    out = [0] * DEGREE
    for k, c in enumerate(coeffs):
        q, r = divmod(k, DEGREE)
        out[r] += -c if q % 2 else c
    return out


class CycNum:
    """An element of Q(zeta_16) in normal form ``num / den``."""

    __slots__ = ("num", "den")

    def __init__(self, num=(0,) * DEGREE, den: int = 1):
        num = list(num)
        if len(num) != DEGREE:
            num = _reduce(num)
        if den == 0:
            raise CycZeroDivisionError("zero denominator")
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = den
        for c in num:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            num = [c // g for c in num]
            den //= g
        if not any(num):
            den = 1
        object.__setattr__(self, "num", tuple(int(c) for c in num))
        object.__setattr__(self, "den", int(den))

    def __setattr__(self, name, value):
        raise AttributeError("CycNum is immutable")

    # construction helpers

    @classmethod
    def coerce(cls, x) -> CycNum:
        if isinstance(x, CycNum):
            return x
        if isinstance(x, int):
            return cls((x,) + (0,) * (DEGREE - 1))
        if isinstance(x, Rational):
            x = Fraction(x)
            return cls((x.numerator,) + (0,) * (DEGREE - 1), x.denominator)
        raise TypeError(f"cannot coerce {type(x).__name__} to CycNum")

    @classmethod
    def zeta(cls, k: int = 1) -> CycNum:
        """Return zeta**k."""
        k %= 2 * DEGREE
        c = [0] * DEGREE
        c[k % DEGREE] = -1 if k >= DEGREE else 1
        return cls(c)

    # predicates

    def is_zero(self) -> bool:
        return not any(self.num)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def is_integral(self) -> bool:
        return self.den == 1

    # ring operations

    def __add__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return CycNum([a + b for a, b in zip(self.num, other.num)], self.den)
        return CycNum(
            [a * other.den + b * self.den for a, b in zip(self.num, other.num)],
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return CycNum([-a for a in self.num], self.den)

    def __sub__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return CycNum.coerce(other) - self

    def __mul__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.num, other.num
        out = [0] * DEGREE
        for i in range(DEGREE):
            ai = a[i]
            if not ai:
                continue
            for j in range(DEGREE):
                bj = b[j]
                if not bj:
                    continue
                k = i + j
                if k >= DEGREE:
                    out[k - DEGREE] -= ai * bj
                else:
                    out[k] += ai * bj
        return CycNum(out, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> CycNum:
        """Multiplicative inverse, by solving the 8x8 system ``M_x y = e_0``."""
        if self.is_zero():
            raise CycZeroDivisionError("inverse of zero in Q(zeta_16)")
        # column j of the multiplication matrix is x * z^j
        cols = [(CycNum(self.num) * CycNum.zeta(j)).num for j in range(DEGREE)]
        rows = [[Fraction(cols[j][i]) for j in range(DEGREE)] + [Fraction(int(i == 0))]
                for i in range(DEGREE)]
        for c in range(DEGREE):
            p = next(r for r in range(c, DEGREE) if rows[r][c] != 0)
            rows[c], rows[p] = rows[p], rows[c]
            piv = rows[c][c]
            rows[c] = [v / piv for v in rows[c]]
            for r in range(DEGREE):
                if r != c and rows[r][c] != 0:
                    f = rows[r][c]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[c])]
        sol = [rows[i][DEGREE] for i in range(DEGREE)]
        common = 1
        for s in sol:
            common = common * s.denominator // gcd(common, s.denominator)
        # y = sol / den(self) ** -1, i.e. (num/den)^-1 = den * (num)^-1
        return CycNum([int(s * common) * self.den for s in sol], common)

    def __truediv__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return CycNum.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = CycNum.coerce(1)
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def conjugate(self) -> CycNum:
        """Complex conjugation, z -> z^-1 = -z^7."""
        out = [0] * DEGREE
        out[0] = self.num[0]
        for k in range(1, DEGREE):
            out[DEGREE - k] -= self.num[k]
        return CycNum(out, self.den)

    # comparison / hashing

    def __eq__(self, other):
        try:
            other = CycNum.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # rendering

    def to_complex(self) -> complex:
        """Floating-point approximation; diagnostics only."""
        w = cmath.exp(1j * cmath.pi / DEGREE)
        return sum(c * w**k for k, c in enumerate(self.num)) / self.den

    def to_json(self) -> dict:
        return {"num": list(self.num), "den": self.den}

    @classmethod
    def from_json(cls, obj) -> CycNum:
        if isinstance(obj, int):
            return cls.coerce(obj)
        num = obj["num"]
        if len(num) != DEGREE or not all(isinstance(c, int) for c in num):
            raise ValueError("CycNum JSON needs 'num' as 8 integers")
        return cls(num, int(obj.get("den", 1)))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.num):
            if not c:
                continue
            body = str(abs(c)) if k == 0 else f"{abs(c)}*z" if k == 1 else f"{abs(c)}*z^{k}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        text = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        if self.den != 1:
            text = f"({text}) / {self.den}"
        return text

    def __repr__(self):
        return f"CycNum({list(self.num)}, {self.den})"


ZERO = CycNum()
ONE = CycNum.coerce(1)
ZETA = CycNum.zeta(1)
I = CycNum.zeta(4)
