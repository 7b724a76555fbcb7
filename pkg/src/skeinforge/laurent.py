"""Sparse bivariate Laurent polynomials over Z and their fraction field."""

from __future__ import annotations

from typing import Iterable, Mapping

from .cyclo import CycNum
from .errors import (
    NonDivisibleError,
    VariableMismatchError,
    ZeroSubstitutionError,
)

Exponent = tuple[int, int]


class Laurent2:
    """Element of Z[x^{+-1}, y^{+-1}] stored as ``{(ex, ey): coeff}``.

    ``names`` are display names only, but operands must agree on them.
    """

    __slots__ = ("terms", "names", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None,
                 names: tuple[str, str] = ("x", "y")):
        clean = {}
        if terms:
            for e, c in terms.items():
                if c:
                    clean[(int(e[0]), int(e[1]))] = int(c)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "names", tuple(names))
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Laurent2 is immutable")

    @classmethod
    def constant(cls, c: int, names=("x", "y")) -> Laurent2:
        return cls({(0, 0): c}, names)

    @classmethod
    def monomial(cls, ex: int, ey: int, c: int = 1, names=("x", "y")) -> Laurent2:
        return cls({(ex, ey): c}, names)

    @classmethod
    def gens(cls, names=("x", "y")) -> tuple[Laurent2, Laurent2]:
        return cls.monomial(1, 0, names=names), cls.monomial(0, 1, names=names)

    def _check(self, other: Laurent2):
        if self.names != other.names:
            raise VariableMismatchError(f"{self.names} vs {other.names}")

    def _lift(self, other) -> Laurent2:
        if isinstance(other, Laurent2):
            self._check(other)
            return other
        if isinstance(other, int):
            return Laurent2.constant(other, self.names)
        raise TypeError(f"cannot combine Laurent2 with {type(other).__name__}")

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Laurent2(out, self.names)

    __radd__ = __add__

    def __neg__(self):
        return Laurent2({e: -c for e, c in self.terms.items()}, self.names)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return Laurent2(out, self.names)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        out: dict[Exponent, int] = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                e = (a1 + a2, b1 + b2)
                out[e] = out.get(e, 0) + c1 * c2
        return Laurent2(out, self.names)

    __rmul__ = __mul__

    def scale(self, k: int) -> Laurent2:
        return Laurent2({e: k * c for e, c in self.terms.items()}, self.names)

    def shift(self, ex: int, ey: int) -> Laurent2:
        """Multiply by the monomial x^ex y^ey."""
        return Laurent2({(a + ex, b + ey): c for (a, b), c in self.terms.items()}, self.names)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_monomial():
                raise NonDivisibleError("only monomials are units in the Laurent ring")
            ((a, b), c), = self.terms.items()
            if c not in (1, -1):
                raise NonDivisibleError("only +-monomials are units")
            return Laurent2.monomial(-a * -k, -b * -k, c ** (-k), self.names)
        result = Laurent2.constant(1, self.names)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def twist(self, x_power: int = 1, y_scale: int = 1) -> Laurent2:
        """Return p(x^x_power, y_scale * y) for x_power, y_scale in {1, -1}."""
        out = {}
        for (a, b), c in self.terms.items():
            out[(a * x_power, b)] = c * (y_scale ** (b % 2))
        return Laurent2(out, self.names)

    def divexact(self, d: Laurent2) -> Laurent2 | None:
        """Exact quotient ``self / d`` in the Laurent ring, or None."""
        self._check(d)
        if d.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return Laurent2({}, self.names)
        # quotient exponents must lie in this box if the division is exact
        lo_x = min(a for a, _ in self.terms) - min(a for a, _ in d.terms)
        hi_x = max(a for a, _ in self.terms) - max(a for a, _ in d.terms)
        lo_y = min(b for _, b in self.terms) - min(b for _, b in d.terms)
        hi_y = max(b for _, b in self.terms) - max(b for _, b in d.terms)
        lead_d = max(d.terms)
        cd = d.terms[lead_d]
        rem = dict(self.terms)
        quo: dict[Exponent, int] = {}
        while rem:
            lead = max(rem)
            c = rem[lead]
            qx, qy = lead[0] - lead_d[0], lead[1] - lead_d[1]
            if c % cd or not (lo_x <= qx <= hi_x and lo_y <= qy <= hi_y):
                return None
            qc = c // cd
            quo[(qx, qy)] = qc
            for (a, b), dc in d.terms.items():
                e = (qx + a, qy + b)
                v = rem.get(e, 0) - qc * dc
                if v:
                    rem[e] = v
                else:
                    rem.pop(e, None)
        return Laurent2(quo, self.names)

    def evaluate(self, x_val, y_val) -> CycNum:
        """Evaluate at (x_val, y_val) in Q(zeta_16)."""
        x_val = CycNum.coerce(x_val)
        y_val = CycNum.coerce(y_val)
        if self.is_zero():
            return CycNum()
        xs = {a for a, _ in self.terms}
        ys = {b for _, b in self.terms}
        if (min(xs) < 0 and x_val.is_zero()) or (min(ys) < 0 and y_val.is_zero()):
            raise ZeroSubstitutionError("negative exponent evaluated at zero")
        xp = {a: x_val ** a for a in xs}
        yp = {b: y_val ** b for b in ys}
        total = CycNum()
        for (a, b), c in self.terms.items():
            total = total + xp[a] * yp[b] * c
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = Laurent2.constant(other, self.names)
        if not isinstance(other, Laurent2):
            return NotImplemented
        return self.names == other.names and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.names, frozenset(self.terms.items()))))
        return self._hash

    def sorted_terms(self) -> list[tuple[int, int, int]]:
        return [(a, b, self.terms[(a, b)]) for a, b in sorted(self.terms)]

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.sorted_terms()]

    @classmethod
    def from_json(cls, triples: Iterable, names=("x", "y")) -> Laurent2:
        out: dict[Exponent, int] = {}
        for ex, ey, c in triples:
            out[(ex, ey)] = out.get((ex, ey), 0) + c
        return cls(out, names)

    def __str__(self):
        if not self.terms:
            return "0"
        x, y = self.names
        parts = [f"{c}*{x}^{a}*{y}^{b}" for a, b, c in self.sorted_terms()]
        return " + ".join(parts)

    def __repr__(self):
        return f"Laurent2({self.sorted_terms()}, names={self.names})"


class FracLaurent2:
    """Fraction ``num / den`` of Laurent polynomials, kept unreduced.

    Equality is decided by cross-multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent2, den: Laurent2 | None = None):
        if den is None:
            den = Laurent2.constant(1, num.names)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("FracLaurent2 is immutable")

    @property
    def names(self):
        return self.num.names

    def _lift(self, other) -> FracLaurent2:
        if isinstance(other, FracLaurent2):
            return other
        if isinstance(other, Laurent2):
            return FracLaurent2(other)
        if isinstance(other, int):
            return FracLaurent2(Laurent2.constant(other, self.names))
        raise TypeError(f"cannot combine FracLaurent2 with {type(other).__name__}")

    def _common(self, other: FracLaurent2):
        """Numerators over a shared denominator, avoiding needless growth."""
        d1, d2 = self.den, other.den
        if d1 == d2:
            return self.num, other.num, d1
        q = d2.divexact(d1)
        if q is not None:
            return self.num * q, other.num, d2
        q = d1.divexact(d2)
        if q is not None:
            return self.num, other.num * q, d1
        return self.num * d2, other.num * d1, d1 * d2

    def __add__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        n1, n2, d = self._common(other)
        return FracLaurent2(n1 + n2, d)

    __radd__ = __add__

    def __neg__(self):
        return FracLaurent2(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        n1, n2, d = self._common(other)
        return FracLaurent2(n1 - n2, d)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return FracLaurent2(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> FracLaurent2:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero fraction")
        return FracLaurent2(self.den, self.num)

    def __truediv__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        return FracLaurent2(self.num ** k, self.den ** k)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def clear(self) -> Laurent2:
        """Return the Laurent quotient, or raise NonDivisibleError."""
        q = self.num.divexact(self.den)
        if q is None:
            raise NonDivisibleError(f"({self.num}) / ({self.den}) is not a Laurent polynomial")
        return q

    def try_clear(self) -> Laurent2 | None:
        return self.num.divexact(self.den)

    def evaluate(self, x_val, y_val) -> CycNum:
        return self.num.evaluate(x_val, y_val) / self.den.evaluate(x_val, y_val)

    def __str__(self):
        q = self.try_clear()
        if q is not None:
            return str(q)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"FracLaurent2({self.num!r}, {self.den!r})"
