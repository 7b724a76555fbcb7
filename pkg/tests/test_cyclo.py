from __future__ import annotations

import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from skeinforge.cyclo import CycNum, I, ONE, ZERO, ZETA
from skeinforge.errors import CycZeroDivisionError

coeffs = st.lists(st.integers(-20, 20), min_size=8, max_size=8)
cyc = st.builds(CycNum, coeffs, st.integers(1, 12))


def approx(x: CycNum) -> complex:
    return x.to_complex()


def test_zeta_orders():
    assert ZETA ** 16 == ONE
    assert ZETA ** 8 == -ONE
    assert CycNum.zeta(16) == ONE
    assert all(ZETA ** k != ONE for k in range(1, 16))


def test_listed_products():
    assert I * I == -1
    assert ZETA * CycNum.zeta(7) == -1
    assert ZETA - ZETA.inverse() == ZETA + CycNum.zeta(7)


def test_listed_inverses_and_powers():
    assert ONE.inverse() == ONE
    assert I.inverse() == -I
    x = ZETA + CycNum.zeta(7)
    assert x * x.inverse() == ONE
    assert I ** -1 == -I
    assert (-ZETA) ** 5 == -CycNum.zeta(5)


def test_normal_form():
    x = CycNum([2, 4, 0, 0, 0, 0, 0, 6], 4)
    assert x.num == (1, 2, 0, 0, 0, 0, 0, 3) and x.den == 2
    assert CycNum([0] * 8, 7).den == 1
    assert CycNum([1] + [0] * 7, -3) == CycNum([-1] + [0] * 7, 3)


def test_reduction_idempotent():
    long = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11]
    once = CycNum(long)
    assert CycNum(once.num, once.den) == once
    # z^8 = -1 folds index 8.. back with a sign
    assert once.num == (1 - 9, 2 - 10, 3 - 11, 4, 5, 6, 7, 8)


def test_zero_inverse_raises():
    with pytest.raises(CycZeroDivisionError):
        ZERO.inverse()
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(CycZeroDivisionError):
        ZERO ** -1


def test_thousand_seeded_inverse_round_trips():
    rng = random.Random(20240607)
    done = 0
    while done < 1000:
        x = CycNum([rng.randint(-9, 9) for _ in range(8)], rng.randint(1, 9))
        if x.is_zero():
            continue
        assert x * x.inverse() == ONE
        done += 1


@given(cyc, cyc, cyc)
def test_field_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == ZERO


@given(cyc, cyc)
def test_multiplication_matches_complex_numbers(x, y):
    # floating point is used only as an independent reference here
    assert abs(approx(x * y) - approx(x) * approx(y)) < 1e-6 * (1 + abs(approx(x)) * abs(approx(y)))


@given(cyc)
def test_conjugate_matches_complex(x):
    assert abs(approx(x.conjugate()) - approx(x).conjugate()) < 1e-6 * (1 + abs(approx(x)))
    assert x.conjugate().conjugate() == x


def test_zeta_is_exp_i_pi_over_8():
    assert abs(ZETA.to_complex() - cmath.exp(1j * cmath.pi / 8)) < 1e-12


def test_rational_coercion():
    assert CycNum.coerce(Fraction(3, 6)) == CycNum([1] + [0] * 7, 2)
    assert ONE / 2 + ONE / 2 == ONE


@given(cyc)
def test_json_round_trip(x):
    assert CycNum.from_json(x.to_json()) == x


def test_rendering():
    assert str(ZERO) == "0"
    assert str(ONE + I) == "1 + 1*z^4"
    assert str((ONE - I) / 2) == "(1 - 1*z^4) / 2"
    assert str(-ZETA) == "-1*z"


def test_immutable():
    with pytest.raises(AttributeError):
        ONE.den = 3
