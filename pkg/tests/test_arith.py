import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from jonesrep.arith import (
    AlgebraicNumber,
    DomainError,
    INFINITE_ORDER,
    ParameterSpec,
    cos_minpoly,
    cyclotomic_poly,
    delta,
    parse_scalar,
    quantum_integer,
    root_of_unity_order,
    totient,
)


def test_quantum_integers_generic():
    p = ParameterSpec.generic()
    assert str(quantum_integer(1, p)) == "1"
    assert str(quantum_integer(2, p)) == "s^2 + s^-2"
    assert delta(p) == -quantum_integer(2, p)


@given(st.integers(1, 12))
def test_quantum_recurrence(n):
    # [2][n] = [n+1] + [n-1]
    p = ParameterSpec.generic()
    assert quantum_integer(2, p) * quantum_integer(n, p) == quantum_integer(n + 1, p) + quantum_integer(n - 1, p)


@pytest.mark.parametrize("r", [3, 4, 5, 6, 7, 10])
def test_quantum_integer_vanishes_at_order(r):
    p = ParameterSpec.root_of_unity(r)
    assert quantum_integer(r, p) == p.field.zero
    assert all(quantum_integer(j, p) != p.field.zero for j in range(1, r))


@pytest.mark.parametrize("r", [3, 5, 8, 12])
def test_root_of_unity_numerics(r):
    p = ParameterSpec.root_of_unity(r)
    t = p.t_value
    assert abs(t - cmath.exp(2j * math.pi / r)) < 1e-12
    assert abs(p.s_value ** 4 - t) < 1e-12
    q2 = p.field.evaluate(quantum_integer(2, p))
    assert abs(q2 - (p.s_value ** 2 + p.s_value ** -2)) < 1e-12


def test_totient_and_cyclotomic():
    assert [totient(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    for m in range(1, 20):
        assert cyclotomic_poly(m).degree() == totient(m)


@pytest.mark.parametrize("n", range(3, 25))
def test_cos_minpoly_root(n):
    poly = cos_minpoly(n)
    x = 2 * math.cos(2 * math.pi / n)
    coeffs = [float(c) for c in poly.coeffs()]
    assert abs(sum(c * x ** i for i, c in enumerate(coeffs))) < 1e-8
    assert poly.degree() == max(1, totient(n) // 2)


def test_rational_spec():
    p = ParameterSpec.rational(Fraction(-2))
    assert p.t_value == -2
    assert p.order is None or p.order == INFINITE_ORDER
    with pytest.raises((DomainError, ValueError)):
        ParameterSpec.rational(0)


def test_parse_scalar_roundtrip(generic):
    x = parse_scalar("s^2 + 3*s^-2 - 1/2", generic.field)
    assert x == quantum_integer(2, generic) + 2 * parse_scalar("s^-2", generic.field) - parse_scalar("1/2", generic.field)


@given(st.integers(1, 30), st.integers(1, 30))
def test_root_of_unity_order(k, m):
    if math.gcd(k, m) != 1:
        return
    lam = AlgebraicNumber(cyclotomic_poly(m), cmath.exp(2j * math.pi * k / m))
    assert root_of_unity_order(lam, totient(m)) == m


def test_non_root_of_unity_on_circle():
    # a Salem polynomial: two roots on the circle, neither a root of unity
    from flint import fmpq_poly
    poly = fmpq_poly([1, 1, -2, 1, 1])
    roots = [complex(r) for r, _ in poly.complex_roots()]
    on_circle = [z for z in roots if abs(abs(z) - 1) < 1e-9]
    assert on_circle
    lam = AlgebraicNumber(poly, on_circle[0])
    assert lam.has_unit_modulus()
    assert root_of_unity_order(lam, 4) == INFINITE_ORDER
