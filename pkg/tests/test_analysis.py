import cmath
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from jonesrep import linalg as la
from flint import fmpq_poly

from jonesrep.arith import DomainError, INFINITE_ORDER, Laurent, ParameterSpec, cos_minpoly
from jonesrep.analysis import (
    GroupTable,
    adjoint_irreducible,
    burnside_span,
    char_poly,
    classify_discreteness,
    connectivity_certificate,
    elliptic_witness,
    fingerprint,
    fingerprint_from_generators,
    projective_image,
    strip_unit_root,
    triangle_order,
)
from jonesrep.rep import build
from jonesrep.skein import parse_braid_word

COMMUTATOR = parse_braid_word("[2, 2 3 3 3 2 -1]")


def test_commutator_charpoly_exact():
    h = build(4, 2)
    cp = char_poly(h.word_matrix(COMMUTATOR), h.field)
    s = Laurent.monomial
    a = (s(4) - 1 + s(-4)) ** 3
    assert cp == [-h.field.one, 1 - a, a - 1, h.field.one]
    assert strip_unit_root(cp, h.field) == (1, [h.field.one, a, h.field.one])


@pytest.mark.parametrize("t", [0.37 + 0.2j, -1.7, cmath.exp(0.9j)])
def test_commutator_charpoly_numeric(t):
    # second route: float generators multiplied in numpy, then numpy's characteristic polynomial
    h = build(4, 2)
    sv = t ** 0.25
    num = {k: np.array([[x.substitute(sv) for x in row] for row in h.generator(k)], dtype=complex)
           for k in (1, 2, 3, -1, -2, -3)}
    m = np.eye(3, dtype=complex)
    for k in COMMUTATOR:
        m = m @ num[k]
    a = (t - 1 + 1 / t) ** 3
    assert np.allclose(np.poly(m), [1, a - 1, 1 - a, -1], atol=1e-8)


def test_fingerprints():
    s = Laurent.monomial
    fp = fingerprint(4, 0)
    assert fp.kappa == s(8) + 2 + s(-8) and fp.dim == 2
    fp = fingerprint(4, 2)
    assert fp.kappa == s(12) + 2 + s(-12) and fp.dim == 3


def test_fingerprint_collision_at_r8():
    p = ParameterSpec.root_of_unity(8)
    a, b = fingerprint(7, 1, p), fingerprint(7, 5, p)
    assert a.kappa == b.kappa
    assert (a.dim, b.dim) == (14, 6)


@given(st.integers(-2, 2), st.integers(-2, 2))
def test_fingerprint_conjugation_invariant(x, y):
    h = build(4, 2)
    f = h.field
    p = la.identity(3, f)
    p[0, 1] = f.coerce(x)
    p[2, 0] = f.coerce(y)
    q = la.inverse(p, f)
    gens = [la.mul(la.mul(p, g, f), q, f) for g in h.generators]
    assert fingerprint_from_generators(4, 2, gens, f).kappa == fingerprint(4, 2, h=h).kappa


def test_elliptic_witnesses():
    w = elliptic_witness(build(4, 2, ParameterSpec.unit_circle(Fraction(1, 5))), COMMUTATOR)
    assert w.order == INFINITE_ORDER and w.degree_bound == 4
    assert abs(w.angle_degrees - 96.778652) < 1e-5
    # t + 1/t = u with u - 1 = 2cos(2pi/7)
    poly = cos_minpoly(7)(fmpq_poly([-1, 1]))
    spec = ParameterSpec.from_trace([Fraction(int(c.p), int(c.q)) for c in poly.coeffs()],
                                    1 + 2 * math.cos(2 * math.pi / 7))
    w = elliptic_witness(build(4, 2, spec), COMMUTATOR)
    assert w.order == INFINITE_ORDER and w.degree_bound == 6
    assert abs(w.angle_degrees - 165.812896) < 1e-5


def test_short_word_is_finite_at_fifth_root():
    # tau1 tau2^-1 on the (3,1) space is elliptic of finite order at theta = pi/5
    w = elliptic_witness(build(3, 1, ParameterSpec.unit_circle(Fraction(1, 5))), [1, -2])
    assert w.verdict == "FiniteOrder" and w.order == 10


def test_finite_order_tau1_r10():
    h = build(3, 1, ParameterSpec.root_of_unity(10))
    w = elliptic_witness(h, [1], projective=True)
    assert w.order == 5


def test_icosahedral_image():
    h = build(3, 1, ParameterSpec.root_of_unity(10))
    image = projective_image(h, 2000)
    assert image.order == 60
    table = GroupTable.from_image(image, h.field)
    assert table.is_simple()
    assert sorted(len(c) for c in table.conjugacy_classes()) == [1, 12, 12, 15, 20]


def test_r4_image_order():
    assert projective_image(build(4, 0, ParameterSpec.root_of_unity(4)), 2000).order == 24


def test_generic_image_exceeds_cap():
    assert projective_image(build(3, 1, ParameterSpec.root_of_unity(7)), 200).order != 60


@pytest.mark.parametrize("n,c", [(3, 1), (4, 2)])
def test_adjoint_irreducible(n, c):
    v = adjoint_irreducible(build(n, c))
    assert v.span_dim == v.full_dim == (build(n, c).dim ** 2 - 1) ** 2


def test_burnside_reducible_control():
    # diagonal generators span only the diagonal algebra
    h = build(3, 1)
    f = h.field
    d = la.identity(2, f)
    d[1, 1] = f.coerce(2)
    v = burnside_span([d], f)
    assert v.span_dim < v.full_dim


def test_connectivity():
    assert connectivity_certificate(build(4, 0), "plain").strongly_connected
    assert connectivity_certificate(build(4, 2), "adjoint").strongly_connected
    assert not connectivity_certificate(build(4, 2), "adjoint", control=True).strongly_connected


def test_triangle_order():
    # order of -t when t has order r
    assert [triangle_order(r) for r in (3, 4, 5, 6, 10)] == [6, 4, 10, 3, 5]


@pytest.mark.parametrize("q,expected", [("1/5", True), ("1/7", False), ("1/3", True), ("3/4", True)])
def test_unit_circle_verdicts(q, expected):
    assert classify_discreteness(ParameterSpec.unit_circle(Fraction(q))).discrete is expected


def test_excluded_angle():
    with pytest.raises(DomainError):
        classify_discreteness(ParameterSpec.unit_circle(Fraction(2, 3)))


@pytest.mark.parametrize("t,expected", [("-2", True), ("3", True), ("1/2", False), ("2", False)])
def test_real_verdicts(t, expected):
    assert classify_discreteness(ParameterSpec.rational(Fraction(t))).discrete is expected


@given(st.fractions(min_value=Fraction(1, 40), max_value=Fraction(39, 40), max_denominator=40))
def test_theta_sign_symmetry(q):
    if q == Fraction(2, 3):
        return
    a = classify_discreteness(ParameterSpec.unit_circle(q))
    b = classify_discreteness(ParameterSpec.unit_circle(-q))
    assert (a.discrete, a.regime) == (b.discrete, b.regime)
