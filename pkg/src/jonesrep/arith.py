"""Exact scalars in the variable s = t^(1/4).

Three kinds of scalar live here:

* ``Laurent``   -- Laurent polynomials in s with rational coefficients,
* ``RatFunc``   -- quotients of those, kept reduced, used once Jones-Wenzl
  denominators such as 1/[2] appear,
* ``NFElement`` -- residues in a number field Q[s]/(f), used when t is
  specialized (roots of unity, rational or algebraic values).

Every field object exposes ``zero``, ``one``, ``gen`` (the element s) and
``coerce`` so that the linear algebra above it does not care which kind of
scalar it is handed.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

import flint
from flint import fmpq, fmpq_poly

Number = Union[int, Fraction]


class DomainError(ValueError):
    """Input outside the mathematical domain of an operation."""


class InadmissibleColor(DomainError):
    """A clasp color whose Jones-Wenzl projector does not exist."""


# ---------------------------------------------------------------------------
# polynomial helpers


def _poly(coeffs: Iterable) -> fmpq_poly:
    return fmpq_poly([fmpq(Fraction(c).numerator, Fraction(c).denominator) for c in coeffs])


def _to_fraction(q) -> Fraction:
    q = fmpq(q)
    return Fraction(int(q.p), int(q.q))


def _low_order(p: fmpq_poly) -> int:
    i = 0
    while p[i] == 0:
        i += 1
    return i


def _shift_right(p: fmpq_poly, k: int) -> fmpq_poly:
    return p.right_shift(k) if k else p


def _shift_left(p: fmpq_poly, k: int) -> fmpq_poly:
    return p.left_shift(k) if k else p


def _monic(p: fmpq_poly) -> fmpq_poly:
    return p / p.coeffs()[-1]


def totient(n: int) -> int:
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> fmpq_poly:
    """Phi_m over Q, by dividing x^m - 1 by the lower cyclotomic factors."""
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    p = fmpq_poly([-1] + [0] * (m - 1) + [1])
    for d in range(1, m):
        if m % d == 0:
            p = p // cyclotomic_poly(d)
    return p


@lru_cache(maxsize=None)
def cos_minpoly(n: int) -> fmpq_poly:
    """Minimal polynomial of 2cos(2 pi / n), obtained from Phi_n by y = x + 1/x."""
    phi = [int(c) for c in cyclotomic_poly(n).coeffs()]
    if n <= 2:
        return fmpq_poly([-2 if n == 1 else 2, 1])
    half = (len(phi) - 1) // 2
    # Phi_n(x) / x^half = a_half + sum_k a_{half+k} (x^k + x^-k); x^k + x^-k = V_k(y)
    v = [fmpq_poly([2]), fmpq_poly([0, 1])]
    for _ in range(2, half + 1):
        v.append(fmpq_poly([0, 1]) * v[-1] - v[-2])
    out = fmpq_poly([phi[half]])
    for k in range(1, half + 1):
        out += phi[half + k] * v[k]
    return out


# ---------------------------------------------------------------------------
# generic scalars


class _Scalar:
    """Shared operator plumbing for Laurent and RatFunc."""

    __slots__ = ()

    def _parts(self) -> tuple["Laurent", "Laurent"]:
        raise NotImplementedError

    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(self, Laurent) and isinstance(other, Laurent):
            return self._add(other)
        a, b = self._parts()
        c, d = other._parts()
        return _quotient(a * d + c * b, b * d)

    __radd__ = __add__

    def __neg__(self):
        if isinstance(self, Laurent):
            return Laurent(-self.poly, self.low)
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        if isinstance(self, Laurent) and isinstance(other, Laurent):
            return self._mul(other)
        a, b = self._parts()
        c, d = other._parts()
        return _quotient(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._parts()
        c, d = other._parts()
        return _quotient(a * d, b * c)

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return Laurent.one() / (self ** (-k))
        result, base = Laurent.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self):
        return Laurent.one() / self

    def __eq__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._parts()
        c, d = other._parts()
        if isinstance(self, Laurent) and isinstance(other, Laurent):
            return a.low == c.low and a.poly == c.poly
        return (a * d - c * b).is_zero()

    def __hash__(self):
        a, b = self._parts()
        return hash((a.low, tuple(a.poly.coeffs()), tuple(b.poly.coeffs())))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"{type(self).__name__}({str(self)!r})"


class Laurent(_Scalar):
    """s^low * poly(s), where poly has nonzero constant term (or is zero)."""

    __slots__ = ("low", "poly")

    def __init__(self, poly: fmpq_poly, low: int = 0):
        if poly == 0:
            self.poly, self.low = fmpq_poly(), 0
            return
        if poly[0] == 0:
            v = _low_order(poly)
            poly = poly.right_shift(v)
            low += v
        self.poly, self.low = poly, low

    @classmethod
    def zero(cls) -> "Laurent":
        return cls(fmpq_poly())

    @classmethod
    def one(cls) -> "Laurent":
        return cls(fmpq_poly([1]))

    @classmethod
    def const(cls, q: Number) -> "Laurent":
        q = Fraction(q)
        return cls(fmpq_poly([fmpq(q.numerator, q.denominator)]))

    @classmethod
    def monomial(cls, e: int, coeff: Number = 1) -> "Laurent":
        return cls(_poly([coeff]), e)

    @classmethod
    def from_terms(cls, terms: dict[int, Number]) -> "Laurent":
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls.zero()
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls(_poly(coeffs), lo)

    def _parts(self):
        return self, Laurent.one()

    def is_zero(self) -> bool:
        return self.poly == 0

    def _add(self, other: "Laurent") -> "Laurent":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = (self, other) if self.low <= other.low else (other, self)
        return Laurent(a.poly + _shift_left(b.poly, b.low - a.low), a.low)

    def _mul(self, other: "Laurent") -> "Laurent":
        if self.is_zero() or other.is_zero():
            return Laurent.zero()
        return Laurent(self.poly * other.poly, self.low + other.low)

    def terms(self) -> dict[int, Fraction]:
        return {self.low + i: _to_fraction(c) for i, c in enumerate(self.poly.coeffs()) if c != 0}

    @property
    def high(self) -> int:
        return self.low + max(self.poly.degree(), 0)

    def is_constant(self) -> bool:
        return self.is_zero() or (self.low == 0 and self.poly.degree() == 0)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return Fraction(0) if self.is_zero() else _to_fraction(self.poly.coeffs()[0])

    def bar(self) -> "Laurent":
        """The involution s -> 1/s."""
        if self.is_zero():
            return self
        return Laurent(fmpq_poly(self.poly.coeffs()[::-1]), -self.high)

    def substitute(self, value):
        """Evaluate at s = value; value may be any ring element supporting ** and +."""
        total = None
        for e, c in self.terms().items():
            term = c * (value ** e)
            total = term if total is None else total + term
        return 0 * value if total is None else total

    def __str__(self):
        return format_terms(self.terms())


class RatFunc(_Scalar):
    """num / den with den a monic polynomial in s, den(0) != 0, deg den >= 1, gcd 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Laurent, den: fmpq_poly):
        self.num, self.den = num, den

    def _parts(self):
        return self.num, Laurent(self.den)

    def is_zero(self) -> bool:
        return False

    def bar(self):
        a, b = self._parts()
        return _quotient(a.bar(), b.bar())

    def substitute(self, value):
        return self.num.substitute(value) / Laurent(self.den).substitute(value)

    def __str__(self):
        return f"({self.num})/({Laurent(self.den)})"


GenericScalar = Union[Laurent, RatFunc]


def _lift(x):
    if isinstance(x, _Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        return Laurent.const(x)
    return NotImplemented


def _quotient(a: Laurent, b: Laurent) -> GenericScalar:
    if b.is_zero():
        raise ZeroDivisionError("division by zero scalar")
    if a.is_zero():
        return Laurent.zero()
    low = a.low - b.low
    num, den = a.poly, b.poly
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num, den = num // g, den // g
    lc = den.coeffs()[-1]
    num, den = num / lc, den / lc
    if den.degree() == 0:
        return Laurent(num, low)
    return RatFunc(Laurent(num, low), den)


def format_terms(terms: dict[int, Fraction], var: str = "s") -> str:
    """Descending-exponent printing, e.g. ``-s^2 - s^-2``."""
    if not terms:
        return "0"
    pieces = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# fields


class GenericField:
    """Scalars are exact functions of an indeterminate s."""

    degree = None
    exact = True

    def __init__(self):
        self.zero = Laurent.zero()
        self.one = Laurent.one()
        self.gen = Laurent.monomial(1)

    def coerce(self, x) -> GenericScalar:
        if isinstance(x, _Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return Laurent.const(x)
        if isinstance(x, NFElement):
            raise TypeError("cannot lift a specialized scalar back to generic")
        raise TypeError(f"cannot coerce {x!r}")

    def bar(self, x):
        return self.coerce(x).bar()

    def evaluate(self, x) -> complex:
        raise DomainError("a generic scalar has no numeric value")

    def __repr__(self):
        return "GenericField()"


class NumberField:
    """Q[s]/(modulus) together with the complex embedding s -> s_value."""

    exact = True

    def __init__(self, modulus: fmpq_poly, s_value: complex, label: str = ""):
        self.modulus = _monic(modulus)
        self.degree = self.modulus.degree()
        self.s_value = complex(s_value)
        self.label = label
        self.zero = NFElement(self, fmpq_poly())
        self.one = NFElement(self, fmpq_poly([1]))
        self.gen = self.element(fmpq_poly([0, 1]))
        self.gen_inv = self.gen.inverse()
        self._pow_cache = {0: self.one, 1: self.gen, -1: self.gen_inv}

    def element(self, poly: fmpq_poly) -> "NFElement":
        return NFElement(self, poly % self.modulus if poly.degree() >= self.degree else poly)

    def s_power(self, e: int) -> "NFElement":
        if e not in self._pow_cache:
            base = self.gen if e > 0 else self.gen_inv
            half = self.s_power(e // 2 if e > 0 else -((-e) // 2))
            value = half * half
            if e % 2:
                value = value * base
            self._pow_cache[e] = value
        return self._pow_cache[e]

    def coerce(self, x) -> "NFElement":
        if isinstance(x, NFElement):
            if x.field is not self:
                raise TypeError("scalars from different number fields")
            return x
        if isinstance(x, (int, Fraction)):
            q = Fraction(x)
            return NFElement(self, fmpq_poly([fmpq(q.numerator, q.denominator)]))
        if isinstance(x, Laurent):
            total = self.zero
            for e, c in x.terms().items():
                total = total + self.s_power(e) * c
            return total
        if isinstance(x, RatFunc):
            return self.coerce(x.num) / self.coerce(Laurent(x.den))
        raise TypeError(f"cannot coerce {x!r}")

    def bar(self, x) -> "NFElement":
        """Image under s -> 1/s (a field automorphism when 1/s is conjugate to s)."""
        x = self.coerce(x)
        total = self.zero
        for i, c in enumerate(x.poly.coeffs()):
            if c != 0:
                total = total + self.s_power(-i) * _to_fraction(c)
        return total

    def evaluate(self, x) -> complex:
        x = self.coerce(x)
        total = 0j
        for c in reversed(x.poly.coeffs()):
            total = total * self.s_value + float(_to_fraction(c))
        return total

    def __repr__(self):
        return f"NumberField({self.label or self.modulus})"


class NFElement:
    __slots__ = ("field", "poly")

    def __init__(self, field: NumberField, poly: fmpq_poly):
        self.field, self.poly = field, poly

    def _other(self, other):
        if isinstance(other, NFElement):
            if other.field is not self.field:
                raise TypeError("scalars from different number fields")
            return other
        if isinstance(other, (int, Fraction, Laurent, RatFunc)):
            return self.field.coerce(other)
        return NotImplemented

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElement(self.field, self.poly + other.poly)

    __radd__ = __add__

    def __neg__(self):
        return NFElement(self.field, -self.poly)

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return NFElement(self.field, self.poly - other.poly)

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return NFElement(self.field, self.poly * fmpq(q.numerator, q.denominator))
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.field.element(self.poly * other.poly)

    __rmul__ = __mul__

    def inverse(self) -> "NFElement":
        if self.poly == 0:
            raise ZeroDivisionError("division by zero in number field")
        g, a, _ = self.poly.xgcd(self.field.modulus)
        if g.degree() != 0:
            raise ZeroDivisionError("modulus is not irreducible at this element")
        return NFElement(self.field, a / g.coeffs()[0])

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result, base = self.field.one, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return NotImplemented
        return self.poly == other.poly

    def __hash__(self):
        return hash(tuple(self.poly.coeffs()))

    def __bool__(self):
        return self.poly != 0

    def is_zero(self) -> bool:
        return self.poly == 0

    def bar(self):
        return self.field.bar(self)

    def is_rational(self) -> bool:
        return self.poly.degree() <= 0

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(0) if self.poly == 0 else _to_fraction(self.poly.coeffs()[0])

    def coefficient_vector(self) -> list[Fraction]:
        cs = [_to_fraction(c) for c in self.poly.coeffs()]
        return cs + [Fraction(0)] * (self.field.degree - len(cs))

    def __complex__(self):
        return self.field.evaluate(self)

    def __str__(self):
        return format_terms({i: _to_fraction(c) for i, c in enumerate(self.poly.coeffs()) if c != 0})

    def __repr__(self):
        return f"NFElement({str(self)!r})"


Scalar = Union[Laurent, RatFunc, NFElement]


# ---------------------------------------------------------------------------
# parameters


def _principal_fourth_root(t: complex) -> complex:
    return cmath.exp(cmath.log(t) / 4)


def _nearest_root(poly: fmpq_poly, target: complex) -> tuple[fmpq_poly, object]:
    """Irreducible factor of poly having the root closest to target, and that root's ball."""
    best = None
    for factor, _ in poly.factor()[1]:
        factor = fmpq_poly(factor)
        for ball in factor.complex_roots():
            ball = ball[0] if isinstance(ball, tuple) else ball
            dist = abs(complex(ball.mid()) - target)
            if best is None or dist < best[0]:
                best = (dist, factor, ball)
    if best is None:
        raise DomainError("polynomial has no roots")
    return _monic(best[1]), best[2]


@dataclass(frozen=True)
class ParameterSpec:
    """Where the quantum parameter t lives.

    kind is one of ``generic``, ``root_of_unity`` (t = exp(2 pi i k / r)),
    ``rational``, ``algebraic`` (t a chosen root of an integer polynomial),
    ``unit_circle`` (t = exp(i pi q), q rational) and ``numeric``.  For every
    exact kind other than generic the working root is s = t^(1/4) on the
    principal branch, i.e. s = exp(log(t) / 4).
    """

    kind: str = "generic"
    r: int | None = None
    k: int = 1
    value: Fraction | None = None
    poly: tuple[Fraction, ...] | None = None
    approx: complex | None = None

    @classmethod
    def generic(cls) -> "ParameterSpec":
        return cls()

    @classmethod
    def root_of_unity(cls, r: int, k: int = 1) -> "ParameterSpec":
        if r < 1:
            raise DomainError("order of a root of unity must be positive")
        if math.gcd(k, r) != 1:
            raise DomainError(f"exp(2 pi i {k}/{r}) does not have order {r}")
        # keep k in (-r/2, r/2] so that s = exp(2 pi i k / 4r) is the principal fourth root
        k %= r
        if 2 * k > r:
            k -= r
        return cls(kind="root_of_unity", r=r, k=k)

    @classmethod
    def rational(cls, t: Number | str) -> "ParameterSpec":
        t = Fraction(t)
        if t == 0:
            raise DomainError("t must be nonzero")
        return cls(kind="rational", value=t)

    @classmethod
    def unit_circle(cls, theta_over_pi: Number | str) -> "ParameterSpec":
        """t = exp(i pi q) for rational q; reduces to a root of unity."""
        q = Fraction(theta_over_pi)
        # exp(i pi p/d) = exp(2 pi i p / 2d)
        g = math.gcd(q.numerator, 2 * q.denominator)
        order, k = 2 * q.denominator // g, q.numerator // g
        return cls.root_of_unity(order, k)

    @classmethod
    def algebraic(cls, poly: Iterable[Number], approx: complex) -> "ParameterSpec":
        """t is the root of poly (coefficients low to high) nearest approx."""
        coeffs = tuple(Fraction(c) for c in poly)
        minpoly, ball = _nearest_root(_poly(coeffs), complex(approx))
        if minpoly.degree() == 1:
            return cls.rational(-_to_fraction(minpoly.coeffs()[0]))
        flint.ctx.prec = max(flint.ctx.prec, 128)
        return cls(kind="algebraic",
                   poly=tuple(_to_fraction(c) for c in minpoly.coeffs()),
                   approx=complex(ball.mid()))

    @classmethod
    def from_trace(cls, poly_u: Iterable[Number], u_approx: float, upper: bool = True) -> "ParameterSpec":
        """t with t + 1/t = u, u the root of poly_u nearest u_approx.

        For |u| > 2 the root t > 1 (or t < -1) is taken; for |u| < 2 the root
        on the upper half of the unit circle.
        """
        u_poly = _poly(poly_u)
        u_min, u_ball = _nearest_root(u_poly, complex(u_approx))
        u = complex(u_ball.mid()).real
        d = u_min.degree()
        # t^d * m(t + 1/t)
        tp = fmpq_poly()
        base = fmpq_poly([1, 0, 1])
        for i, c in enumerate(u_min.coeffs()):
            tp += c * base ** i * fmpq_poly([0] * (d - i) + [1])
        disc = cmath.sqrt(u * u - 4)
        roots = [(u + disc) / 2, (u - disc) / 2]
        if abs(u) > 2:
            t0 = max(roots, key=lambda z: abs(z.real))
        else:
            t0 = max(roots, key=lambda z: z.imag if upper else -z.imag)
        coeffs = [_to_fraction(c) for c in tp.coeffs()]
        return cls.algebraic(coeffs, t0)

    @classmethod
    def numeric(cls, t: complex) -> "ParameterSpec":
        if t == 0:
            raise DomainError("t must be nonzero")
        return cls(kind="numeric", approx=complex(t))

    # -- derived data

    @property
    def is_generic(self) -> bool:
        return self.kind == "generic"

    @property
    def is_exact(self) -> bool:
        return self.kind != "numeric"

    @property
    def order(self) -> int | None:
        """Multiplicative order of t when it is a root of unity, else None."""
        if self.kind == "root_of_unity":
            return self.r
        if self.kind == "rational" and self.value in (1, -1):
            return 1 if self.value == 1 else 2
        return None

    @property
    def t_value(self) -> complex:
        if self.kind == "root_of_unity":
            return cmath.exp(2j * math.pi * self.k / self.r)
        if self.kind == "rational":
            return complex(self.value)
        if self.kind in ("algebraic", "numeric"):
            return complex(self.approx)
        raise DomainError("a generic parameter has no numeric value")

    @property
    def s_value(self) -> complex:
        if self.kind == "root_of_unity":
            return cmath.exp(2j * math.pi * self.k / (4 * self.r))
        return _principal_fourth_root(self.t_value)

    @property
    def field(self):
        return _field_for(self)

    def describe(self) -> str:
        if self.kind == "generic":
            return "generic"
        if self.kind == "root_of_unity":
            return f"t = exp(2 pi i {self.k}/{self.r})"
        if self.kind == "rational":
            return f"t = {self.value}"
        if self.kind == "algebraic":
            return f"t ~ {self.t_value:.12g} root of {format_terms(dict(enumerate(self.poly)), 't')}"
        return f"t ~ {self.t_value:.12g} (numeric)"

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.kind == "root_of_unity":
            out.update(r=self.r, k=self.k)
        elif self.kind == "rational":
            out["t"] = str(self.value)
        elif self.kind == "algebraic":
            out["poly"] = [str(c) for c in self.poly]
        if self.kind != "generic":
            t, s = self.t_value, self.s_value
            out["t_approx"] = [t.real, t.imag]
            out["s_approx"] = [s.real, s.imag]
        return out


class NumericField:
    """Floating point stand-in; only evaluation is supported."""

    exact = False
    degree = None

    def __init__(self, spec: ParameterSpec):
        self.s_value = spec.s_value
        self.zero, self.one, self.gen = 0j, 1 + 0j, self.s_value

    def coerce(self, x) -> complex:
        if isinstance(x, (int, Fraction, float, complex)):
            return complex(x)
        if isinstance(x, (Laurent, RatFunc)):
            return complex(x.substitute(self.s_value))
        raise TypeError(f"cannot coerce {x!r}")

    def evaluate(self, x) -> complex:
        return self.coerce(x)

    def bar(self, x):
        raise DomainError("bar is not defined on numeric scalars")


_GENERIC = GenericField()


@lru_cache(maxsize=None)
def _field_for(spec: ParameterSpec):
    if spec.kind == "generic":
        return _GENERIC
    if spec.kind == "numeric":
        return NumericField(spec)
    if spec.kind == "root_of_unity":
        # s = exp(2 pi i k / 4r) has order 4r / gcd(k, 4r)
        m = 4 * spec.r // math.gcd(spec.k, 4 * spec.r)
        s = spec.s_value
        return NumberField(cyclotomic_poly(m), s, f"Q(zeta_{m})")
    if spec.kind == "rational":
        t_poly = _poly([-spec.value, 1])
    else:
        t_poly = _poly(spec.poly)
    s_poly = fmpq_poly([0])
    for i, c in enumerate(t_poly.coeffs()):
        s_poly += c * fmpq_poly([0] * (4 * i) + [1])
    s_poly = fmpq_poly(s_poly)
    flint.ctx.prec = max(flint.ctx.prec, 128)
    factor, ball = _nearest_root(s_poly, spec.s_value)
    return NumberField(factor, complex(ball.mid()), spec.describe())


# ---------------------------------------------------------------------------
# quantum integers and evaluation


@lru_cache(maxsize=None)
def _generic_quantum_integer(n: int) -> Laurent:
    if n < 0:
        return -_generic_quantum_integer(-n)
    return Laurent.from_terms({2 * (n - 1 - 2 * j): 1 for j in range(n)})


def quantum_integer(n: int, p: ParameterSpec | None = None):
    """[n] = (t^(n/2) - t^(-n/2)) / (t^(1/2) - t^(-1/2)) as a scalar of p's field."""
    q = _generic_quantum_integer(n)
    return q if p is None or p.is_generic else p.field.coerce(q)


def delta(p: ParameterSpec | None = None):
    """Value of a closed loop, -t^(1/2) - t^(-1/2) = -[2]."""
    return -quantum_integer(2, p)


def evaluate(x, p: ParameterSpec) -> complex:
    if p.is_generic:
        raise DomainError("cannot evaluate at a generic parameter")
    if isinstance(x, NFElement):
        return x.field.evaluate(x)
    if isinstance(x, (int, Fraction)):
        return complex(x)
    return complex(x.substitute(p.s_value))


# ---------------------------------------------------------------------------
# parsing


_TOKEN = re.compile(r"\s*(?:(\d+)|(\[-?\d+\])|([st])|(\S))")


def parse_scalar(text: str, field=None):
    """Parse expressions in s, t = s^4 and quantum integers ``[k]``.

    Accepts the printed grammar (``-s^2 - s^-2``, ``3/2*s^4``) together with
    parentheses, ``*``, ``/`` and integer powers.
    """
    field = field or _GENERIC
    tokens = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse scalar {text!r}")
        tokens.append(m.group(0).strip())
        pos = m.end()
    tokens.append("")
    i = 0

    def peek():
        return tokens[i]

    def take(expected=None):
        nonlocal i
        tok = tokens[i]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r} in {text!r}")
        i += 1
        return tok

    def expr():
        if peek() in "+-" and peek():
            sign = take()
            value = term()
            value = -value if sign == "-" else value
        else:
            value = term()
        while peek() in ("+", "-") and peek():
            sign = take()
            rhs = term()
            value = value + rhs if sign == "+" else value - rhs
        return value

    def term():
        value = power()
        while peek() in ("*", "/") and peek() or (peek() and (peek()[0].isdigit() or peek() in "st(" or peek().startswith("["))):
            if peek() in ("*", "/"):
                op = take()
            else:
                op = "*"
            rhs = power()
            value = value * rhs if op == "*" else value / rhs
        return value

    def power():
        base = atom()
        if peek() == "^":
            take()
            sign = 1
            if peek() in ("-", "+"):
                sign = -1 if take() == "-" else 1
            tok = take()
            if not tok.isdigit():
                raise ValueError(f"integer exponent expected in {text!r}")
            base = base ** (sign * int(tok))
        return base

    def atom():
        tok = take()
        if tok.isdigit():
            return field.coerce(int(tok))
        if tok == "s":
            return field.gen
        if tok == "t":
            return field.gen ** 4
        if tok.startswith("["):
            return field.coerce(_generic_quantum_integer(int(tok[1:-1])))
        if tok == "(":
            value = expr()
            take(")")
            return value
        if tok == "-":
            return -power()
        raise ValueError(f"unexpected token {tok!r} in {text!r}")

    value = expr()
    if peek():
        raise ValueError(f"trailing input in {text!r}")
    return value


def format_scalar(x) -> str:
    return str(x)


# ---------------------------------------------------------------------------
# algebraic numbers and roots of unity


class AlgebraicNumber:
    """A root of an irreducible rational polynomial, pinned by an isolating ball."""

    def __init__(self, poly: fmpq_poly, approx: complex):
        flint.ctx.prec = max(flint.ctx.prec, 128)
        self.poly, self.ball = _nearest_root(fmpq_poly(poly), complex(approx))
        self._check_isolated()

    def _check_isolated(self):
        roots = [b[0] if isinstance(b, tuple) else b for b in self.poly.complex_roots()]
        hits = [b for b in roots if b.overlaps(self.ball)]
        if len(hits) != 1:
            raise DomainError("isolating ball does not separate the root")

    @property
    def degree(self) -> int:
        return self.poly.degree()

    @property
    def value(self) -> complex:
        return complex(self.ball.mid())

    def modulus_ball(self):
        return abs(self.ball)

    def has_unit_modulus(self) -> bool:
        return self.modulus_ball().contains(1)

    def argument_degrees(self) -> float:
        return math.degrees(cmath.phase(self.value))

    def defining_polynomial(self) -> list[Fraction]:
        return [_to_fraction(c) for c in self.poly.coeffs()]

    def __repr__(self):
        return f"AlgebraicNumber({format_terms(dict(enumerate(self.defining_polynomial())), 'x')}, ~{self.value:.10g})"


INFINITE_ORDER = math.inf


def root_of_unity_order(lam: AlgebraicNumber, degree_bound: int) -> int | float:
    """Order of lam as a root of unity, or ``INFINITE_ORDER``.

    Only orders m with phi(m) <= degree_bound can occur for an algebraic number
    of degree <= degree_bound, and phi(m) >= sqrt(m/2), so the search is finite.
    """
    if not lam.has_unit_modulus():
        raise DomainError("eigenvalue is not on the unit circle")
    if lam.degree > degree_bound:
        raise DomainError(f"degree bound {degree_bound} below the degree {lam.degree}")
    for m in range(1, 2 * degree_bound * degree_bound + 3):
        if totient(m) > degree_bound:
            continue
        x_m = fmpq_poly([-1] + [0] * (m - 1) + [1])
        if x_m % lam.poly == 0:
            return m
    return INFINITE_ORDER
