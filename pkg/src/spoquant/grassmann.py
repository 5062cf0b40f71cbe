"""Superfunctions on the supercircle S^{1|2}.

A superfunction is ``f0 + t1*f1 + t2*f2 + t1*t2*f12`` where ``t1``, ``t2`` are
odd Grassmann generators and the four components are polynomials in the even
coordinate ``x`` with exact rational coefficients.
"""
from fractions import Fraction
from math import comb


def as_rational(value):
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    return Fraction(value)


class Poly:
    """Dense univariate polynomial in x, coefficients listed low degree first.

    Trailing zeros are stripped on construction, so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [as_rational(a) for a in coeffs]
        while c and not c[-1]:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def _raw(cls, coeffs):
        # coeffs are Fractions already; only strip
        p = object.__new__(cls)
        n = len(coeffs)
        while n and not coeffs[n - 1]:
            n -= 1
        p.coeffs = tuple(coeffs[:n])
        return p

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @property
    def degree(self):
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __neg__(self):
        return Poly._raw([-c for c in self.coeffs])

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly._raw(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return ZERO_POLY
            out = [Fraction(0)] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] += ca * cb
            return Poly._raw(out)
        s = as_rational(other)
        if not s:
            return ZERO_POLY
        return Poly._raw([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def derivative(self, order=1):
        c = self.coeffs
        if order == 0:
            return self
        if len(c) <= order:
            return ZERO_POLY
        return Poly._raw([c[i] * _falling(i, order) for i in range(order, len(c))])

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _falling(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


ZERO_POLY = Poly()


class SuperFn:
    """Element ``f0 + t1 f1 + t2 f2 + t1 t2 f12`` of C(S^{1|2}).

    Instances are immutable. Arithmetic follows the Grassmann sign rules
    ``t1 t1 = t2 t2 = 0`` and ``t2 t1 = -t1 t2``.
    """

    __slots__ = ("f0", "f1", "f2", "f12")

    def __init__(self, f0=ZERO_POLY, f1=ZERO_POLY, f2=ZERO_POLY, f12=ZERO_POLY):
        self.f0 = _poly(f0)
        self.f1 = _poly(f1)
        self.f2 = _poly(f2)
        self.f12 = _poly(f12)

    @classmethod
    def _raw(cls, f0, f1, f2, f12):
        s = object.__new__(cls)
        s.f0, s.f1, s.f2, s.f12 = f0, f1, f2, f12
        return s

    @classmethod
    def const(cls, c):
        return cls(Poly([c]))

    def components(self):
        return (self.f0, self.f1, self.f2, self.f12)

    def __bool__(self):
        return bool(self.f0 or self.f1 or self.f2 or self.f12)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperFn.const(other)
        if not isinstance(other, SuperFn):
            return NotImplemented
        return self.components() == other.components()

    def __hash__(self):
        return hash(self.components())

    def __repr__(self):
        from .expr import format_superfn

        return f"SuperFn({format_superfn(self)!r})"

    def __str__(self):
        from .expr import format_superfn

        return format_superfn(self)

    # -- parity ---------------------------------------------------------
    @property
    def parity(self):
        """0 if even, 1 if odd, None if mixed. The zero function counts as even."""
        has_even = bool(self.f0 or self.f12)
        has_odd = bool(self.f1 or self.f2)
        if has_even and has_odd:
            return None
        return 1 if has_odd else 0

    def even(self):
        return SuperFn._raw(self.f0, ZERO_POLY, ZERO_POLY, self.f12)

    def odd(self):
        return SuperFn._raw(ZERO_POLY, self.f1, self.f2, ZERO_POLY)

    def involute(self):
        """Grade involution: even part minus odd part."""
        return SuperFn._raw(self.f0, -self.f1, -self.f2, self.f12)

    # -- arithmetic -----------------------------------------------------
    def __neg__(self):
        return SuperFn._raw(-self.f0, -self.f1, -self.f2, -self.f12)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperFn.const(other)
        return SuperFn._raw(
            self.f0 + other.f0, self.f1 + other.f1, self.f2 + other.f2, self.f12 + other.f12
        )

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperFn.const(other)
        return SuperFn._raw(
            self.f0 - other.f0, self.f1 - other.f1, self.f2 - other.f2, self.f12 - other.f12
        )

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, SuperFn):
            a, b = self, other
            return SuperFn._raw(
                a.f0 * b.f0,
                a.f0 * b.f1 + a.f1 * b.f0,
                a.f0 * b.f2 + a.f2 * b.f0,
                a.f0 * b.f12 + a.f12 * b.f0 + a.f1 * b.f2 - a.f2 * b.f1,
            )
        if isinstance(other, Poly):
            return SuperFn._raw(self.f0 * other, self.f1 * other, self.f2 * other, self.f12 * other)
        s = as_rational(other)
        return SuperFn._raw(self.f0 * s, self.f1 * s, self.f2 * s, self.f12 * s)

    def __rmul__(self, other):
        # scalars and Polys are even, so they commute with everything
        return self * other

    # -- derivations ----------------------------------------------------
    def dx(self, order=1):
        return SuperFn._raw(
            self.f0.derivative(order),
            self.f1.derivative(order),
            self.f2.derivative(order),
            self.f12.derivative(order),
        )

    def dtheta(self, i):
        """Left derivative in t1 (i=1) or t2 (i=2)."""
        if i == 1:
            return SuperFn._raw(self.f1, ZERO_POLY, self.f12, ZERO_POLY)
        if i == 2:
            return SuperFn._raw(self.f2, -self.f12, ZERO_POLY, ZERO_POLY)
        raise ValueError(f"odd direction must be 1 or 2, got {i!r}")

    def dbar(self, i):
        """Contact derivative ``dtheta_i - t_i dx``."""
        fx = self.dx()
        if i == 1:
            # t1 * (g0 + t1 g1 + t2 g2 + t1t2 g12) = t1 g0 + t1t2 g2
            shifted = SuperFn._raw(ZERO_POLY, fx.f0, ZERO_POLY, fx.f2)
        elif i == 2:
            # t2 * g = t2 g0 - t1t2 g1
            shifted = SuperFn._raw(ZERO_POLY, ZERO_POLY, fx.f0, -fx.f1)
        else:
            raise ValueError(f"odd direction must be 1 or 2, got {i!r}")
        return self.dtheta(i) - shifted


def _poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction, str)):
        return Poly([value])
    return Poly(value)


ZERO = SuperFn()
ONE = SuperFn.const(1)
X = SuperFn(Poly([0, 1]))
T1 = SuperFn(f1=Poly([1]))
T2 = SuperFn(f2=Poly([1]))
T1T2 = SuperFn(f12=Poly([1]))


def superfn_mul(a, b):
    return a * b


def superfn_derive(direction, f):
    """Derivative of ``f`` along ``"x"``, ``"t1"`` or ``"t2"`` (left convention for odd)."""
    if direction == "x":
        return f.dx()
    if direction in ("t1", "theta1", 1):
        return f.dtheta(1)
    if direction in ("t2", "theta2", 2):
        return f.dtheta(2)
    raise ValueError(f"unknown direction {direction!r}")


def dbar(i, f):
    return f.dbar(i)


def parity_split(f):
    return f.even(), f.odd()


def leibniz_dx(f, order):
    """Coefficients of ``dx^order o f`` as a list ``[(j, binom * f^(j)), ...]``."""
    return [(j, f.dx(j) * comb(order, j)) for j in range(order + 1)]
