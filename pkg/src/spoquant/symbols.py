"""Symbol modules, the affine quantization map, gamma and the N operator.

A homogeneous symbol of degree ``k`` is stored as a pair of densities
``(F1, F2)``:

* integer ``k``:      ``[F1 dx^k + F2 dx^(k-1) Dbar1 Dbar2]``
* half-integer ``k``: ``[F1 dx^(k-1/2) Dbar1 + F2 dx^(k-1/2) Dbar2]``

At ``k = 0`` only ``F1`` exists; ``F2`` is forced to zero.
"""
from fractions import Fraction

from .contact import AFFINE_NAMES, GENERATORS, QUADRATIC_NAMES
from .grassmann import ZERO, as_rational
from .operators import DiffOp, _double, lie_density, principal_symbol_pair

HALF = Fraction(1, 2)


class Symbol:
    __slots__ = ("k2", "delta", "F1", "F2")

    def __init__(self, k, delta, F1, F2=ZERO):
        self.k2 = _double(k)
        self.delta = as_rational(delta)
        if self.k2 == 0 and F2:
            raise ValueError("degree-0 symbols have no second component")
        self.F1, self.F2 = F1, F2

    @classmethod
    def _from_k2(cls, k2, delta, F1, F2=ZERO):
        return cls(Fraction(k2, 2), delta, F1, F2)

    @property
    def k(self):
        return Fraction(self.k2, 2)

    @property
    def is_integral(self):
        return self.k2 % 2 == 0

    @property
    def parity(self):
        """Common parity of F1 and F2, or None if the symbol is mixed."""
        p1, p2 = self.F1.parity, self.F2.parity
        if p1 is None or p2 is None:
            return None
        if not self.F1:
            return p2
        if not self.F2:
            return p1
        return p1 if p1 == p2 else None

    def split(self):
        return (
            Symbol._from_k2(self.k2, self.delta, self.F1.even(), self.F2.even()),
            Symbol._from_k2(self.k2, self.delta, self.F1.odd(), self.F2.odd()),
        )

    def __bool__(self):
        return bool(self.F1 or self.F2)

    def __eq__(self, other):
        if not isinstance(other, Symbol):
            return NotImplemented
        return (self.k2, self.delta, self.F1, self.F2) == (
            other.k2, other.delta, other.F1, other.F2)

    def __hash__(self):
        return hash((self.k2, self.delta, self.F1, self.F2))

    def __repr__(self):
        return f"Symbol(k={self.k}, delta={self.delta}, F1={self.F1}, F2={self.F2})"

    def _same(self, other):
        if (self.k2, self.delta) != (other.k2, other.delta):
            raise ValueError("symbols live in different spaces")

    def __add__(self, other):
        self._same(other)
        return Symbol._from_k2(self.k2, self.delta, self.F1 + other.F1, self.F2 + other.F2)

    def __sub__(self, other):
        self._same(other)
        return Symbol._from_k2(self.k2, self.delta, self.F1 - other.F1, self.F2 - other.F2)

    def __neg__(self):
        return Symbol._from_k2(self.k2, self.delta, -self.F1, -self.F2)

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return Symbol._from_k2(self.k2, self.delta, self.F1 * s, self.F2 * s)

    __rmul__ = __mul__


class GradedSymbol:
    """Finite sum of homogeneous-degree symbols sharing one ``delta``.

    Keys are doubled degrees; zero parts are dropped so equality is structural.
    """

    __slots__ = ("delta", "parts")

    def __init__(self, delta, parts=()):
        self.delta = as_rational(delta)
        self.parts = {}
        for S in parts:
            self._add_in_place(S)

    @classmethod
    def of(cls, S):
        return cls(S.delta, [S])

    def _add_in_place(self, S):
        if S.delta != self.delta:
            raise ValueError(f"delta mismatch: {S.delta} != {self.delta}")
        cur = self.parts.get(S.k2)
        new = S if cur is None else cur + S
        if new:
            self.parts[S.k2] = new
        else:
            self.parts.pop(S.k2, None)

    def __getitem__(self, k):
        k2 = _double(k)
        return self.parts.get(k2) or Symbol._from_k2(k2, self.delta, ZERO, ZERO)

    def degrees(self):
        return sorted((Fraction(k2, 2) for k2 in self.parts), reverse=True)

    def symbols(self):
        return [self.parts[k2] for k2 in sorted(self.parts, reverse=True)]

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if not isinstance(other, GradedSymbol):
            return NotImplemented
        return self.delta == other.delta and self.parts == other.parts

    def __repr__(self):
        inner = ", ".join(f"{Fraction(k2, 2)}: ({S.F1}, {S.F2})" for k2, S in sorted(self.parts.items()))
        return f"GradedSymbol(delta={self.delta}, {{{inner}}})"

    def __add__(self, other):
        if isinstance(other, Symbol):
            other = GradedSymbol.of(other)
        out = GradedSymbol(self.delta, self.symbols())
        for S in other.symbols():
            out._add_in_place(S)
        return out

    def __neg__(self):
        return GradedSymbol(self.delta, [-S for S in self.symbols()])

    def __sub__(self, other):
        if isinstance(other, Symbol):
            other = GradedSymbol.of(other)
        return self + (-other)

    def __mul__(self, scalar):
        return GradedSymbol(self.delta, [S * scalar for S in self.symbols()])

    __rmul__ = __mul__

    def to_operator(self, lam):
        """Sum of ``q_aff`` over all degrees."""
        lam = as_rational(lam)
        out = DiffOp({}, lam, lam + self.delta)
        for S in self.symbols():
            out = out + q_aff(S, lam)
        return out


def _as_graded(S):
    return GradedSymbol.of(S) if isinstance(S, Symbol) else S


# -- affine quantization ------------------------------------------------

def q_aff(S, lam):
    """Affine quantization of a homogeneous-degree symbol; weights ``(lam, lam + delta)``."""
    lam = as_rational(lam)
    l = S.k2 // 2
    if S.is_integral:
        terms = {(l, 0, 0): S.F1}
        if l:
            terms[(l - 1, 1, 1)] = S.F2
    else:
        terms = {(l, 1, 0): S.F1, (l, 0, 1): S.F2}
    return DiffOp(terms, lam, lam + S.delta)


def q_aff_inv(D):
    """Decompose a normal-form operator into its graded symbol."""
    acc = {}
    for (l, m, n), c in D.terms.items():
        if (m, n) == (0, 0):
            k2, slot = 2 * l, 0
        elif (m, n) == (1, 1):
            k2, slot = 2 * l + 2, 1
        else:
            k2, slot = 2 * l + 1, m == 0
        pair = acc.setdefault(k2, [ZERO, ZERO])
        pair[slot] = pair[slot] + c
    return GradedSymbol(D.delta, [Symbol._from_k2(k2, D.delta, *pair) for k2, pair in acc.items()])


def principal_symbol(D, k):
    """Class of ``D`` in degree ``k`` (requires order(D) <= k)."""
    return Symbol(k, D.delta, *principal_symbol_pair(D, k))


# -- module structures --------------------------------------------------

def lie_symbol(f, S):
    """Action of ``X_f`` on a degree-``k`` symbol (the graded action ``L``)."""
    w = S.delta - S.k
    F1 = lie_density(f, w, S.F1)
    F2 = lie_density(f, w, S.F2)
    if not S.is_integral:
        h = f.dbar(2).dbar(1) * HALF
        F1, F2 = F1 - h * S.F2, F2 + h * S.F1
    return Symbol._from_k2(S.k2, S.delta, F1, F2)


def lie_graded(f, G):
    return GradedSymbol(G.delta, [lie_symbol(f, S) for S in G.symbols()])


def calL(f, G, lam):
    """Action of ``X_f`` transported from operators through ``q_aff``."""
    from .operators import lie_op

    G = _as_graded(G)
    return q_aff_inv(lie_op(f, G.to_operator(lam)))


def gamma(f, S, lam):
    """``gamma(X_f) = calL_{X_f} - L_{X_f}`` on a single-degree symbol, computed at operator level."""
    return calL(f, S, lam) - lie_symbol(f, S)


def _require_homogeneous(S):
    p = S.parity
    if p is None:
        raise ValueError("symbol must be parity-homogeneous; split it first")
    return p


def gamma_closed_form(f, S, lam):
    """Closed formula for gamma on the three quadratic generators.

    ``f`` is a generator name or a homogeneous Hamiltonian among
    ``x^2, x*t1, x*t2`` (or any linear combination with the same parity).
    """
    if isinstance(f, str):
        if f not in QUADRATIC_NAMES:
            raise ValueError(f"closed form only covers {QUADRATIC_NAMES}, got {f!r}")
        f = GENERATORS[f]
    out = GradedSymbol(S.delta)
    for part in S.split():
        if part:
            out = out + _gamma_closed_homogeneous(f, part, as_rational(lam))
    return out


def _gamma_closed_homogeneous(f, S, lam):
    fp = f.parity
    if fp is None:
        raise ValueError("Hamiltonian must be parity-homogeneous")
    sf = -1 if fp else 1
    sF = -1 if _require_homogeneous(S) else 1
    F1, F2, k, delta = S.F1, S.F2, S.k, S.delta
    d1, d2 = f.dx().dbar(1), f.dx().dbar(2)
    f2 = f.dx(2)
    out = GradedSymbol(delta)
    if S.is_integral:
        if k == 0:
            return out
        c = k * HALF
        # degree k - 1/2
        G1 = (d1 * F1 * c + d2 * F2 * (c + lam)) * (sf * sF)
        G2 = (d2 * F1 * c - d1 * F2 * (c + lam)) * (sf * sF)
        out = out + Symbol(k - HALF, delta, G1, G2)
        # degree k - 1
        H1 = f2 * F1 * (-k * ((k - 1) * HALF + lam))
        H2 = f2 * F2 * (-(k - 1) * (c + lam)) if k > 1 else ZERO
        out = out + Symbol(k - 1, delta, H1, H2)
        return out
    j = k - HALF
    c = j * HALF
    # degree k - 1/2 = j (integral)
    G1 = (d1 * F1 + d2 * F2) * (-(c + lam) * sF * sf)
    G2 = (d1 * F2 - d2 * F1) * (c * sf * sF) if j > 0 else ZERO
    out = out + Symbol(j, delta, G1, G2)
    if j > 0:
        factor = j * (-c - lam)
        out = out + Symbol(k - 1, delta, f2 * F1 * factor, f2 * F2 * factor)
    return out


def n_closed_form(S, lam):
    """Closed formula for ``N = calC - C`` on a single-degree symbol."""
    out = GradedSymbol(S.delta)
    for part in S.split():
        if part:
            out = out + _n_closed_homogeneous(part, as_rational(lam))
    return out


def _n_closed_homogeneous(S, lam):
    sF = -1 if _require_homogeneous(S) else 1
    F1, F2, k, delta = S.F1, S.F2, S.k, S.delta
    out = GradedSymbol(delta)
    if S.is_integral:
        if k == 0:
            return out
        c = k * HALF
        G1 = (F1.dbar(1) * c + F2.dbar(2) * (c + lam)) * -sF
        G2 = (F1.dbar(2) * c - F2.dbar(1) * (c + lam)) * -sF
        out = out + Symbol(k - HALF, delta, G1, G2)
        H1 = F1.dx() * (2 * k * ((k - 1) * HALF + lam))
        H2 = F2.dx() * (2 * (k - 1) * (c + lam)) if k > 1 else ZERO
        return out + Symbol(k - 1, delta, H1, H2)
    j = k - HALF
    c = j * HALF
    G1 = (F1.dbar(1) + F2.dbar(2)) * ((c + lam) * sF)
    G2 = (F1.dbar(2) - F2.dbar(1)) * (c * sF) if j > 0 else ZERO
    out = out + Symbol(j, delta, G1, G2)
    if j > 0:
        factor = 2 * j * (c + lam)
        out = out + Symbol(k - 1, delta, F1.dx() * factor, F2.dx() * factor)
    return out


def gamma_vanishes_on_affine(S, lam):
    return all(not gamma(GENERATORS[name], S, lam) for name in AFFINE_NAMES)
