"""Weighted densities and differential operators on S^{1|2}.

Operators are kept in the normal form ``sum a_{l,m,n} dx^l Dbar1^m Dbar2^n``
with ``m, n`` in ``{0, 1}`` and coefficients on the left.  Orders live in the
half-integers, so internally they are carried doubled: ``2l + m + n``.
"""
from fractions import Fraction
from math import comb

from .contact import hamiltonian_field
from .grassmann import ZERO, SuperFn, as_rational


class WeightMismatch(ValueError):
    pass


class DiffOp:
    """Differential operator from lambda-densities to mu-densities."""

    __slots__ = ("terms", "lam", "mu")

    def __init__(self, terms=None, lam=0, mu=None):
        self.lam = as_rational(lam)
        self.mu = self.lam if mu is None else as_rational(mu)
        clean = {}
        for key, coeff in (terms or {}).items():
            l, m, n = key
            if l < 0 or m not in (0, 1) or n not in (0, 1):
                raise ValueError(f"monomial {key} is not in normal form")
            if coeff:
                clean[(l, m, n)] = coeff
        self.terms = clean

    @classmethod
    def identity(cls, lam=0):
        return cls({(0, 0, 0): SuperFn.const(1)}, lam, lam)

    @classmethod
    def multiplication(cls, f, lam=0, mu=None):
        return cls({(0, 0, 0): f}, lam, mu)

    @property
    def delta(self):
        return self.mu - self.lam

    def with_weights(self, lam, mu):
        return DiffOp(self.terms, lam, mu)

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return (self.lam, self.mu) == (other.lam, other.mu) and self.terms == other.terms

    def __hash__(self):
        return hash((self.lam, self.mu, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"DiffOp({format_diffop(self)}; lam={self.lam}, mu={self.mu})"

    def _check_same(self, other):
        if (self.lam, self.mu) != (other.lam, other.mu):
            raise WeightMismatch(
                f"weights ({self.lam}, {self.mu}) and ({other.lam}, {other.mu}) differ"
            )

    def __add__(self, other):
        self._check_same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out[key] + c if key in out else c
        return DiffOp(out, self.lam, self.mu)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return DiffOp({k: -c for k, c in self.terms.items()}, self.lam, self.mu)

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return DiffOp({k: c * s for k, c in self.terms.items()}, self.lam, self.mu)

    __rmul__ = __mul__

    def left_multiply(self, g):
        """``g o D`` for a superfunction ``g``."""
        return DiffOp({k: g * c for k, c in self.terms.items()}, self.lam, self.mu)

    def coeff(self, l, m=0, n=0):
        return self.terms.get((l, m, n), ZERO)

    def __matmul__(self, other):
        return op_compose(self, other)

    def __call__(self, F):
        return op_apply(self, F)

    # -- grading --------------------------------------------------------
    def split(self):
        """(even part, odd part).  A term's parity is its coefficient's plus ``m + n``."""
        even, odd = {}, {}
        for (l, m, n), c in self.terms.items():
            ce, co = c.even(), c.odd()
            if (m + n) % 2:
                ce, co = co, ce
            if ce:
                even[(l, m, n)] = ce
            if co:
                odd[(l, m, n)] = co
        return DiffOp(even, self.lam, self.mu), DiffOp(odd, self.lam, self.mu)

    @property
    def parity(self):
        even, odd = self.split()
        if even and odd:
            return None
        return 1 if odd else 0

    @property
    def order2(self):
        """Twice the filtration order; -1 for the zero operator."""
        return max((2 * l + m + n for l, m, n in self.terms), default=-1)


def op_order(D):
    """Filtration order ``max(l + m/2 + n/2)``; ``None`` for the zero operator."""
    o = D.order2
    return None if o < 0 else Fraction(o, 2)


def _reduce_dbar(a, b, q, r):
    """``Dbar1^a Dbar2^b Dbar1^q Dbar2^r`` as ``sign * dx^extra Dbar1^m Dbar2^n``."""
    sign = -1 if b and q else 1
    c1, c2, extra = a + q, b + r, 0
    if c1 == 2:
        sign, c1, extra = -sign, 0, extra + 1
    if c2 == 2:
        sign, c2, extra = -sign, 0, extra + 1
    return sign, extra, c1, c2


def _push(l, m, n, b):
    """Normal-order ``dx^l Dbar1^m Dbar2^n o b`` for a superfunction ``b``.

    Uses ``Dbar_i o b = Dbar_i(b) + b^* Dbar_i`` (``b^*`` the grade involution)
    and the Leibniz rule for ``dx^l``.
    """
    terms = [(b, 0, 0)]
    if n:
        terms = [(b.dbar(2), 0, 0), (b.involute(), 0, 1)]
    if m:
        pushed = []
        for c, _, nn in terms:
            pushed.append((c.dbar(1), 0, nn))
            pushed.append((c.involute(), 1, nn))
        terms = pushed
    if not l:
        return [(c, 0, mm, nn) for c, mm, nn in terms if c]
    out = []
    for c, mm, nn in terms:
        if not c:
            continue
        for j in range(l + 1):
            cj = c.dx(j)
            if cj:
                out.append((cj * comb(l, j), l - j, mm, nn))
    return out


def op_compose(D1, D2):
    """Normal form of ``D1 o D2``; requires ``D1.lam == D2.mu``."""
    if D1.lam != D2.mu:
        raise WeightMismatch(f"cannot compose: source weight {D1.lam} != target weight {D2.mu}")
    out = {}
    for (l, m, n), a in D1.terms.items():
        for (p, q, r), b in D2.terms.items():
            for c, s, mm, nn in _push(l, m, n, b):
                sign, extra, m2, n2 = _reduce_dbar(mm, nn, q, r)
                key = (s + p + extra, m2, n2)
                val = a * c
                if sign < 0:
                    val = -val
                out[key] = out[key] + val if key in out else val
    return DiffOp(out, D2.lam, D1.mu)


def op_apply(D, F):
    """Apply ``D`` to the density ``F``: Dbar2 first, then Dbar1, then dx^l."""
    out = ZERO
    for (l, m, n), a in D.terms.items():
        g = F
        if n:
            g = g.dbar(2)
        if m:
            g = g.dbar(1)
        if l:
            g = g.dx(l)
        out = out + a * g
    return out


# -- Lie derivatives ----------------------------------------------------

def density_operator(f, lam):
    """``L^lam_{X_f} = X_f + lam f'`` as an operator on lambda-densities."""
    op = hamiltonian_field(f).as_diffop(lam, lam)
    lam = as_rational(lam)
    if lam:
        op = op + DiffOp.multiplication(f.dx() * lam, lam, lam)
    return op


def lie_density(f, lam, F):
    return hamiltonian_field(f)(F) + f.dx() * F * as_rational(lam)


def lie_op(f, D):
    """``L^mu_{X_f} o D - (-1)^{|f||D|} D o L^lam_{X_f}``, bilinear in parity parts."""
    out = DiffOp({}, D.lam, D.mu)
    parts = D.split()
    for fpar, fp in enumerate((f.even(), f.odd())):
        if not fp:
            continue
        Lmu = density_operator(fp, D.mu)
        Llam = density_operator(fp, D.lam)
        for dpar, Dp in enumerate(parts):
            if not Dp:
                continue
            right = op_compose(Dp, Llam)
            out = out + op_compose(Lmu, Dp)
            out = out + right if fpar and dpar else out - right
    return out


def principal_symbol_pair(D, k):
    """Density pair of ``D`` at degree ``k`` (see ``symbols.principal_symbol``)."""
    k2 = _double(k)
    if D.order2 > k2:
        raise ValueError(f"operator has order {op_order(D)} > {Fraction(k2, 2)}")
    if k2 % 2 == 0:
        l = k2 // 2
        if l == 0:
            return D.coeff(0), ZERO
        return D.coeff(l), D.coeff(l - 1, 1, 1)
    l = k2 // 2
    return D.coeff(l, 1, 0), D.coeff(l, 0, 1)


def _double(k):
    k2 = as_rational(k) * 2
    if k2.denominator != 1 or k2 < 0:
        raise ValueError(f"degree must be a non-negative half-integer, got {k}")
    return int(k2)


_MONO = {(0, 0): "", (1, 0): "Dbar1", (0, 1): "Dbar2", (1, 1): "Dbar1*Dbar2"}


def format_monomial(l, m, n):
    parts = []
    if l == 1:
        parts.append("dx")
    elif l > 1:
        parts.append(f"dx^{l}")
    if _MONO[(m, n)]:
        parts.append(_MONO[(m, n)])
    return "*".join(parts) or "Id"


def format_diffop(D):
    if not D.terms:
        return "0"
    pieces = []
    for key in sorted(D.terms):
        pieces.append(f"({D.terms[key]})*{format_monomial(*key)}")
    return " + ".join(pieces)
