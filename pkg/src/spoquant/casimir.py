"""Casimir operators, critical weights and the equivariant quantization.

Two independent routes build the quantization of a degree-``k`` symbol:

* ``quantize_iterative`` solves the triangular eigenvector system for the
  transported Casimir operator degree by degree;
* ``quantize_closed_form`` evaluates the explicit coefficient formulas.
"""
import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional

from .contact import DUAL_BASIS, DUAL_ORDER, GENERATOR_NAMES, GENERATORS
from .grassmann import ZERO, as_rational
from .operators import DiffOp, _double, format_diffop, lie_op
from .symbols import (
    GradedSymbol,
    Symbol,
    _as_graded,
    calL,
    lie_graded,
    lie_symbol,
    n_closed_form,
    principal_symbol,
)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

# (dual scalar, dual generator, generator): C = sum scalar * beta(dual) beta(generator)
CASIMIR_SPEC = tuple((DUAL_BASIS[u][0], DUAL_BASIS[u][1], u) for u in DUAL_ORDER)


def alpha(k, delta):
    """Eigenvalue of the Casimir operator on degree-``k`` symbols."""
    k2 = _double(k)
    d = as_rational(delta) - Fraction(k2, 2)
    return d * d if k2 % 2 == 0 else d * d - QUARTER


def casimir(S, lam, rep="L"):
    """Casimir operator of spo(2|2) in the representation ``L`` or ``calL``."""
    G = _as_graded(S)
    if rep == "L":
        act = lie_graded
    elif rep == "calL":
        def act(f, H):
            return calL(f, H, lam) if H else H
    else:
        raise ValueError(f"rep must be 'L' or 'calL', got {rep!r}")
    out = GradedSymbol(G.delta)
    for scalar, dual, primal in CASIMIR_SPEC:
        inner = act(GENERATORS[primal], G)
        out = out + act(GENERATORS[dual], inner) * scalar
    return out


def n_operator(S, lam):
    """``N = calC - C`` computed from the two Casimir operators."""
    return casimir(S, lam, "calL") - casimir(S, lam, "L")


# -- critical values ----------------------------------------------------

def critical_values(k_max):
    """Critical weights ``delta`` coming from degrees ``l < k <= k_max``.

    Built from the closed families; ``critical_values_brute`` is the
    independent check.
    """
    K2 = _double(k_max)
    out = set()
    for k2 in range(1, K2 + 1):
        k = Fraction(k2, 2)
        for l2 in range(k2):
            l = Fraction(l2, 2)
            if k2 % 2 == 0 and l2 % 2 == 0:
                out.add((k + l) / 2)
            elif k2 % 2 == 0:
                out.add((k * k - l * l + QUARTER) / (2 * (k - l)))
            elif l2 % 2 == 0:
                out.add((k * k - l * l - QUARTER) / (2 * (k - l)))
            else:
                # both half-integral: the collision is at (k+l)/2, already an
                # integer-family value once k_max is unrestricted
                out.add((k + l) / 2)
    return out


def critical_values_brute(k_max):
    """Solve ``alpha_k(delta) = alpha_l(delta)`` pairwise (linear in delta)."""
    K2 = _double(k_max)
    out = set()
    for k2 in range(K2 + 1):
        for l2 in range(k2):
            # alpha_k - alpha_l = slope * delta + intercept
            a0k, a1k = alpha(Fraction(k2, 2), 0), alpha(Fraction(k2, 2), 1)
            a0l, a1l = alpha(Fraction(l2, 2), 0), alpha(Fraction(l2, 2), 1)
            # alpha is quadratic with the same leading term, so the difference is affine
            intercept = a0k - a0l
            slope = (a1k - a1l) - intercept
            root = -intercept / slope
            assert alpha(Fraction(k2, 2), root) == alpha(Fraction(l2, 2), root)
            out.add(root)
    return out


def is_critical(delta, k_max):
    return as_rational(delta) in critical_values(k_max)


# -- quantization results ------------------------------------------------

class Status(enum.Enum):
    UNIQUE = "Unique"
    NO_SOLUTION = "NoSolution"
    AMBIGUOUS = "Ambiguous"


class ZeroDenominator(ArithmeticError):
    def __init__(self, coefficient, degree):
        super().__init__(f"coefficient {coefficient} has a zero denominator at degree {degree}")
        self.coefficient = coefficient
        self.degree = degree


@dataclass
class PivotDiagnostic:
    degree: Fraction
    pivot: Fraction          # alpha_k - alpha_degree
    residual: Symbol         # right-hand side of the equation at this degree

    @property
    def residual_zero(self):
        return not self.residual


@dataclass
class QuantizationResult:
    status: Status
    operator: Optional[DiffOp] = None
    graded: Optional[GradedSymbol] = None
    diagnostics: List[PivotDiagnostic] = field(default_factory=list)

    @property
    def ok(self):
        return self.status is Status.UNIQUE


def quantize_iterative(S, lam, n_source="casimir"):
    """Solve for the eigenvector of the transported Casimir with leading term ``S``.

    ``n_source`` picks how ``N`` is evaluated: ``"casimir"`` (difference of
    the two Casimir operators, independent of any closed formula) or
    ``"closed"``.
    """
    lam = as_rational(lam)
    if n_source == "casimir":
        def N(T):
            full = casimir(T, lam, "calL")
            low = full - alpha(T.k, T.delta) * T
            # C acts as alpha on each degree, so calC - alpha keeps only lower degrees
            assert not low.parts.get(T.k2), "Casimir is not scalar on the leading degree"
            return low
    elif n_source == "closed":
        def N(T):
            return n_closed_form(T, lam)
    else:
        raise ValueError(f"unknown n_source {n_source!r}")

    k2, delta = S.k2, S.delta
    a_k = alpha(S.k, delta)
    solved = GradedSymbol.of(S)
    rhs = N(S) if S else GradedSymbol(delta)
    diagnostics = []
    status = Status.UNIQUE
    for d2 in range(k2 - 1, -1, -1):
        d = Fraction(d2, 2)
        pivot = a_k - alpha(d, delta)
        residual = rhs[d]
        diagnostics.append(PivotDiagnostic(d, pivot, residual))
        if pivot == 0:
            if residual:
                return QuantizationResult(Status.NO_SOLUTION, diagnostics=diagnostics)
            status = Status.AMBIGUOUS
            continue
        Sd = residual * (1 / pivot)
        if not Sd:
            continue
        solved = solved + Sd
        low = N(Sd)
        rhs = rhs + low
    return QuantizationResult(status, solved.to_operator(lam), solved, diagnostics)


def _A(j):
    return -j


def _B(j, lam):
    return -(j + 2 * lam)


def _prod(values):
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def _quantize_closed_homogeneous(S, lam):
    k, delta, k2 = S.k, S.delta, S.k2
    F1, F2 = S.F1, S.F2
    # half-step sign: (-1)^{|S|} for integral k, (-1)^{|S|+1} for half-integral k
    sign = (-1) ** ((S.parity or 0) + (0 if S.is_integral else 1))
    a_k = alpha(k, delta)

    def gap(i):
        return a_k - alpha(k - i, delta)

    def check(value, name, degree):
        if value == 0:
            raise ZeroDenominator(name, degree)
        return value

    def dx(F, n):
        return F.dx(n) if n else F

    def dd(F, n):
        # Dbar1 Dbar2 dx^n applied to F
        return dx(F, n).dbar(2).dbar(1)

    A, B = _A, (lambda j: _B(j, lam))
    graded = GradedSymbol.of(S)
    for d2 in range(k2 - 1, -1, -1):
        d = Fraction(d2, 2)
        l = k - d
        li = int(l)  # integer part
        if S.is_integral and l.denominator == 1:
            P = _prod(A(k - i) * B(k - i) for i in range(1, li))
            den = check(_prod(gap(i) for i in range(1, li + 1)), f"C_{l}", d)
            C = P / den
            Dl = -l * P / (2 * check(gap(HALF), f"D_{l}", d) * den)
            AkBkl = A(k) * B(k - l)
            AklBk = A(k - l) * B(k)
            G1 = dx(F1, li) * (C * AkBkl + Dl * AkBkl)
            G2 = dx(F2, li) * (C * AklBk + Dl * AklBk)
            if li >= 1:
                G1 = G1 - dd(F2, li - 1) * (Dl * B(k) * B(k - l))
                G2 = G2 + dd(F1, li - 1) * (Dl * A(k) * A(k - l))
        elif S.is_integral:
            P = _prod(A(k - i) * B(k - i) for i in range(1, li + 1))
            den = _prod(gap(i) for i in range(1, li + 1))
            E = P / (2 * check(gap(HALF), f"E_{l}", d) * check(den, f"E_{l}", d))
            u1, u2 = dx(F1, li), dx(F2, li)
            G1 = (u1.dbar(1) * A(k) + u2.dbar(2) * B(k)) * (sign * E)
            G2 = (u1.dbar(2) * A(k) - u2.dbar(1) * B(k)) * (sign * E)
        elif l.denominator == 1:
            P = _prod(A(k - HALF - i) * B(k - HALF - i) for i in range(li))
            den = check(_prod(gap(i) for i in range(1, li + 1)), f"C'_{l}", d)
            C = P / den
            Dl = -l * P / (2 * check(gap(HALF), f"D'_{l}", d) * den)
            G1 = dx(F1, li) * (C + Dl) - dd(F2, li - 1) * Dl
            G2 = dx(F2, li) * (C + Dl) + dd(F1, li - 1) * Dl
        else:
            P = _prod(A(k - HALF - i) * B(k - HALF - i) for i in range(li))
            den = _prod(gap(i) for i in range(1, li + 1))
            E = P / (2 * check(gap(HALF), f"E'_{l}", d) * check(den, f"E'_{l}", d))
            u1, u2 = dx(F1, li), dx(F2, li)
            G1 = (u1.dbar(1) + u2.dbar(2)) * (sign * E * B(k - l))
            G2 = (u1.dbar(2) - u2.dbar(1)) * (sign * E * A(k - l))
        if d2 == 0:
            if G2:
                raise AssertionError("closed form produced a degree-0 second component")
            G2 = ZERO
        graded = graded + Symbol(d, delta, G1, G2)
    return graded


def quantize_closed_form(S, lam):
    """Quantization from the explicit coefficient formulas.

    Raises ``ZeroDenominator`` when a needed coefficient is undefined.
    """
    lam = as_rational(lam)
    graded = GradedSymbol(S.delta)
    for part in S.split():
        if part:
            graded = graded + _quantize_closed_homogeneous(part, lam)
    if not graded:
        graded = GradedSymbol.of(S)
    return QuantizationResult(Status.UNIQUE, graded.to_operator(lam), graded)


def quantize(S, lam, method="iterative"):
    if method == "iterative":
        return quantize_iterative(S, lam)
    if method in ("closed", "closed-form"):
        return quantize_closed_form(S, lam)
    raise ValueError(f"unknown method {method!r}")


# -- equivariance check ----------------------------------------------------

@dataclass
class Counterexample:
    generator: str
    symbol: Symbol
    lhs: DiffOp
    rhs: DiffOp

    def diff(self):
        return format_diffop(self.lhs - self.rhs)


@dataclass
class EquivarianceReport:
    lam: Fraction
    delta: Fraction
    k: Fraction
    trials: int
    passed: dict = field(default_factory=dict)
    counterexamples: List[Counterexample] = field(default_factory=list)

    @property
    def ok(self):
        return all(self.passed.values())

    def summary(self):
        n = sum(self.passed.values())
        return f"{'PASS' if self.ok else 'FAIL'} {n}/{len(self.passed)} generators"


def verify_equivariance(lam, delta, k, trials=5, method="closed", seed=0, max_degree=4,
                        quantizer: Optional[Callable] = None):
    """Check ``calL_{X_f}(Q(S)) == Q(L_{X_f} S)`` exactly on random symbols.

    ``quantizer`` maps a Symbol to a DiffOp; by default the quantization of
    the chosen ``method`` (raising if it is not Unique).
    """
    from .sampling import random_symbol

    lam, delta = as_rational(lam), as_rational(delta)
    if quantizer is None:
        def quantizer(T):
            res = quantize(T, lam, method)
            if not res.ok:
                raise ArithmeticError(f"quantization is {res.status.value} for {T!r}")
            return res.operator
    rng = random.Random(seed)
    report = EquivarianceReport(lam, delta, as_rational(k), trials)
    samples = [random_symbol(rng, k, delta, max_degree=max_degree) for _ in range(trials)]
    cache = {}

    def Q(T):
        if T not in cache:
            cache[T] = quantizer(T)
        return cache[T]

    for name in GENERATOR_NAMES:
        f = GENERATORS[name]
        ok = True
        for S in samples:
            lhs = lie_op(f, Q(S))
            rhs = Q(lie_symbol(f, S))
            if lhs != rhs:
                ok = False
                report.counterexamples.append(Counterexample(name, S, lhs, rhs))
        report.passed[name] = ok
    return report


def check_principal_symbol(result, S):
    return principal_symbol(result.operator, S.k) == S
