"""Vector fields on S^{1|2}, contact Hamiltonians and the matrix model of spo(2|2)."""
from fractions import Fraction

from .grassmann import ONE, T1, T1T2, T2, X, ZERO, SuperFn, as_rational

HALF = Fraction(1, 2)


class VectorField:
    """The derivation ``a*dx + b1*dtheta1 + b2*dtheta2`` (coefficients on the left)."""

    __slots__ = ("a", "b1", "b2")

    def __init__(self, a=ZERO, b1=ZERO, b2=ZERO):
        self.a, self.b1, self.b2 = a, b1, b2

    def components(self):
        return (self.a, self.b1, self.b2)

    def __eq__(self, other):
        if not isinstance(other, VectorField):
            return NotImplemented
        return self.components() == other.components()

    def __hash__(self):
        return hash(self.components())

    def __repr__(self):
        return f"VectorField(a={self.a}, b1={self.b1}, b2={self.b2})"

    def __bool__(self):
        return bool(self.a or self.b1 or self.b2)

    def __add__(self, other):
        return VectorField(self.a + other.a, self.b1 + other.b1, self.b2 + other.b2)

    def __sub__(self, other):
        return VectorField(self.a - other.a, self.b1 - other.b1, self.b2 - other.b2)

    def __neg__(self):
        return VectorField(-self.a, -self.b1, -self.b2)

    def __mul__(self, scalar):
        s = as_rational(scalar)
        return VectorField(self.a * s, self.b1 * s, self.b2 * s)

    __rmul__ = __mul__

    def scale_by(self, g):
        """Left multiplication by the superfunction ``g``."""
        return VectorField(g * self.a, g * self.b1, g * self.b2)

    @property
    def parity(self):
        even, odd = self.split()
        if even and odd:
            return None
        return 1 if odd else 0

    def split(self):
        """(even part, odd part); an odd field has odd ``a`` and even ``b_i``."""
        even = VectorField(self.a.even(), self.b1.odd(), self.b2.odd())
        odd = VectorField(self.a.odd(), self.b1.even(), self.b2.even())
        return even, odd

    def __call__(self, f):
        return vf_apply(self, f)

    def as_diffop(self, lam=0, mu=None):
        """The same first-order operator written in the ``dx, Dbar1, Dbar2`` frame.

        Uses ``dtheta_i = Dbar_i + t_i dx``.
        """
        from .operators import DiffOp

        principal = self.a + self.b1 * T1 + self.b2 * T2
        return DiffOp({(1, 0, 0): principal, (0, 1, 0): self.b1, (0, 0, 1): self.b2}, lam, mu)


DX = VectorField(a=ONE)
DTHETA1 = VectorField(b1=ONE)
DTHETA2 = VectorField(b2=ONE)
DBAR1 = VectorField(a=-T1, b1=ONE)
DBAR2 = VectorField(a=-T2, b2=ONE)


def vf_apply(field, f):
    return field.a * f.dx() + field.b1 * f.dtheta(1) + field.b2 * f.dtheta(2)


def _bracket_homogeneous(X_, Y, p, q):
    sign = -1 if p and q else 1
    comps = [
        vf_apply(X_, y) - vf_apply(Y, x) * sign
        for x, y in zip(X_.components(), Y.components())
    ]
    return VectorField(*comps)


def vf_bracket(X_, Y):
    """Super commutator ``[X, Y] = XY - (-1)^{|X||Y|} YX``, extended bilinearly."""
    out = VectorField()
    for p, xp in enumerate(X_.split()):
        if not xp:
            continue
        for q, yq in enumerate(Y.split()):
            if yq:
                out = out + _bracket_homogeneous(xp, yq, p, q)
    return out


def _sign(parity):
    return -1 if parity else 1


def hamiltonian_field(f):
    """Contact vector field ``X_f`` generated by the Hamiltonian ``f``."""
    out = VectorField()
    for parity, part in enumerate((f.even(), f.odd())):
        if not part:
            continue
        c = -_sign(parity) * HALF
        d1, d2 = part.dbar(1), part.dbar(2)
        out = out + VectorField(a=part) + (DBAR1.scale_by(d1) + DBAR2.scale_by(d2)) * c
    return out


def contact_bracket(f, g):
    out = ZERO
    for parity, part in enumerate((f.even(), f.odd())):
        if not part:
            continue
        c = -_sign(parity) * HALF
        out = out + part * g.dx() - part.dx() * g
        out = out + (part.dbar(1) * g.dbar(1) + part.dbar(2) * g.dbar(2)) * c
    return out


def contact_coefficients(field):
    """Solve ``[X, Dbar_i] = psi_i1 Dbar1 + psi_i2 Dbar2`` for homogeneous ``X``.

    Returns ``[(psi_11, psi_12, residual_1), (psi_21, psi_22, residual_2)]``;
    the residual is the part of the dx-component not explained by the
    ``Dbar`` combination and must vanish for a contact field.
    """
    out = []
    for dbar_field in (DBAR1, DBAR2):
        br = vf_bracket(field, dbar_field)
        psi1, psi2 = br.b1, br.b2
        residual = br.a + psi1 * T1 + psi2 * T2
        out.append((psi1, psi2, residual))
    return out


def contact_hamiltonian(field):
    """Recover ``f`` with ``X_f == field``; raises ValueError for non-contact fields."""
    f = field.a + field.b1 * T1 + field.b2 * T2
    if hamiltonian_field(f) != field:
        raise ValueError(f"{field!r} is not a contact vector field")
    return f


def is_contact(field):
    for part in field.split():
        if any(res for _, _, res in contact_coefficients(part)):
            return False
    return True


# -- the eight generators of spo(2|2) ----------------------------------

GENERATORS = {
    "1": ONE,
    "x": X,
    "t1": T1,
    "t2": T2,
    "t1t2": T1T2,
    "x^2": X * X,
    "xt1": X * T1,
    "xt2": X * T2,
}
GENERATOR_NAMES = tuple(GENERATORS)
AFFINE_NAMES = GENERATOR_NAMES[:5]
QUADRATIC_NAMES = GENERATOR_NAMES[5:]


# -- matrix realization -------------------------------------------------

def _mat(rows):
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


class SpoMatrix:
    """4x4 rational matrix in gl(2|2): rows/cols 0,1 even, 2,3 odd."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = _mat(rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("SpoMatrix needs a 4x4 array")
        self.rows = rows

    def __eq__(self, other):
        return isinstance(other, SpoMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "SpoMatrix(" + "; ".join(" ".join(str(v) for v in r) for r in self.rows) + ")"

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __add__(self, other):
        return SpoMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if isinstance(other, SpoMatrix):
            return SpoMatrix(
                [[sum(self.rows[i][k] * other.rows[k][j] for k in range(4)) for j in range(4)]
                 for i in range(4)]
            )
        s = as_rational(other)
        return SpoMatrix([[v * s for v in r] for r in self.rows])

    __rmul__ = __mul__

    def block(self, bi, bj):
        return [[self.rows[2 * bi + i][2 * bj + j] for j in range(2)] for i in range(2)]

    def split(self):
        even = [[self.rows[i][j] if (i < 2) == (j < 2) else 0 for j in range(4)] for i in range(4)]
        odd = [[0 if (i < 2) == (j < 2) else self.rows[i][j] for j in range(4)] for i in range(4)]
        return SpoMatrix(even), SpoMatrix(odd)

    @property
    def parity(self):
        even, odd = self.split()
        nonzero_even = any(any(r) for r in even.rows)
        nonzero_odd = any(any(r) for r in odd.rows)
        if nonzero_even and nonzero_odd:
            return None
        return 1 if nonzero_odd else 0


def _from_blocks(a1, a2, a3, a4):
    return SpoMatrix([a1[0] + a2[0], a1[1] + a2[1], a3[0] + a4[0], a3[1] + a4[1]])


def _t(b):
    return [[b[0][0], b[1][0]], [b[0][1], b[1][1]]]


def _neg(b):
    return [[-v for v in r] for r in b]


def supertranspose(A):
    a1, a2, a3, a4 = A.block(0, 0), A.block(0, 1), A.block(1, 0), A.block(1, 1)
    return _from_blocks(_t(a1), _neg(_t(a3)), _t(a2), _t(a4))


def supertrace(A):
    return A[0, 0] + A[1, 1] - A[2, 2] - A[3, 3]


G_FORM = SpoMatrix([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
ZERO_MATRIX = SpoMatrix([[0] * 4] * 4)


def spo_member(A):
    """True iff ``A^{st} G + G A = 0``."""
    return supertranspose(A) * G_FORM + G_FORM * A == ZERO_MATRIX


def matrix_bracket(A, B):
    """Super commutator of gl(2|2) matrices, bilinear in parity parts."""
    out = ZERO_MATRIX
    for p, ap in enumerate(A.split()):
        for q, bq in enumerate(B.split()):
            sign = -1 if p and q else 1
            out = out + ap * bq - bq * ap * sign
    return out


def kform(A, B):
    """Invariant form ``K(A, B) = 2 str(AB)`` on spo(2|2)."""
    for M in (A, B):
        if not spo_member(M):
            raise ValueError(f"{M!r} is not in spo(2|2)")
    return 2 * supertrace(A * B)


BASIS_MATRICES = (
    SpoMatrix([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    SpoMatrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    SpoMatrix([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]]),
    SpoMatrix([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
    SpoMatrix([[0, 0, 1, 0], [0, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0]]),
    SpoMatrix([[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 1, 0, 0]]),
    SpoMatrix([[0, 0, 0, 0], [0, 0, 1, 0], [-1, 0, 0, 0], [0, 0, 0, 0]]),
    SpoMatrix([[0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0], [-1, 0, 0, 0]]),
)

# image of BASIS_MATRICES[i] under the projective embedding, as (scalar, generator)
BASIS_IMAGES = (
    (2, "x"), (1, "x^2"), (-1, "1"), (2, "t1t2"),
    (-2, "xt1"), (-2, "xt2"), (2, "t1"), (2, "t2"),
)

# generator -> matrix, the single source of truth for matrix computations
GENERATOR_MATRIX = {
    name: BASIS_MATRICES[i] * Fraction(1, scalar)
    for i, (scalar, name) in enumerate(BASIS_IMAGES)
}

# K-dual basis: dual of generator u is (scalar, generator)
DUAL_BASIS = {
    "1": (Fraction(-1, 2), "x^2"),
    "t1": (-1, "xt1"),
    "t2": (-1, "xt2"),
    "x": (1, "x"),
    "t1t2": (1, "t1t2"),
    "xt1": (1, "t1"),
    "xt2": (1, "t2"),
    "x^2": (Fraction(-1, 2), "1"),
}
DUAL_ORDER = ("1", "t1", "t2", "x", "t1t2", "xt1", "xt2", "x^2")


def dual_matrix(name):
    scalar, other = DUAL_BASIS[name]
    return GENERATOR_MATRIX[other] * scalar


def projective_embed(A):
    """Vector field image of ``A`` under spo(2|2) -> pgl(2|2) -> Vect(S^{1|2}).

    The class ``[A]`` is represented with vanishing top-left entry; the
    coordinates ``y1, y2, y3`` are ``x, t1, t2`` with parities ``0, 1, 1``.
    """
    if not spo_member(A):
        raise ValueError(f"{A!r} is not in spo(2|2)")
    shift = A[0, 0]
    M = [[A[i, j] - (shift if i == j else 0) for j in range(4)] for i in range(4)]
    v = [M[i][0] for i in range(1, 4)]
    xi = [M[0][j] for j in range(1, 4)]
    B = [[M[i][j] for j in range(1, 4)] for i in range(1, 4)]
    coords = (X, T1, T2)
    par = (0, 1, 1)
    comps = [ZERO, ZERO, ZERO]
    euler = ZERO
    for j in range(3):
        if xi[j]:
            euler = euler + coords[j] * (xi[j] * (-1) ** par[j])
    for i in range(3):
        c = SuperFn.const(-v[i])
        for j in range(3):
            if B[i][j]:
                sign = (-1) ** (par[j] * (par[i] + par[j]))
                c = c - coords[j] * (B[i][j] * sign)
        c = c + euler * coords[i]
        comps[i] = c
    return VectorField(*comps)
