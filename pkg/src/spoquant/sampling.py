"""Random exact inputs for property checks."""
from fractions import Fraction

from .grassmann import Poly, SuperFn
from .operators import DiffOp
from .symbols import Symbol


def random_rational(rng, bound=5, max_den=4):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def random_poly(rng, max_degree=6, density=0.6):
    deg = rng.randint(0, max_degree)
    return Poly([random_rational(rng) if rng.random() < density else 0 for _ in range(deg + 1)])


def random_superfn(rng, max_degree=6, parity=None):
    """Random superfunction; ``parity`` 0/1 restricts to even/odd parts."""
    f0, f1, f2, f12 = (random_poly(rng, max_degree) for _ in range(4))
    f = SuperFn(f0, f1, f2, f12)
    if parity == 0:
        return f.even()
    if parity == 1:
        return f.odd()
    return f


def random_symbol(rng, k, delta, parity=None, max_degree=4):
    if parity is None:
        parity = rng.randint(0, 1)
    F1 = random_superfn(rng, max_degree, parity)
    k = Fraction(k)
    F2 = random_superfn(rng, max_degree, parity) if k else SuperFn()
    return Symbol(k, delta, F1, F2)


def random_diffop(rng, max_order2=4, max_degree=3, lam=0, mu=0, n_terms=3):
    terms = {}
    for _ in range(n_terms):
        o2 = rng.randint(0, max_order2)
        m = rng.randint(0, min(1, o2))
        n = (o2 - m) % 2
        l = (o2 - m - n) // 2
        terms[(l, m, n)] = random_superfn(rng, max_degree)
    return DiffOp(terms, lam, mu)


def random_noncritical(rng, critical, bound=7, max_den=9):
    while True:
        d = random_rational(rng, bound, max_den)
        if d not in critical:
            return d
