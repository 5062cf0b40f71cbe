from fractions import Fraction

from hypothesis import strategies as st

from spoquant.grassmann import Poly, SuperFn

rationals = st.fractions(min_value=-6, max_value=6, max_denominator=6)
small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def polys(draw, max_degree=4):
    return Poly(draw(st.lists(small_rationals, max_size=max_degree + 1)))


@st.composite
def superfns(draw, parity=None, max_degree=4):
    f = SuperFn(*(draw(polys(max_degree)) for _ in range(4)))
    if parity == 0:
        return f.even()
    if parity == 1:
        return f.odd()
    return f


half_integers = st.integers(min_value=0, max_value=6).map(lambda n: Fraction(n, 2))
parities = st.sampled_from([0, 1])
