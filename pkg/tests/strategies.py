from fractions import Fraction

from hypothesis import strategies as st

from utils.exactla import LinearMap


def fractions(max_num=6, max_den=4):
    return st.builds(Fraction, st.integers(-max_num, max_num), st.integers(1, max_den))


@st.composite
def linear_maps(draw, max_rows=5, max_cols=5, min_rows=0, min_cols=0):
    rows = draw(st.integers(min_rows, max_rows))
    cols = draw(st.integers(min_cols, max_cols))
    sparse = st.one_of(st.just(Fraction(0)), fractions())
    entries = draw(st.lists(sparse, min_size=rows * cols, max_size=rows * cols))
    return LinearMap.from_rows([entries[i * cols:(i + 1) * cols] for i in range(rows)], cols=cols)


def vectors(length):
    return st.lists(fractions(), min_size=length, max_size=length)
