"""Hypothesis strategies for random configs of the small types."""
from hypothesis import strategies as st

from localp1.monomials import ZERO, Monomial
from localp1.sheafconfig import ModuleConfig, SheafType


@st.composite
def entries(draw, deg):
    if deg < 0 or draw(st.integers(0, 4)) == 0:
        return ZERO
    return Monomial(deg, draw(st.integers(0, deg)))


@st.composite
def configs(draw, rows=(1, 2, 1), k_max=4, span=4):
    k = draw(st.integers(-1, k_max))
    twists = tuple(tuple(sorted(draw(st.lists(st.integers(-span, span), min_size=r, max_size=r)),
                                reverse=True)) for r in rows)
    maps = []
    for j in range(len(rows) - 1):
        maps.append(tuple(
            tuple(draw(entries(twists[j + 1][i] - twists[j][l] + k)) for l in range(rows[j]))
            for i in range(rows[j + 1])))
    return ModuleConfig(k, SheafType(rows), twists, tuple(maps))
