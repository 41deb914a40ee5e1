"""
Hypothesis strategies and brute-force oracles shared by the test suites
"""
from itertools import permutations

from hypothesis import strategies as st

from causets.poset.finite import build_finite_poset


@st.composite
def finite_posets(draw, max_size: int = 6):
    """
    Random finite posets; covers only go from smaller to larger ids so the
    relation is acyclic
    """
    n = draw(st.integers(min_value=1, max_value=max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    covers = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) \
        if pairs else []
    return build_finite_poset(range(n), covers)


@st.composite
def posets_with_maximal(draw, max_size: int = 6):
    p = draw(finite_posets(max_size))
    return p, draw(st.sampled_from(p.maximal()))


def brute_force_extensions(p) -> list:
    """
    Every linear extension by filtering all permutations
    """
    found = []
    for order in permutations(p.elements):
        position = {x: i for i, x in enumerate(order)}
        if all(position[a] < position[b] for a, b in p.reach):
            found.append(order)
    return found
