"""
Hypothesis strategies shared by the property tests
"""

from hypothesis import strategies as st

from abelian_groups import AbelianGroup, characters, make_group
from config import PROPERTY_TEST_CONFIG
from groth_ring import AffLine, E0Twist, GenSymbol, RingElement, SymBase, _monomial

LOW, HIGH = PROPERTY_TEST_CONFIG["coefficient_range"]

GROUP = make_group([2, 2])


def symbols(group: AbelianGroup = GROUP) -> st.SearchStrategy[GenSymbol]:
    return st.one_of(
        st.sampled_from([AffLine(chi) for chi in characters(group)]),
        st.builds(SymBase, st.integers(1, 6)),
        st.builds(E0Twist, st.integers(1, group.order), st.integers(1, group.order)),
    )


def monomials(group: AbelianGroup = GROUP):
    return st.dictionaries(
        symbols(group),
        st.integers(1, 3),
        max_size=PROPERTY_TEST_CONFIG["max_symbols"],
    ).map(_monomial)


def ring_elements(group: AbelianGroup = GROUP, max_monomials: int = PROPERTY_TEST_CONFIG["max_monomials"]) -> st.SearchStrategy[RingElement]:
    return st.dictionaries(
        monomials(group),
        st.integers(LOW, HIGH),
        max_size=max_monomials,
    ).map(RingElement)


def tables(elements, group: AbelianGroup = GROUP):
    """Generator values covering every symbol of the given elements"""
    needed = sorted(set().union(*(e.symbols() for e in elements)), key=lambda s: s.sort_key())
    return st.lists(st.integers(0, 7), min_size=len(needed), max_size=len(needed)).map(
        lambda values: dict(zip(needed, values))
    )
