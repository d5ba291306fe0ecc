"""Lattice construction, term functions, subalgebras, law checks."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bitopdual.errors import (
    CyclicCovers,
    ElementOutOfRange,
    InvalidArity,
    NotALattice,
)
from bitopdual.lattice import (
    boolean_cube,
    build_lattice,
    chain,
    check_lattice_laws,
    diamond,
    enumerate_subalgebras,
    lukasiewicz_tables,
    m3,
    product_of_chains,
    t_op,
    term_switch,
    u_op,
)

CATALOGUE = [
    chain(2), chain(3), chain(4), chain(5), chain(6), chain(7), chain(8),
    diamond(), boolean_cube(3), product_of_chains([2, 3]), product_of_chains([2, 4]),
]


def implication_oracle(lat, a, b):
    """Independent Heyting implication: the maximum x with a /\\ x <= b."""
    candidates = [x for x in range(lat.n) if lat.leq[lat.meet[a, x], b]]
    best = [x for x in candidates if all(lat.leq[y, x] for y in candidates)]
    assert len(best) == 1, "oracle requires a unique maximum"
    return best[0]


def subalgebra_oracle(lat):
    """Independent subset scan: every subset containing {0,1} closed under all ops."""
    base = {lat.bottom, lat.top}
    rest = [x for x in range(lat.n) if x not in base]
    out = []
    for r in range(len(rest) + 1):
        for extra in itertools.combinations(rest, r):
            s = set(base) | set(extra)
            ok = all(
                lat.meet[a, b] in s and lat.join[a, b] in s and lat.implies[a, b] in s
                for a in s
                for b in s
            ) and all(t_op(lat, lv, a) in s for lv in range(lat.n) for a in s)
            if ok:
                out.append(tuple(sorted(s)))
    return sorted(out, key=lambda m: (len(m), m))


# -- build_lattice ---------------------------------------------------------


def test_two_chain():
    lat = build_lattice([(0, 1)])
    assert lat.n == 2 and lat.bottom == 0 and lat.top == 1
    assert lat.implies[1, 0] == 0


def test_diamond_implication_against_oracle():
    lat = diamond()
    a, b = 1, 2
    assert implication_oracle(lat, a, b) == b
    assert lat.implies[a, b] == b
    for x, y in itertools.product(range(4), repeat=2):
        assert lat.implies[x, y] == implication_oracle(lat, x, y)


def test_four_chain_implication():
    lat = build_lattice([(0, 1), (1, 2), (2, 3)])
    b, a = 2, 1
    assert implication_oracle(lat, b, a) == a
    assert lat.implies[b, a] == a


def test_cyclic_covers_rejected():
    with pytest.raises(CyclicCovers):
        build_lattice([(0, 1), (1, 2), (2, 0)])
    with pytest.raises(CyclicCovers):
        build_lattice([(0, 0)])


def test_not_a_lattice_rejected():
    # two maximal elements: the pair (1,2) has no upper bound at all
    with pytest.raises(NotALattice):
        build_lattice([(0, 1), (0, 2)])
    # 1 and 2 have two minimal upper bounds 3, 4: no least one
    with pytest.raises(NotALattice):
        build_lattice([(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)])


def test_element_out_of_range():
    lat = chain(3)
    with pytest.raises(ElementOutOfRange):
        t_op(lat, 0, 7)
    with pytest.raises(ElementOutOfRange):
        build_lattice([(0, 5)], num_elements=2)


# -- term functions ---------------------------------------------------------


def test_term_switch():
    lat = diamond()
    a, b, c, d = 1, 2, 3, 0
    assert term_switch(lat, a, a, c, d) == c
    assert term_switch(lat, a, b, c, d) == d
    assert term_switch(lat, 0, 0, 0, 3) == 0


def test_t_op():
    lat = diamond()
    assert t_op(lat, lat.top, lat.top) == lat.top
    assert t_op(lat, lat.bottom, lat.top) == lat.bottom
    assert t_op(lat, 1, 1) == lat.top  # T_a(a) on the diamond


def test_u_op():
    lat = diamond()
    for x in range(lat.n):
        assert u_op(lat, lat.bottom, x) == lat.top
    assert u_op(lat, lat.top, 1) == lat.bottom  # atom a is not above top
    assert u_op(lat, 1, lat.top) == lat.top


@pytest.mark.parametrize("lat", CATALOGUE, ids=lambda l: f"L{l.n}.{l.labels[:2]}")
def test_t_op_partitions_and_u_op_join(lat):
    # exactly one level matches each element; U is the join of the upward T's
    for x in range(lat.n):
        hits = [lv for lv in range(lat.n) if t_op(lat, lv, x) == lat.top]
        assert hits == [x]
        for lv in range(lat.n):
            ts = [t_op(lat, up, x) for up in range(lat.n) if lat.leq[lv, up]]
            acc = lat.bottom
            for t in ts:
                acc = lat.join[acc, t]
            assert u_op(lat, lv, x) == acc


# -- subalgebras ---------------------------------------------------------------


def test_subalgebras_two_chain():
    fam = enumerate_subalgebras(chain(2))
    assert fam.members == ((0, 1),)


def test_subalgebras_diamond():
    # only {0,1} and the full carrier are implication-closed (a -> 0 = b)
    fam = enumerate_subalgebras(diamond())
    assert fam.members == ((0, 3), (0, 1, 2, 3))


def test_subalgebras_four_chain():
    # chains: implication never leaves a subset containing the endpoints
    fam = enumerate_subalgebras(chain(4))
    assert fam.members == ((0, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2, 3))


@pytest.mark.parametrize("lat", CATALOGUE, ids=lambda l: f"L{l.n}.{l.labels[:2]}")
def test_subalgebras_against_oracle(lat):
    fam = enumerate_subalgebras(lat)
    assert list(fam.members) == subalgebra_oracle(lat)
    # full carrier is always a member, and the family is intersection-closed
    assert fam.members[fam.full_index] == tuple(range(lat.n))
    sets = [set(m) for m in fam.members]
    for s1 in sets:
        for s2 in sets:
            assert (s1 & s2) in sets


def test_subalgebras_large_lattice_uses_closure_route():
    lat = boolean_cube(4)  # 16 elements: exercises the > 12 code path
    fam = enumerate_subalgebras(lat)
    # Boolean subalgebras of 2^4 correspond to partitions of 4 atoms: Bell(4) = 15
    assert len(fam) == 15
    for m in fam.members:
        s = set(m)
        assert all(lat.implies[a, b] in s for a in s for b in s)


# -- law checking ------------------------------------------------------------


def test_laws_two_chain_all_pass():
    assert check_lattice_laws(chain(2)).passed


def test_laws_m3_distributivity_fails_with_witness():
    rep = check_lattice_laws(m3())
    line = rep["distributive"]
    assert not line.passed
    names = line.witness.strip("()").split(",")
    lat = m3()
    ids = [lat.labels.index(t) for t in names]
    x, y, z = ids
    assert lat.meet[x, lat.join[y, z]] != lat.join[lat.meet[x, y], lat.meet[x, z]]
    assert not rep["residuation"].passed


def test_laws_four_chain_residuation_passes():
    lat = chain(4)
    rep = check_lattice_laws(lat)
    assert rep["residuation"].passed
    for a, b in itertools.product(range(4), repeat=2):
        assert lat.implies[a, b] == implication_oracle(lat, a, b)


@pytest.mark.parametrize("lat", CATALOGUE, ids=lambda l: f"L{l.n}.{l.labels[:2]}")
def test_catalogue_laws_exhaustive(lat):
    assert lat.n <= 8
    rep = check_lattice_laws(lat)
    assert rep.passed, rep.failures()


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=4), st.integers(min_value=1, max_value=4))
def test_products_of_chains_are_heyting(n1, n2):
    lat = product_of_chains([n1, n2])
    rep = check_lattice_laws(lat)
    assert rep.passed


# -- Lukasiewicz tables -------------------------------------------------------


def test_lukasiewicz_two_valued_strong_conj_is_meet():
    tabs = lukasiewicz_tables(2)
    assert np.array_equal(tabs.strong_conj, tabs.meet)


def test_lukasiewicz_implication_reflexive_top():
    for n in (2, 3, 5):
        tabs = lukasiewicz_tables(n)
        for p in range(n):
            assert tabs.implies[p, p] == n - 1


def test_lukasiewicz_three_valued_half_conj():
    tabs = lukasiewicz_tables(3)
    assert tabs.strong_conj[1, 1] == 0  # 1/2 * 1/2 = max(0, 1/2 + 1/2 - 1) = 0
    assert tabs.values == ((0, 2), (1, 2), (2, 2))


def test_lukasiewicz_rejects_bad_arity():
    with pytest.raises(InvalidArity):
        lukasiewicz_tables(1)


@given(st.integers(min_value=2, max_value=9))
def test_lukasiewicz_de_morgan_between_conjunctions(n):
    tabs = lukasiewicz_tables(n)
    c = tabs.complement
    for p, q in itertools.product(range(n), repeat=2):
        assert tabs.strong_disj[p, q] == c[tabs.strong_conj[c[p], c[q]]]
