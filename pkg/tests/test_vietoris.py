"""Hyperspace construction, its preservation theorems, and coalgebra round trips."""

import random

import pytest

from bitopdual.bitopology import (
    BitopSpace,
    PBSObject,
    PRBSObject,
    Topology,
    bits,
    is_pairwise_boolean,
    is_pairwise_compact,
    is_pairwise_hausdorff,
    is_pairwise_zero_dimensional,
    mask_of,
)
from bitopdual.duality import dual_space
from bitopdual.lattice import chain, diamond, subalgebra_family
from bitopdual.mvalgebra import box_from_frame
from bitopdual.vietoris import (
    Coalgebra,
    box_members,
    check_coalgebra_morphism,
    coalgebra_to_relation,
    diamond_members,
    pairwise_closed_sets,
    relation_to_coalgebra,
    verify_category_iso,
    vietoris_arrow,
    vietoris_object,
    vietoris_space,
)


def trivial_object(lat, n_points) -> PBSObject:
    fam = subalgebra_family(lat)
    full = (1 << n_points) - 1
    alpha = tuple(full if i == fam.full_index else 0 for i in range(len(fam)))
    return PBSObject(BitopSpace.discrete(n_points), fam, alpha)


# -- pairwise closed sets -------------------------------------------------------


def test_closed_sets_of_discrete_two_points():
    assert pairwise_closed_sets(BitopSpace.discrete(2)) == [0, 1, 2, 3]


def test_closed_sets_of_one_point_space():
    assert pairwise_closed_sets(BitopSpace.discrete(1)) == [0, 1]


def test_closed_sets_mixed_topologies():
    # tau1 generated by {{0,1}}, tau2 discrete: join is discrete, so all sets
    sp = BitopSpace(Topology.from_subbasis(3, [0b011]), Topology.discrete(3))
    got = pairwise_closed_sets(sp)
    full = (1 << 3) - 1
    join_opens = sp.join_topology.opens()
    assert got == sorted(full & ~u for u in join_opens)


# -- hyperspace construction -----------------------------------------------------


def test_vietoris_of_one_point_space():
    vs = vietoris_space(BitopSpace.discrete(1))
    assert vs.members == (0, 1)
    assert vs.space.tau1 == Topology.discrete(2)
    assert vs.space.tau2 == Topology.discrete(2)


def test_vietoris_of_two_point_discrete_is_pairwise_boolean():
    vs = vietoris_space(BitopSpace.discrete(2))
    assert len(vs.members) == 4
    assert is_pairwise_boolean(vs.space)
    assert vs.warnings == ()


def test_vietoris_of_empty_space():
    vs = vietoris_space(BitopSpace.discrete(0))
    assert vs.members == (0,)
    assert vs.space.n == 1


def test_vietoris_warns_on_non_boolean_base():
    sp = BitopSpace(Topology.indiscrete(2), Topology.discrete(2))
    vs = vietoris_space(sp)
    assert any("not pairwise Boolean" in w for w in vs.warnings)


def test_box_diamond_de_morgan_inside_members():
    for n in range(0, 6):
        sp = BitopSpace.discrete(n)
        members = tuple(pairwise_closed_sets(sp))
        all_members = (1 << len(members)) - 1
        for u in range(1 << n):
            un = sp.full & ~u
            assert all_members & ~box_members(members, u) == diamond_members(members, un)
            assert all_members & ~diamond_members(members, u) == box_members(members, un)


def test_hyperspace_preserves_the_three_properties():
    rng = random.Random(41)
    for seed in range(25):
        n = rng.randrange(0, 6)
        vs = vietoris_space(BitopSpace.discrete(n))
        ok_h, _ = is_pairwise_hausdorff(vs.space)
        assert ok_h
        assert is_pairwise_zero_dimensional(vs.space)
        assert is_pairwise_compact(vs.space)


# -- hyperspace objects -------------------------------------------------------------


def test_vietoris_object_on_canonical_lattice_object():
    from bitopdual.bitopology import canonical_object, check_pbs_object

    for lat in (chain(2), chain(3), diamond()):
        obj = canonical_object(lat)
        vo = vietoris_object(obj)
        members = tuple(pairwise_closed_sets(obj.space))
        for i, member_mask in enumerate(obj.family.member_masks()):
            expect = mask_of(
                k for k, c in enumerate(members) if c & ~member_mask == 0
            )
            assert vo.alpha[i] == expect
        rep = check_pbs_object(vo)
        assert rep.passed, rep.failures()


def test_vietoris_object_empty_alpha_keeps_only_empty_member():
    lat = chain(2)
    fam = subalgebra_family(lat)
    obj = trivial_object(lat, 2)
    vo = vietoris_object(obj)
    members = tuple(pairwise_closed_sets(obj.space))
    empty_index = members.index(0)
    for i in range(len(fam)):
        if i != fam.full_index:
            assert vo.alpha[i] == 1 << empty_index


def test_vietoris_object_of_dual_space_passes():
    from bitopdual.bitopology import check_pbs_object

    alg = box_from_frame(chain(3), 2, [(0, 1)])
    base = dual_space(alg).base
    rep = check_pbs_object(vietoris_object(base))
    assert rep.passed, rep.failures()


# -- hyperspace arrows ---------------------------------------------------------------


def test_vietoris_arrow_identity():
    obj = trivial_object(chain(2), 3)
    table, rep = vietoris_arrow(range(3), obj, obj)
    assert rep.passed
    assert table == list(range(len(pairwise_closed_sets(obj.space))))


def test_vietoris_arrow_constant_map():
    obj2 = trivial_object(chain(2), 2)
    obj1 = trivial_object(chain(2), 1)
    table, rep = vietoris_arrow([0, 0], obj2, obj1)
    assert rep.passed
    members2 = pairwise_closed_sets(obj2.space)
    members1 = pairwise_closed_sets(obj1.space)
    for i, c in enumerate(members2):
        expect = 0 if c == 0 else members1.index(1)
        assert table[i] == expect


def test_vietoris_arrow_surjection_preimage_identities():
    src = trivial_object(chain(2), 3)
    tgt = trivial_object(chain(2), 2)
    f = [0, 1, 1]
    table, rep = vietoris_arrow(f, src, tgt)
    assert rep.passed
    members_src = pairwise_closed_sets(src.space)
    members_tgt = pairwise_closed_sets(tgt.space)
    # preimage of "stays inside U" is "stays inside f^-1(U)", same for "meets"
    for u in range(1 << 2):
        pre_u = mask_of(p for p in range(3) if u >> f[p] & 1)
        box_tgt = box_members(members_tgt, u)
        got = mask_of(i for i in range(len(members_src)) if box_tgt >> table[i] & 1)
        assert got == box_members(members_src, pre_u)
        dia_tgt = diamond_members(members_tgt, u)
        got = mask_of(i for i in range(len(members_src)) if dia_tgt >> table[i] & 1)
        assert got == diamond_members(members_src, pre_u)


# -- coalgebras ------------------------------------------------------------------------


def test_relation_to_coalgebra_identity_relation():
    obj = trivial_object(chain(2), 3)
    rel = tuple(1 << p for p in range(3))
    coalg = relation_to_coalgebra(PRBSObject(obj, rel))
    members = pairwise_closed_sets(obj.space)
    assert [members[i] for i in coalg.structure] == [1, 2, 4]


def test_relation_to_coalgebra_empty_relation():
    obj = trivial_object(chain(2), 2)
    coalg = relation_to_coalgebra(PRBSObject(obj, (0, 0)))
    members = pairwise_closed_sets(obj.space)
    assert all(members[i] == 0 for i in coalg.structure)


def test_dual_space_structure_map_matches_relation_fibres():
    alg = box_from_frame(chain(2), 3, [(0, 1), (1, 2), (2, 0)])
    ds = dual_space(alg)
    coalg = relation_to_coalgebra(ds.object)
    members = pairwise_closed_sets(ds.base.space)
    for p in range(ds.base.space.n):
        assert members[coalg.structure[p]] == ds.object.rel[p]


def test_coalgebra_to_relation_round_trip_exact():
    for lat in (chain(2), chain(3)):
        for frame in ([], [(0, 0)], [(0, 1)], [(0, 1), (1, 0)]):
            obj = dual_space(box_from_frame(lat, 2, frame)).object
            coalg = relation_to_coalgebra(obj)
            back = coalgebra_to_relation(coalg)
            assert back.rel == obj.rel and back.base == obj.base
            again = relation_to_coalgebra(back)
            assert again.structure == coalg.structure and again.carrier == coalg.carrier


def test_coalgebra_morphism_identity_and_prbs_pushforward():
    obj = trivial_object(chain(2), 3)
    rel = (0b010, 0b001, 0b001)
    src = PRBSObject(obj, rel)
    c1 = relation_to_coalgebra(src)
    ok, why = check_coalgebra_morphism(range(3), c1, c1)
    assert ok, why
    # the bisimulation quotient from the relational side commutes as a coalgebra map
    obj2 = trivial_object(chain(2), 2)
    tgt = PRBSObject(obj2, (0b10, 0b01))
    from bitopdual.bitopology import is_prbs_morphism

    quotient = [0, 1, 1]
    ok, why = is_prbs_morphism(quotient, src, tgt)
    assert ok, why
    c2 = relation_to_coalgebra(tgt)
    ok, why = check_coalgebra_morphism(quotient, c1, c2)
    assert ok, why


def test_coalgebra_morphism_violation_detected():
    obj3 = trivial_object(chain(2), 3)
    src = PRBSObject(obj3, (0, 0b001, 0b001))  # 0 is a dead end
    obj2 = trivial_object(chain(2), 2)
    tgt = PRBSObject(obj2, (0b10, 0b01))      # image of 0 has a successor
    c1 = relation_to_coalgebra(src)
    c2 = relation_to_coalgebra(tgt)
    ok, why = check_coalgebra_morphism([0, 1, 1], c1, c2)
    assert not ok and "square" in why


def test_verify_category_iso_battery():
    objects = []
    for lat in (chain(2), chain(3)):
        for frame in ([], [(0, 0), (1, 1)], [(0, 1)]):
            objects.append(dual_space(box_from_frame(lat, 2, frame)).object)
    coalgebras = [relation_to_coalgebra(o) for o in objects]
    obj = trivial_object(chain(2), 3)
    src = PRBSObject(obj, (0b010, 0b001, 0b001))
    tgt = PRBSObject(trivial_object(chain(2), 2), (0b10, 0b01))
    rep = verify_category_iso(objects, coalgebras, [([0, 1, 1], src, tgt)])
    assert rep.passed, rep.failures()


def test_one_point_object_round_trip():
    obj = trivial_object(chain(2), 1)
    src = PRBSObject(obj, (1,))
    rep = verify_category_iso([src])
    assert rep.passed
