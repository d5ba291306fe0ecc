"""Pairwise Vietoris hyperspaces, the hyperspace endofunctor, and coalgebras.

The hyperspace of a bitopological space has one point per pairwise closed
subset; each original beta set contributes a "stays inside" and a "meets"
generator to the corresponding hyperspace topology.  A relation on a space is
the same data as a coalgebra structure map into the hyperspace, and the two
translations are verified to be exact inverses, not mere isomorphisms.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bitopology import (
    BitopSpace,
    PBSObject,
    PRBSObject,
    Topology,
    bits,
    check_prbs_object,
    is_pairwise_boolean,
    is_pairwise_continuous,
    is_pairwise_zero_dimensional,
    is_subspace_preserving,
    mask_of,
    set_str,
)
from .errors import CapExceeded
from .report import Report


def pairwise_closed_sets(space: BitopSpace, cap: int = 1 << 22) -> list[int]:
    """All pairwise closed subsets (closed in the join topology), ascending."""
    return space.pairwise_closed_family(cap)


def box_members(members, u_mask: int) -> int:
    """Hyperspace set of members staying inside U, as a member-index mask."""
    return mask_of(i for i, c in enumerate(members) if c & ~u_mask == 0)


def diamond_members(members, u_mask: int) -> int:
    """Hyperspace set of members meeting U."""
    return mask_of(i for i, c in enumerate(members) if c & u_mask)


@dataclass(frozen=True)
class VietorisSpace:
    """Hyperspace of a base bitopological space.

    members[i] is the i-th pairwise closed subset of the base (bitmask order);
    `space` carries the two generated hyperspace topologies.
    """

    base: BitopSpace
    members: tuple[int, ...]
    space: BitopSpace
    warnings: tuple[str, ...] = ()

    def member_position(self, point_mask: int) -> int:
        return self.members.index(int(point_mask))


def vietoris_space(space: BitopSpace, beta_cap: int = 1 << 16) -> VietorisSpace:
    """Build the hyperspace; warns (not fails) on non-pairwise-Boolean input.

    The generating families are the base's beta sets exactly; when the base is
    not pairwise zero-dimensional these may fail to be bases, which is
    recorded as a warning on the result.
    """
    warnings = []
    if not is_pairwise_boolean(space):
        warnings.append("base space is not pairwise Boolean")
    if not is_pairwise_zero_dimensional(space):
        warnings.append("beta families may fail to be bases for the base topologies")
    members = tuple(pairwise_closed_sets(space))
    sub1 = []
    for u in space.beta1_family(cap=beta_cap):
        sub1.append(box_members(members, u))
        sub1.append(diamond_members(members, u))
    sub2 = []
    for u in space.beta2_family(cap=beta_cap):
        sub2.append(box_members(members, u))
        sub2.append(diamond_members(members, u))
    hyper = BitopSpace(
        Topology.from_subbasis(len(members), sub1),
        Topology.from_subbasis(len(members), sub2),
    )
    return VietorisSpace(space, members, hyper, tuple(warnings))


def vietoris_object(obj: PBSObject, beta_cap: int = 1 << 16) -> PBSObject:
    """Apply the hyperspace construction to an object: each subalgebra now
    owns the pairwise closed subsets of its assigned subspace."""
    vs = vietoris_space(obj.space, beta_cap=beta_cap)
    alpha = tuple(box_members(vs.members, a) for a in obj.alpha)
    return PBSObject(vs.space, obj.family, alpha)


def vietoris_arrow(f, source: PBSObject, target: PBSObject):
    """Direct image on members; verified to be an arrow between the
    hyperspace objects.  Returns (member map, report)."""
    f = [int(v) for v in f]
    vs_src = vietoris_space(source.space)
    vs_tgt = vietoris_space(target.space)
    rep = Report(title="hyperspace arrow")
    table = []
    witness = None
    for c in vs_src.members:
        image = mask_of(f[p] for p in bits(c))
        try:
            table.append(vs_tgt.member_position(image))
        except ValueError:
            witness = f"image of {set_str(c)} is not pairwise closed"
            table.append(0)
            break
    rep.add("images_are_members", witness is None, witness or "")
    if witness is None:
        rep.add(
            "pairwise_continuous",
            is_pairwise_continuous(table, vs_src.space, vs_tgt.space),
        )
        vo_src = vietoris_object(source)
        vo_tgt = vietoris_object(target)
        rep.add("subspace_preserving", is_subspace_preserving(table, vo_src, vo_tgt))
    return table, rep


# -- coalgebras -------------------------------------------------------------------


@dataclass(frozen=True)
class Coalgebra:
    """A carrier object with a structure map into its own hyperspace object.

    structure[p] indexes the member of the hyperspace assigned to point p.
    """

    carrier: PBSObject
    structure: tuple[int, ...]

    def successors(self, vspace: VietorisSpace, p: int) -> int:
        return vspace.members[self.structure[p]]


def check_coalgebra(coalg: Coalgebra, beta_cap: int = 1 << 16) -> Report:
    """Structure map must be an arrow into the hyperspace object."""
    rep = Report(title="coalgebra structure map")
    vs = vietoris_space(coalg.carrier.space, beta_cap=beta_cap)
    vo = vietoris_object(coalg.carrier, beta_cap=beta_cap)
    n = coalg.carrier.space.n
    ok = len(coalg.structure) == n and all(
        0 <= i < len(vs.members) for i in coalg.structure
    )
    rep.add("structure_total", ok)
    if ok:
        rep.add(
            "pairwise_continuous",
            is_pairwise_continuous(coalg.structure, coalg.carrier.space, vs.space),
        )
        rep.add(
            "subspace_preserving",
            is_subspace_preserving(coalg.structure, coalg.carrier, vo),
        )
    return rep


def relation_to_coalgebra(obj: PRBSObject, beta_cap: int = 1 << 16) -> Coalgebra:
    """Read the relation as a structure map: each point goes to its successor set."""
    vs = vietoris_space(obj.space, beta_cap=beta_cap)
    structure = []
    for p in range(obj.space.n):
        try:
            structure.append(vs.member_position(obj.rel[p]))
        except ValueError:
            raise CapExceeded(
                f"successor set of point {p} is not pairwise closed"
            ) from None
    coalg = Coalgebra(obj.base, tuple(structure))
    rep = check_coalgebra(coalg, beta_cap=beta_cap)
    if not rep.passed:
        raise RuntimeError(f"relation does not induce a coalgebra: {rep.failures()}")
    return coalg


def coalgebra_to_relation(coalg: Coalgebra, beta_cap: int = 1 << 16) -> PRBSObject:
    """Read the structure map as a relation: successors are the assigned member."""
    vs = vietoris_space(coalg.carrier.space, beta_cap=beta_cap)
    rel = tuple(vs.members[i] for i in coalg.structure)
    obj = PRBSObject(coalg.carrier, rel)
    rep = check_prbs_object(obj, beta_cap=beta_cap)
    if not rep.passed:
        raise RuntimeError(f"structure map does not induce a relational object: {rep.failures()}")
    return obj


def check_coalgebra_morphism(f, source: Coalgebra, target: Coalgebra):
    """The structure square: mapping then unfolding equals unfolding then imaging.

    Returns (ok, witness).
    """
    f = [int(v) for v in f]
    vs_src = vietoris_space(source.carrier.space)
    vs_tgt = vietoris_space(target.carrier.space)
    if not is_pairwise_continuous(f, source.carrier.space, target.carrier.space):
        return False, "not pairwise continuous"
    if not is_subspace_preserving(f, source.carrier, target.carrier):
        return False, "not subspace preserving"
    for p in range(source.carrier.space.n):
        unfolded_then_imaged = mask_of(f[q] for q in bits(vs_src.members[source.structure[p]]))
        mapped_then_unfolded = vs_tgt.members[target.structure[f[p]]]
        if unfolded_then_imaged != mapped_then_unfolded:
            return False, f"square breaks at point {p}"
    return True, None


def verify_category_iso(objects, coalgebras=(), arrows=()) -> Report:
    """Round trips are exact identities on both sides, and relational arrows
    transfer to commuting coalgebra squares.

    `objects`: iterable of relational objects; `coalgebras`: iterable of
    Coalgebra; `arrows`: iterable of (map, source_obj, target_obj).
    """
    rep = Report(title="relational objects <-> coalgebras")
    for k, obj in enumerate(objects):
        coalg = relation_to_coalgebra(obj)
        back = coalgebra_to_relation(coalg)
        rep.add(
            f"object_round_trip[{k}]",
            back.base == obj.base and back.rel == obj.rel,
        )
    for k, coalg in enumerate(coalgebras):
        obj = coalgebra_to_relation(coalg)
        back = relation_to_coalgebra(obj)
        rep.add(
            f"coalgebra_round_trip[{k}]",
            back.carrier == coalg.carrier and back.structure == coalg.structure,
        )
    for k, (f, src, tgt) in enumerate(arrows):
        c_src = relation_to_coalgebra(src)
        c_tgt = relation_to_coalgebra(tgt)
        ok, why = check_coalgebra_morphism(f, c_src, c_tgt)
        rep.add(f"arrow_square[{k}]", ok, why or "")
    return rep
