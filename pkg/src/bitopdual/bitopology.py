"""Finite bitopological spaces and the dual-category object/arrow predicates.

Point sets are bitmasks over ordinals 0..n-1.  A finite topology is stored as
the table of minimal open neighbourhoods (one bitmask per point): a set U is
open iff it contains the minimal neighbourhood of each of its points.  This
is exact and keeps hyperspaces tractable — the open-set *family* of a
Vietoris space can have 2^32 members, but its neighbourhood table is tiny.
The family view stays available through capped enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphaDomainMismatch, CapExceeded
from .lattice import FiniteLattice, SubalgebraFamily, enumerate_subalgebras
from .report import Report


def mask_of(points) -> int:
    return sum(1 << int(p) for p in set(points))


def bits(mask: int):
    p = 0
    while mask:
        if mask & 1:
            yield p
        mask >>= 1
        p += 1


def set_str(mask: int) -> str:
    return "{" + ",".join(str(p) for p in bits(mask)) + "}"


class Topology:
    """A finite topology, represented by minimal open neighbourhoods."""

    __slots__ = ("n", "full", "neigh")

    def __init__(self, n: int, neigh):
        self.n = n
        self.full = (1 << n) - 1
        self.neigh = tuple(int(m) for m in neigh)
        if len(self.neigh) != n:
            raise ValueError("need one minimal neighbourhood per point")

    @classmethod
    def from_subbasis(cls, n: int, subbasis) -> "Topology":
        full = (1 << n) - 1
        sets = [int(s) if isinstance(s, int) else mask_of(s) for s in subbasis]
        if any(s & ~full for s in sets):
            raise ValueError("subbasis set outside the point universe")
        neigh = []
        for x in range(n):
            m = full
            for s in sets:
                if s >> x & 1:
                    m &= s
            neigh.append(m)
        return cls(n, neigh)

    @classmethod
    def discrete(cls, n: int) -> "Topology":
        return cls(n, [1 << x for x in range(n)])

    @classmethod
    def indiscrete(cls, n: int) -> "Topology":
        return cls(n, [(1 << n) - 1] * n)

    def is_open(self, mask: int) -> bool:
        return all(self.neigh[x] & ~mask == 0 for x in bits(mask))

    def is_closed(self, mask: int) -> bool:
        return self.is_open(self.full & ~mask)

    def interior(self, mask: int) -> int:
        return mask_of(x for x in bits(mask) if self.neigh[x] & ~mask == 0)

    def closure(self, mask: int) -> int:
        return self.full & ~self.interior(self.full & ~mask)

    def opens(self, cap: int = 1 << 20) -> list[int]:
        """Every open set, ascending; raises CapExceeded beyond `cap` sets."""
        distinct = sorted(set(self.neigh))
        found = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for u in frontier:
                for m in distinct:
                    v = u | m
                    if v not in found:
                        found.add(v)
                        nxt.append(v)
                        if len(found) > cap:
                            raise CapExceeded(f"more than {cap} open sets")
            frontier = nxt
        return sorted(found)

    def count_opens(self, cap: int = 1 << 20) -> int:
        """Exact open-set count via up-set recursion on the specialisation order."""
        # collapse mutually-inseparable points; classes inherit reachability
        classes: list[int] = []
        cls_of = [-1] * self.n
        for x in range(self.n):
            if cls_of[x] >= 0:
                continue
            members = mask_of(
                y for y in range(self.n)
                if self.neigh[x] >> y & 1 and self.neigh[y] >> x & 1
            ) | (1 << x)
            for y in bits(members):
                cls_of[y] = len(classes)
            classes.append(members)
        k = len(classes)
        reach = []
        for c, members in enumerate(classes):
            x = next(bits(members))
            reach.append(mask_of(cls_of[y] for y in bits(self.neigh[x])) | (1 << c))
        memo: dict[int, int] = {}

        def cnt(rem: int) -> int:
            if rem == 0:
                return 1
            got = memo.get(rem)
            if got is not None:
                return got
            if len(memo) > cap:
                raise CapExceeded(f"open-set counting exceeded {cap} states")
            # a minimal remaining class: nothing left below it forces it
            c = next(
                c for c in bits(rem)
                if all(reach[d] >> c & 1 == 0 for d in bits(rem) if d != c)
            )
            without = cnt(rem & ~(1 << c))
            with_c = cnt(rem & ~reach[c])
            memo[rem] = without + with_c
            return without + with_c

        return cnt((1 << k) - 1)

    def join(self, other: "Topology") -> "Topology":
        if self.n != other.n:
            raise ValueError("topologies live on different point sets")
        return Topology(self.n, [a & b for a, b in zip(self.neigh, other.neigh)])

    def subspace(self, mask: int) -> "Topology":
        """Induced topology on the points of `mask`, re-indexed in bit order."""
        pts = list(bits(mask))
        index = {p: i for i, p in enumerate(pts)}
        neigh = [mask_of(index[q] for q in bits(self.neigh[p] & mask)) for p in pts]
        return Topology(len(pts), neigh)

    def __eq__(self, other):
        return isinstance(other, Topology) and self.n == other.n and self.neigh == other.neigh

    def __hash__(self):
        return hash((self.n, self.neigh))

    def __repr__(self):
        return f"Topology(n={self.n}, neigh={[set_str(m) for m in self.neigh]})"


def generate_topology(n_points: int, subbasis) -> Topology:
    """Smallest topology containing the subbasis (always contains {} and X)."""
    return Topology.from_subbasis(n_points, subbasis)


class BitopSpace:
    """A finite point set carrying two topologies."""

    def __init__(self, tau1: Topology, tau2: Topology):
        if tau1.n != tau2.n:
            raise ValueError("the two topologies must share the point set")
        self.n = tau1.n
        self.full = tau1.full
        self.tau1 = tau1
        self.tau2 = tau2
        self._join: Topology | None = None

    @classmethod
    def from_subbases(cls, n: int, sub1, sub2) -> "BitopSpace":
        return cls(Topology.from_subbasis(n, sub1), Topology.from_subbasis(n, sub2))

    @classmethod
    def discrete(cls, n: int) -> "BitopSpace":
        return cls(Topology.discrete(n), Topology.discrete(n))

    @property
    def join_topology(self) -> Topology:
        if self._join is None:
            self._join = self.tau1.join(self.tau2)
        return self._join

    def beta1_contains(self, mask: int) -> bool:
        """Membership in beta1 = tau1-open and tau2-closed."""
        return self.tau1.is_open(mask) and self.tau2.is_closed(mask)

    def beta2_contains(self, mask: int) -> bool:
        return self.tau2.is_open(mask) and self.tau1.is_closed(mask)

    def beta1_family(self, cap: int = 1 << 20) -> list[int]:
        return [u for u in self.tau1.opens(cap) if self.tau2.is_closed(u)]

    def beta2_family(self, cap: int = 1 << 20) -> list[int]:
        return [u for u in self.tau2.opens(cap) if self.tau1.is_closed(u)]

    def is_pairwise_closed(self, mask: int) -> bool:
        """Closed in the join topology (the reading adopted for Lambda/K(S))."""
        return self.join_topology.is_closed(mask)

    def pairwise_closed_family(self, cap: int = 1 << 22) -> list[int]:
        if self.n > 22:
            raise CapExceeded("pairwise-closed family scan limited to 22 points")
        return [m for m in range(1 << self.n) if self.is_pairwise_closed(m)][: cap + 1]

    def subspace(self, mask: int) -> "BitopSpace":
        return BitopSpace(self.tau1.subspace(mask), self.tau2.subspace(mask))

    def __eq__(self, other):
        return (
            isinstance(other, BitopSpace)
            and self.tau1 == other.tau1
            and self.tau2 == other.tau2
        )

    def __hash__(self):
        return hash((self.tau1, self.tau2))

    def __repr__(self):
        return f"BitopSpace(n={self.n})"


# -- the three pairwise separation/cover properties ------------------------------


def is_pairwise_hausdorff(space: BitopSpace, ordered: bool = True):
    """Disjoint tau1/tau2 neighbourhoods for distinct points.

    `ordered=True` (default, the stronger reading) demands witnesses for every
    ordered pair; `ordered=False` accepts one orientation per unordered pair.
    Returns (ok, witness_pair).  Minimal neighbourhoods are optimal witnesses,
    so the check is exact.
    """
    n1, n2 = space.tau1.neigh, space.tau2.neigh
    for x in range(space.n):
        for y in range(space.n):
            if x == y:
                continue
            if n1[x] & n2[y] == 0:
                continue
            if not ordered and n1[y] & n2[x] == 0:
                continue
            return False, (x, y)
    return True, None


def is_pairwise_zero_dimensional(space: BitopSpace) -> bool:
    """beta1 is a basis for tau1 and beta2 for tau2.

    Equivalent finite form: every minimal tau1-neighbourhood is tau2-closed
    (and symmetrically); `zero_dimensional_witness` gives the failing point.
    """
    return zero_dimensional_witness(space) is None


def zero_dimensional_witness(space: BitopSpace):
    for x in range(space.n):
        if not space.tau2.is_closed(space.tau1.neigh[x]):
            return (1, x)
        if not space.tau1.is_closed(space.tau2.neigh[x]):
            return (2, x)
    return None


def find_finite_subcover(space: BitopSpace, cover) -> list[int] | None:
    """A finite subcover of the given open cover, or None if it fails to cover."""
    cover = [int(c) for c in cover]
    chosen: list[int] = []
    covered = 0
    for x in range(space.n):
        if covered >> x & 1:
            continue
        pick = next((c for c in cover if c >> x & 1), None)
        if pick is None:
            return None
        chosen.append(pick)
        covered |= pick
    return chosen


def is_pairwise_compact(space: BitopSpace, cover=None) -> bool:
    """Genuine finite-subcover check over a cover drawn from tau1 and tau2.

    The default cover is every minimal neighbourhood of both topologies
    (every open is a union of these, so any cover refines through it).  Any
    user-supplied cover of opens is searched the same way.  Finite spaces
    always succeed; the search is executed rather than assumed.
    """
    if cover is None:
        cover = sorted(set(space.tau1.neigh) | set(space.tau2.neigh))
    sub = find_finite_subcover(space, cover)
    if sub is None:
        raise ValueError("the supplied family does not cover the space")
    assert len(sub) <= space.n
    return True


def is_pairwise_boolean(space: BitopSpace, ordered: bool = True) -> bool:
    ok_h, _ = is_pairwise_hausdorff(space, ordered=ordered)
    return ok_h and is_pairwise_zero_dimensional(space) and is_pairwise_compact(space)


# -- category objects ------------------------------------------------------------


@dataclass(frozen=True)
class PBSObject:
    """A pairwise Boolean space with a subalgebra-indexed family of subspaces.

    `alpha[i]` is the point set assigned to `family.members[i]`; it must be
    pairwise closed, assign the full space to the full subalgebra, and turn
    intersections of subalgebras into intersections of point sets.
    """

    space: BitopSpace
    family: SubalgebraFamily
    alpha: tuple[int, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.family):
            raise AlphaDomainMismatch(
                f"alpha defined on {len(self.alpha)} of {len(self.family)} subalgebras"
            )

    @property
    def lattice(self) -> FiniteLattice:
        return self.family.parent

    def alpha_of(self, member) -> int:
        return self.alpha[self.family.index_of(member)]


@dataclass(frozen=True)
class PRBSObject:
    """A PBS object together with a binary successor relation on its points."""

    base: PBSObject
    rel: tuple[int, ...]  # successor bitmask per point

    def __post_init__(self):
        if len(self.rel) != self.base.space.n:
            raise AlphaDomainMismatch("relation rows must match the point count")

    @property
    def space(self) -> BitopSpace:
        return self.base.space


def canonical_object(lat: FiniteLattice, family: SubalgebraFamily | None = None) -> PBSObject:
    """L itself as a discrete object: each subalgebra names its own point set."""
    family = family or enumerate_subalgebras(lat)
    alpha = tuple(mask_of(m) for m in family.members)
    return PBSObject(BitopSpace.discrete(lat.n), family, alpha)


# -- relation modalities -----------------------------------------------------------


def box_rel(rel, c_mask: int) -> int:
    """Points whose every successor lies in C."""
    return mask_of(p for p in range(len(rel)) if int(rel[p]) & ~c_mask == 0)


def diamond_rel(rel, c_mask: int) -> int:
    """Points with at least one successor in C."""
    return mask_of(p for p in range(len(rel)) if int(rel[p]) & c_mask)


# -- object checks -----------------------------------------------------------------


def check_pbs_object(obj: PBSObject, ordered: bool = True) -> Report:
    rep = Report(title="pairwise Boolean object")
    sp = obj.space
    ok_h, wit = is_pairwise_hausdorff(sp, ordered=ordered)
    rep.add("pairwise_hausdorff", ok_h, str(wit) if wit else "")
    zd = zero_dimensional_witness(sp)
    rep.add("pairwise_zero_dimensional", zd is None, str(zd) if zd else "")
    rep.add("pairwise_compact", is_pairwise_compact(sp))
    rep.add("alpha_full_is_space", obj.alpha[obj.family.full_index] == sp.full)

    witness = None
    masks = obj.family.member_masks()
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            try:
                k = obj.family.index_of(bits(mi & mj))
            except ValueError:
                witness = f"(members {i},{j}: intersection missing)"
                break
            if obj.alpha[k] != obj.alpha[i] & obj.alpha[j]:
                witness = f"(members {i},{j})"
                break
        if witness:
            break
    rep.add("alpha_meets_intersections", witness is None, witness or "")

    witness = next(
        (f"member {i}" for i, a in enumerate(obj.alpha) if not sp.is_pairwise_closed(a)),
        None,
    )
    rep.add("alpha_pairwise_closed", witness is None, witness or "")
    return rep


def is_subset_pairwise_compact(space: BitopSpace, mask: int) -> bool:
    sub = space.subspace(mask)
    return is_pairwise_compact(sub)


def check_prbs_object(obj: PRBSObject, beta_cap: int = 1 << 16, ordered: bool = True) -> Report:
    rep = Report(title="relational pairwise Boolean object")
    rep.extend(check_pbs_object(obj.base, ordered=ordered), prefix="base/")
    sp = obj.space

    witness = next(
        (f"R[{p}]" for p in range(sp.n) if not is_subset_pairwise_compact(sp, obj.rel[p])),
        None,
    )
    rep.add("successors_pairwise_compact", witness is None, witness or "")

    witness = None
    for c in sp.beta1_family(cap=beta_cap):
        if not sp.beta1_contains(box_rel(obj.rel, c)):
            witness = f"box {set_str(c)}"
            break
        if not sp.beta1_contains(diamond_rel(obj.rel, c)):
            witness = f"diamond {set_str(c)}"
            break
    rep.add("modal_images_in_beta1", witness is None, witness or "")

    witness = None
    for i, a in enumerate(obj.base.alpha):
        for p in bits(a):
            if obj.rel[p] & ~a:
                witness = f"(member {i}, point {p})"
                break
        if witness:
            break
    rep.add("alpha_closed_under_successors", witness is None, witness or "")
    return rep


# -- arrows ------------------------------------------------------------------------


def is_continuous(f, source: Topology, target: Topology) -> bool:
    """Preimage-of-open test over the target's minimal-neighbourhood basis."""
    f = [int(v) for v in f]
    for b in set(target.neigh):
        pre = mask_of(x for x in range(source.n) if b >> f[x] & 1)
        if not source.is_open(pre):
            return False
    return True


def is_pairwise_continuous(f, source: BitopSpace, target: BitopSpace) -> bool:
    return is_continuous(f, source.tau1, target.tau1) and is_continuous(
        f, source.tau2, target.tau2
    )


def is_subspace_preserving(f, source: PBSObject, target: PBSObject) -> bool:
    f = [int(v) for v in f]
    for a_src, a_tgt in zip(source.alpha, target.alpha):
        for p in bits(a_src):
            if not a_tgt >> f[p] & 1:
                return False
    return True


def is_pbs_morphism(f, source: PBSObject, target: PBSObject) -> bool:
    return is_pairwise_continuous(f, source.space, target.space) and is_subspace_preserving(
        f, source, target
    )


def is_prbs_morphism(f, source: PRBSObject, target: PRBSObject):
    """PBS arrow + forth and back conditions.  Returns (ok, reason)."""
    f = [int(v) for v in f]
    if not is_pbs_morphism(f, source.base, target.base):
        return False, "not a pairwise-continuous subspace-preserving map"
    for p1 in range(source.space.n):
        for p2 in bits(source.rel[p1]):
            if not target.rel[f[p1]] >> f[p2] & 1:
                return False, f"forth fails at ({p1},{p2})"
    for p in range(source.space.n):
        for q in bits(target.rel[f[p]]):
            if not any(f[p_star] == q for p_star in bits(source.rel[p])):
                return False, f"back fails at (point {p}, target successor {q})"
    return True, None
