"""The two contravariant functors and their unit/counit isomorphisms.

One direction sends an algebra to the bitopological space of its truth-lattice
homomorphisms (with the induced successor relation when the algebra is modal);
the other sends a relational space to the algebra of pairwise-continuous
subspace-preserving maps into the truth lattice.  The round-trip evaluation
maps are verified to be isomorphisms instance by instance: bijections plus
per-operation table equality, never isomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bitopology import (
    BitopSpace,
    PBSObject,
    PRBSObject,
    Topology,
    bits,
    check_pbs_object,
    check_prbs_object,
    is_pairwise_continuous,
    is_pbs_morphism,
    is_prbs_morphism,
    mask_of,
)
from .config import default_caps
from .errors import CapExceeded, MissingBox
from .lattice import TABLE_DTYPE, subalgebra_family
from .mvalgebra import (
    AlgebraHom,
    MVAlgebra,
    _digit_matrix,
    enumerate_homs,
    is_homomorphism,
    self_algebra,
)
from .report import Report


@dataclass(frozen=True)
class DualSpaceResult:
    """Dual space of an algebra, with the point <-> hom correspondence pinned.

    point_index[i] is the value tuple of the i-th hom (lexicographic order);
    basis_index[a] is the set of points sending element a to the top truth
    value — the generating opens of the first topology.
    """

    object: PBSObject | PRBSObject
    point_index: tuple[tuple[int, ...], ...]
    basis_index: tuple[int, ...]

    @property
    def base(self) -> PBSObject:
        return self.object.base if isinstance(self.object, PRBSObject) else self.object

    @property
    def space(self) -> BitopSpace:
        return self.base.space

    def hom_position(self, values) -> int:
        return self.point_index.index(tuple(int(v) for v in values))


@dataclass(frozen=True)
class DualAlgebraResult:
    """Dual algebra of a space; element_index pins element <-> map order."""

    algebra: MVAlgebra
    element_index: tuple[tuple[int, ...], ...]

    def element_position(self, values) -> int:
        return self.element_index.index(tuple(int(v) for v in values))


def br_relation(alg: MVAlgebra, homs) -> tuple[int, ...]:
    """Successor relation between homs, by the literal double quantifier:

    psi R phi  iff  for every truth level l and element a,
                    l <= psi(box a)  implies  l <= phi(a).
    """
    if not alg.has_box:
        raise MissingBox("relation requires a modal operation")
    leq = alg.lattice.leq
    rows = []
    for psi in homs:
        boxed = np.asarray(psi)[alg.box]
        lhs = leq[:, boxed]  # [level, a]: level <= psi(box a)
        row = 0
        for j, phi in enumerate(homs):
            rhs = leq[:, np.asarray(phi)]
            if bool(np.all(~lhs | rhs)):
                row |= 1 << j
        rows.append(row)
    return tuple(rows)


def dual_space(alg: MVAlgebra) -> DualSpaceResult:
    """Points are the truth-lattice homs; the first topology is generated by
    the element-indexed basis, the second by its complements; subalgebras are
    assigned the homs landing inside them; modal algebras add the induced
    successor relation."""
    lat = alg.lattice
    homs = enumerate_homs(alg)
    n_pts = len(homs)
    full = (1 << n_pts) - 1
    basis = tuple(
        mask_of(i for i, h in enumerate(homs) if h[a] == lat.top) for a in range(alg.n)
    )
    tau1 = Topology.from_subbasis(n_pts, basis)
    tau2 = Topology.from_subbasis(n_pts, [full & ~b for b in basis])
    family = subalgebra_family(lat)
    alpha = []
    for member in family.member_masks():
        alpha.append(
            mask_of(
                i for i, h in enumerate(homs)
                if all(member >> int(v) & 1 for v in h)
            )
        )
    base = PBSObject(BitopSpace(tau1, tau2), family, tuple(alpha))
    obj: PBSObject | PRBSObject = base
    if alg.has_box:
        obj = PRBSObject(base, br_relation(alg, homs))
    points = tuple(tuple(int(v) for v in h) for h in homs)
    return DualSpaceResult(obj, points, basis)


def _continuity_tables(space: BitopSpace) -> tuple[np.ndarray, np.ndarray]:
    """Openness lookup for every subset mask, in both topologies."""
    size = 1 << space.n
    if size > (1 << 22):
        raise CapExceeded("continuity tables limited to 22 points")
    open1 = np.zeros(size, dtype=bool)
    open2 = np.zeros(size, dtype=bool)
    for m in range(size):
        open1[m] = space.tau1.is_open(m)
        open2[m] = space.tau2.is_open(m)
    return open1, open2


def dual_algebra(
    obj: PBSObject | PRBSObject, max_candidates: int | None = None
) -> DualAlgebraResult:
    """Carrier: all pairwise-continuous subspace-preserving maps into L,
    found by exhaustively filtering every candidate function (desk scale);
    operations are pointwise, and a relation induces the meet-over-successors
    modal operation."""
    if max_candidates is None:
        max_candidates = default_caps().max_candidates
    rel = obj.rel if isinstance(obj, PRBSObject) else None
    base = obj.base if isinstance(obj, PRBSObject) else obj
    lat = base.lattice
    n_pts = base.space.n
    total = lat.n**n_pts
    if total > max_candidates:
        raise CapExceeded(f"{lat.n}^{n_pts} = {total} candidate maps exceeds cap")

    digits = _digit_matrix(lat.n, n_pts)
    keep = np.ones(total, dtype=bool)
    # pairwise continuity: every truth-value fiber open in both topologies
    open1, open2 = _continuity_tables(base.space)
    weights = (1 << np.arange(n_pts)).astype(np.int64)
    for level in range(lat.n):
        fibers = ((digits == level).astype(np.int64) @ weights) if n_pts else np.zeros(1, dtype=np.int64)
        keep &= open1[fibers] & open2[fibers]
    # subspace preservation: points assigned to a subalgebra take values in it
    for member_mask, a_mask in zip(base.family.member_masks(), base.alpha):
        for p in bits(a_mask):
            keep &= (member_mask >> digits[:, p].astype(np.int64) & 1).astype(bool)

    chosen = np.flatnonzero(keep)
    carrier = digits[chosen]
    index_of = np.full(total, -1, dtype=np.int64)
    index_of[chosen] = np.arange(len(chosen))

    def locate(dmat: np.ndarray, what: str) -> np.ndarray:
        ids = dmat.astype(np.int64) @ (lat.n ** np.arange(n_pts - 1, -1, -1)).astype(np.int64) if n_pts else np.zeros(dmat.shape[:-1], dtype=np.int64)
        out = index_of[ids]
        if (out < 0).any():
            raise RuntimeError(
                f"dual carrier is not closed under pointwise {what}; "
                "the input is not a valid dual-category object"
            )
        return out.astype(TABLE_DTYPE)

    m = len(chosen)
    meet = np.zeros((m, m), dtype=TABLE_DTYPE)
    join = np.zeros((m, m), dtype=TABLE_DTYPE)
    imp = np.zeros((m, m), dtype=TABLE_DTYPE)
    for i in range(m):
        row = carrier[i]
        meet[i] = locate(lat.meet[row, carrier], "meet")
        join[i] = locate(lat.join[row, carrier], "join")
        imp[i] = locate(lat.implies[row, carrier], "implication")
    t_l = np.where(np.eye(lat.n, dtype=bool), lat.top, lat.bottom).astype(TABLE_DTYPE)
    t = np.zeros((lat.n, m), dtype=TABLE_DTYPE)
    for level in range(lat.n):
        t[level] = locate(t_l[level][carrier], "T")

    bottom = int(index_of[int(np.asarray([lat.bottom] * n_pts, dtype=np.int64) @ (lat.n ** np.arange(n_pts - 1, -1, -1)))]) if n_pts else 0
    top = int(index_of[int(np.asarray([lat.top] * n_pts, dtype=np.int64) @ (lat.n ** np.arange(n_pts - 1, -1, -1)))]) if n_pts else 0
    if bottom < 0 or top < 0:
        raise RuntimeError("constant maps missing from the dual carrier")

    box = None
    if rel is not None:
        boxed = np.full((m, n_pts), lat.top, dtype=TABLE_DTYPE)
        for x in range(n_pts):
            for y in bits(rel[x]):
                boxed[:, x] = lat.meet[boxed[:, x], carrier[:, y]]
        box = locate(boxed, "box") if n_pts else np.zeros(1, dtype=TABLE_DTYPE)

    labels = tuple(
        "".join(lat.labels[d] for d in row)
        if all(len(s) == 1 for s in lat.labels)
        else ",".join(lat.labels[d] for d in row)
        for row in carrier
    )
    if n_pts == 0:
        labels = ("()",)
    alg = MVAlgebra(lat, meet, join, imp, t, bottom, top, box=box, labels=labels)
    alg.n_points = n_pts
    alg.digits = carrier
    return DualAlgebraResult(alg, tuple(tuple(int(v) for v in row) for row in carrier))


# -- functor action on arrows --------------------------------------------------------


def dual_morphism_space(
    hom: AlgebraHom,
    dual_source: DualSpaceResult | None = None,
    dual_target: DualSpaceResult | None = None,
) -> np.ndarray:
    """Dualize an algebra morphism to precomposition between dual spaces,
    verifying target membership and arrow-hood."""
    dual_source = dual_source or dual_space(hom.source)
    dual_target = dual_target or dual_space(hom.target)
    table = np.asarray(hom.table, dtype=TABLE_DTYPE)
    out = np.zeros(len(dual_target.point_index), dtype=TABLE_DTYPE)
    for i, phi in enumerate(dual_target.point_index):
        composite = tuple(int(phi[table[a]]) for a in range(hom.source.n))
        out[i] = dual_source.hom_position(composite)
    src_obj, tgt_obj = dual_target.object, dual_source.object
    if isinstance(src_obj, PRBSObject) and isinstance(tgt_obj, PRBSObject):
        ok, why = is_prbs_morphism(out, src_obj, tgt_obj)
    else:
        ok = is_pbs_morphism(out, dual_target.base, dual_source.base)
        why = "not a dual-category arrow"
    if not ok:
        raise RuntimeError(f"dualized morphism is ill-formed: {why}")
    return out


def dual_morphism_algebra(
    f,
    dual_source: DualAlgebraResult,
    dual_target: DualAlgebraResult,
) -> AlgebraHom:
    """Dualize a space morphism f: P1 -> P2 to precomposition
    F(P2) -> F(P1), verifying it lands in the carrier and preserves all
    operations."""
    f = [int(v) for v in f]
    table = []
    for row in dual_target.element_index:
        composite = tuple(row[f[p]] for p in range(len(f)))
        table.append(dual_source.element_position(composite))
    hom = AlgebraHom(dual_target.algebra, dual_source.algebra, tuple(table))
    ok, why = hom.check()
    if not ok:
        raise RuntimeError(f"dualized space morphism is not a homomorphism: {why}")
    return hom


# -- unit and counit -----------------------------------------------------------------


def unit_gamma(alg: MVAlgebra):
    """Evaluation of elements at homs: a |-> (g |-> g(a)).

    Returns (hom, report); the report asserts bijectivity and per-operation
    preservation against the double-dual algebra, box included when present.
    """
    ds = dual_space(alg)
    da = dual_algebra(ds.object)
    rep = Report(title="unit evaluation into the double dual")
    n_pts = len(ds.point_index)
    gamma = np.full(alg.n, -1, dtype=np.int64)
    missing = None
    lookup = {row: i for i, row in enumerate(da.element_index)}
    for a in range(alg.n):
        values = tuple(int(ds.point_index[i][a]) for i in range(n_pts))
        got = lookup.get(values)
        if got is None:
            missing = f"element {alg.labels[a]}"
            break
        gamma[a] = got
    rep.add("gamma_into_carrier", missing is None, missing or "")
    if missing is not None:
        return AlgebraHom(alg, da.algebra, tuple(int(v) for v in gamma)), rep

    rep.add("gamma_injective", len(set(gamma.tolist())) == alg.n)
    rep.add("gamma_surjective", da.algebra.n == alg.n and len(set(gamma.tolist())) == alg.n)
    g = gamma.astype(TABLE_DTYPE)
    B = da.algebra
    rep.add("gamma_bottom", int(g[alg.bottom]) == B.bottom)
    rep.add("gamma_top", int(g[alg.top]) == B.top)
    for name, sa, ta in (
        ("meet", alg.meet, B.meet),
        ("join", alg.join, B.join),
        ("implies", alg.implies, B.implies),
    ):
        ok = np.array_equal(g[sa], ta[g[:, None], g[None, :]])
        rep.add(f"gamma_{name}", bool(ok))
    ok = all(
        np.array_equal(g[alg.t[level]], B.t[level][g]) for level in range(alg.lattice.n)
    )
    rep.add("gamma_levels", bool(ok))
    if alg.has_box:
        if not B.has_box:
            rep.add("gamma_box", False, "double dual lost the modal operation")
        else:
            rep.add("gamma_box", bool(np.array_equal(g[alg.box], B.box[g])))
    return AlgebraHom(alg, B, tuple(int(v) for v in gamma)), rep


def counit_zeta(obj: PBSObject | PRBSObject):
    """Evaluation of points at maps: p |-> (psi |-> psi(p)).

    Returns (point map, report); the report asserts a bi-homeomorphism that
    matches the subspace assignments exactly and, over a relation, the exact
    successor equivalence in both directions.
    """
    da = dual_algebra(obj)
    ds2 = dual_space(da.algebra)
    base = obj.base if isinstance(obj, PRBSObject) else obj
    rel = obj.rel if isinstance(obj, PRBSObject) else None
    rep = Report(title="counit evaluation into the double dual")
    n_pts = base.space.n
    lookup = {row: i for i, row in enumerate(ds2.point_index)}
    zeta = np.full(n_pts, -1, dtype=np.int64)
    missing = None
    for p in range(n_pts):
        values = tuple(int(row[p]) for row in da.element_index)
        got = lookup.get(values)
        if got is None:
            missing = f"point {p}"
            break
        zeta[p] = got
    rep.add("zeta_into_points", missing is None, missing or "")
    if missing is not None:
        return zeta, rep

    bijective = len(set(zeta.tolist())) == n_pts and len(ds2.point_index) == n_pts
    rep.add("zeta_bijective", bijective)
    if not bijective:
        return zeta, rep
    inverse = np.zeros(n_pts, dtype=np.int64)
    for p, q in enumerate(zeta):
        inverse[q] = p
    rep.add(
        "zeta_pairwise_continuous",
        is_pairwise_continuous(zeta, base.space, ds2.space),
    )
    rep.add(
        "zeta_inverse_continuous",
        is_pairwise_continuous(inverse, ds2.space, base.space),
    )
    images_ok = all(
        mask_of(int(zeta[p]) for p in bits(a_src)) == a_tgt
        for a_src, a_tgt in zip(base.alpha, ds2.base.alpha)
    )
    rep.add("zeta_subspace_images", images_ok)
    if rel is not None:
        obj2 = ds2.object
        if not isinstance(obj2, PRBSObject):
            rep.add("zeta_relation_equivalence", False, "double dual lost the relation")
        else:
            ok = all(
                mask_of(int(zeta[q]) for q in bits(rel[p])) == obj2.rel[int(zeta[p])]
                for p in range(n_pts)
            )
            rep.add("zeta_relation_equivalence", ok)
    return zeta, rep


# -- bundled theorem verification ------------------------------------------------------


def verify_lvl_duality(alg: MVAlgebra) -> Report:
    """Dual space well-formed + unit evaluation an isomorphism (no modal part)."""
    rep = Report(title="truth-level duality round trip")
    ds = dual_space(alg)
    rep.extend(check_pbs_object(ds.base), prefix="dual/")
    _, gamma_rep = unit_gamma(alg)
    rep.extend(gamma_rep)
    return rep


def verify_ml_duality(alg: MVAlgebra) -> Report:
    """Dual space a relational object + dual algebra modal + unit iso with box."""
    from .mvalgebra import check_lml_axioms  # cycle-free local import

    rep = Report(title="modal duality round trip")
    if not alg.has_box:
        raise MissingBox("modal duality needs a modal operation")
    ds = dual_space(alg)
    rep.extend(check_prbs_object(ds.object), prefix="dual/")
    da = dual_algebra(ds.object)
    rep.extend(check_lml_axioms(da.algebra), prefix="dual_algebra/")
    _, gamma_rep = unit_gamma(alg)
    rep.extend(gamma_rep)
    return rep


def verify_space_duality(obj: PBSObject | PRBSObject) -> Report:
    """Object well-formed + counit evaluation a bi-homeomorphism."""
    rep = Report(title="space duality round trip")
    if isinstance(obj, PRBSObject):
        rep.extend(check_prbs_object(obj), prefix="object/")
    else:
        rep.extend(check_pbs_object(obj), prefix="object/")
    _, zeta_rep = counit_zeta(obj)
    rep.extend(zeta_rep)
    return rep


def gamma_naturality(hom: AlgebraHom) -> Report:
    """The unit square: evaluating then dualizing equals mapping then evaluating."""
    rep = Report(title="unit naturality square")
    A, B = hom.source, hom.target
    dsA, dsB = dual_space(A), dual_space(B)
    daA, daB = dual_algebra(dsA.object), dual_algebra(dsB.object)
    space_arrow = dual_morphism_space(hom, dsA, dsB)  # G(B) -> G(A)
    alg_arrow = dual_morphism_algebra(space_arrow, daB, daA)  # FG(A) -> FG(B)
    gamma_a, _ = unit_gamma(A)
    gamma_b, _ = unit_gamma(B)
    lhs = [gamma_b.table[hom.table[a]] for a in range(A.n)]
    rhs = [alg_arrow.table[gamma_a.table[a]] for a in range(A.n)]
    rep.add("gamma_square_commutes", lhs == rhs)
    return rep


def zeta_naturality(f, source: PRBSObject, target: PRBSObject) -> Report:
    """The counit square for a space morphism."""
    rep = Report(title="counit naturality square")
    daS, daT = dual_algebra(source), dual_algebra(target)
    dsS, dsT = dual_space(daS.algebra), dual_space(daT.algebra)
    alg_arrow = dual_morphism_algebra(f, daS, daT)  # F(target) -> F(source)
    space_arrow = dual_morphism_space(alg_arrow, dsT, dsS)  # GF(source) -> GF(target)
    zeta_s, _ = counit_zeta(source)
    zeta_t, _ = counit_zeta(target)
    f = [int(v) for v in f]
    lhs = [int(zeta_t[f[p]]) for p in range(source.space.n)]
    rhs = [int(space_arrow[int(zeta_s[p])]) for p in range(source.space.n)]
    rep.add("zeta_square_commutes", lhs == rhs)
    return rep
