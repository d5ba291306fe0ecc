"""The standard verification battery: every theorem, desk scale, exact.

Each section returns a Report whose lines replay through the module
operations they name.  `run_battery` bundles all sections; its text output is
byte-deterministic given (seed, caps), which the CLI relies on.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from . import kernels
from .bitopology import (
    PRBSObject,
    bits,
    check_prbs_object,
    is_pairwise_compact,
    is_pairwise_hausdorff,
    is_pairwise_zero_dimensional,
    mask_of,
)
from .duality import (
    br_relation,
    counit_zeta,
    dual_algebra,
    dual_morphism_algebra,
    dual_morphism_space,
    dual_space,
    gamma_naturality,
    unit_gamma,
    zeta_naturality,
)
from .generators import CATALOGUE, seeded_boolean_space, seeded_frame, seeded_prbs_object
from .lattice import (
    FiniteLattice,
    TABLE_DTYPE,
    chain,
    subalgebra_family,
    t_op,
    term_switch,
    u_op,
)
from .logic import check_truth_lemma
from .mvalgebra import (
    AlgebraHom,
    MVAlgebra,
    box_from_frame,
    brute_force_homs,
    check_lml_axioms,
    check_lvl_axioms,
    derived_u,
    enumerate_homs,
    powerset_algebra,
    self_algebra,
)
from .report import Report
from .vietoris import (
    box_members,
    coalgebra_to_relation,
    diamond_members,
    relation_to_coalgebra,
    verify_category_iso,
    vietoris_space,
)

ML_LATTICES = tuple((name, lat) for name, lat in CATALOGUE if lat.n <= 4)


def ml_battery() -> list[tuple[str, MVAlgebra]]:
    """The standard modal-algebra battery: powerset algebras over small truth
    lattices with named frames plus seeded ones, and the truth lattices
    themselves with the identity modality."""
    out = []
    for name, lat in ML_LATTICES:
        out.append((f"{name}.self", self_algebra(lat, box=np.arange(lat.n, dtype=TABLE_DTYPE))))
        for n_points in (1, 2):
            frames = {
                "empty": [],
                "identity": [(p, p) for p in range(n_points)],
                "full": [(a, b) for a in range(n_points) for b in range(n_points)],
                "seeded": seeded_frame(random.Random(n_points * 31 + lat.n), n_points),
            }
            for frame_name, frame in frames.items():
                out.append(
                    (f"{name}^{n_points}.{frame_name}", box_from_frame(lat, n_points, frame))
                )
    out.append(("chain2^3.seeded", box_from_frame(chain(2), 3, seeded_frame(random.Random(5), 3))))
    out.append(("chain2^0.degenerate", box_from_frame(chain(2), 0, [])))
    return out


def prbs_battery(seed: int = 0) -> list[tuple[str, PRBSObject]]:
    """Relational objects: duals of the modal battery plus seeded objects."""
    out = [(f"dual[{name}]", dual_space(alg).object) for name, alg in ml_battery()]
    rng = random.Random(seed)
    for name, lat in ML_LATTICES:
        for k in range(2):
            out.append((f"seeded[{name}.{k}]", seeded_prbs_object(rng, lat)))
    rng8 = random.Random(seed + 1)
    out.append(("seeded[chain8]", seeded_prbs_object(rng8, chain(8), max_points=2)))
    return out


def auto_morphisms() -> list[tuple[str, AlgebraHom]]:
    """Modal-algebra morphisms generated from bounded frame maps.

    Frame inclusions of disjoint unions give restriction homs; bisimulation
    quotients give expansion homs.  Identities are included per algebra.
    """
    out = []
    for name, lat in ML_LATTICES[:3]:
        # restriction along the inclusion of a 1-world frame into a disjoint union
        big = box_from_frame(lat, 2, [(0, 0), (1, 1)])
        small = box_from_frame(lat, 1, [(0, 0)])
        # an element of big has digits (v0, v1); restriction keeps v0
        table = tuple(
            int(np.flatnonzero((small.digits[:, 0] == big.digits[e, 0]))[0])
            for e in range(big.n)
        )
        out.append((f"restrict[{name}]", AlgebraHom(big, small, table)))
        # expansion along the quotient of two bisimilar worlds onto one
        src_frame = box_from_frame(lat, 1, [(0, 0)])
        tgt = box_from_frame(lat, 2, [(0, 0), (0, 1), (1, 0), (1, 1)])
        quotient = [0, 0]  # both worlds map onto the single world
        table = tuple(
            int(
                np.flatnonzero(
                    (tgt.digits[:, 0] == src_frame.digits[e, 0])
                    & (tgt.digits[:, 1] == src_frame.digits[e, 0])
                )[0]
            )
            for e in range(src_frame.n)
        )
        out.append((f"expand[{name}]", AlgebraHom(src_frame, tgt, table)))
    for name, alg in ml_battery()[:6]:
        out.append((f"identity[{name}]", AlgebraHom(alg, alg, tuple(range(alg.n)))))
    return out


# -- criterion sections -----------------------------------------------------------


def term_function_suite() -> Report:
    """Term-function behaviours on every catalogue lattice, all inputs."""
    rep = Report(title="term functions")
    for name, lat in CATALOGUE:
        ok_switch = all(
            term_switch(lat, a, b, c, d) == (c if a == b else d)
            for a, b, c, d in itertools.product(range(lat.n), repeat=4)
        )
        rep.add(f"switch[{name}]", ok_switch)
        ok_t = all(
            t_op(lat, lv, x) == (lat.top if x == lv else lat.bottom)
            for lv in range(lat.n)
            for x in range(lat.n)
        )
        rep.add(f"level_test[{name}]", ok_t)
        ok_u = all(
            u_op(lat, lv, x) == (lat.top if lat.leq[lv, x] else lat.bottom)
            for lv in range(lat.n)
            for x in range(lat.n)
        )
        rep.add(f"threshold_test[{name}]", ok_u)
        alg = self_algebra(lat)
        ok_du = all(
            derived_u(alg, lv, x) == u_op(lat, lv, x)
            for lv in range(lat.n)
            for x in range(lat.n)
        )
        rep.add(f"derived_threshold[{name}]", ok_du)
    return rep


def axiom_soundness(seed: int = 0, frame_count: int = 50) -> Report:
    """Powerset algebras satisfy the truth-level axioms; frame boxes satisfy
    the modal axioms, over the catalogue and seeded frames."""
    rep = Report(title="axiom soundness")
    for name, lat in CATALOGUE:
        for n_points in range(0, 4):
            alg = powerset_algebra(lat, n_points)
            sub = check_lvl_axioms(alg)
            rep.add(
                f"lvl[{name}^{n_points}]",
                sub.passed,
                "" if sub.passed else sub.failures()[0].machine(),
            )
    rng = random.Random(seed)
    for k in range(frame_count):
        name, lat = CATALOGUE[k % len(CATALOGUE)]
        n_points = 1 + k % 3
        alg = box_from_frame(lat, n_points, seeded_frame(rng, n_points))
        sub = check_lml_axioms(alg)
        rep.add(
            f"lml[{k}:{name}^{n_points}]",
            sub.passed,
            "" if sub.passed else sub.failures()[0].machine(),
        )
    return rep


def hom_oracle_instances() -> list[tuple[str, MVAlgebra]]:
    """Every battery algebra with carrier size at most 16."""
    out = []
    for name, lat in CATALOGUE:
        for n_points in range(0, 5):
            if lat.n**n_points <= 16:
                out.append((f"{name}^{n_points}", powerset_algebra(lat, n_points)))
    return out


def hom_oracle_equivalence(max_candidates: int = 2**33) -> Report:
    """Backtracking enumeration equals the exhaustive map filter, per
    subalgebra target; powerset hom counts equal the point count."""
    rep = Report(title="hom enumeration against the exhaustive oracle")
    for name, alg in hom_oracle_instances():
        lat = alg.lattice
        for member in subalgebra_family(lat).members:
            work = kernels.scan_work(alg.n, len(member))
            if work > max_candidates:
                continue
            fast = enumerate_homs(alg, target=member)
            slow = brute_force_homs(alg, target=member, max_candidates=max_candidates)
            rep.add(
                f"oracle[{name}->{len(member)}of{lat.n}]",
                [tuple(h) for h in fast] == [tuple(h) for h in slow],
                f"backtracking {len(fast)} vs filter {len(slow)}",
            )
        rep.add(
            f"count[{name}]",
            len(enumerate_homs(alg)) == (alg.n_points or 0),
            f"expected {alg.n_points}",
        )
    return rep


def dual_well_definedness() -> Report:
    """Dual spaces are relational objects; dual algebras satisfy the modal
    axioms (the two functor well-definedness lemmas, executed)."""
    rep = Report(title="functor well-definedness")
    for name, alg in ml_battery():
        ds = dual_space(alg)
        sub = check_prbs_object(ds.object)
        rep.add(
            f"dual_space[{name}]",
            sub.passed,
            "" if sub.passed else sub.failures()[0].machine(),
        )
        da = dual_algebra(ds.object)
        sub2 = check_lml_axioms(da.algebra)
        rep.add(
            f"dual_algebra[{name}]",
            sub2.passed,
            "" if sub2.passed else sub2.failures()[0].machine(),
        )
    return rep


def duality_round_trips(seed: int = 0) -> Report:
    """Unit evaluation is an isomorphism, counit a bi-homeomorphism with exact
    relation equivalence, and the naturality squares commute."""
    rep = Report(title="duality round trips")
    for name, alg in ml_battery():
        _, gamma_rep = unit_gamma(alg)
        rep.add(
            f"gamma[{name}]",
            gamma_rep.passed,
            "" if gamma_rep.passed else gamma_rep.failures()[0].machine(),
        )
    for name, obj in prbs_battery(seed):
        _, zeta_rep = counit_zeta(obj)
        rep.add(
            f"zeta[{name}]",
            zeta_rep.passed,
            "" if zeta_rep.passed else zeta_rep.failures()[0].machine(),
        )
    for name, hom in auto_morphisms():
        ok, why = hom.check()
        rep.add(f"morphism_valid[{name}]", ok, why or "")
        rep.add(f"gamma_square[{name}]", gamma_naturality(hom).passed)
    for name, obj in prbs_battery(seed)[:6]:
        ident = list(range(obj.space.n))
        rep.add(f"zeta_square[identity:{name}]", zeta_naturality(ident, obj, obj).passed)
    return rep


def truth_lemma_battery() -> Report:
    rep = Report(title="canonical-model truth lemma")
    for name, alg in ml_battery():
        sub = check_truth_lemma(alg)
        rep.add(
            f"truth_lemma[{name}]",
            sub.passed,
            "" if sub.passed else sub.failures()[0].machine(),
        )
    return rep


def vietoris_battery(seed: int = 0, count: int = 100) -> Report:
    """Hyperspaces of seeded pairwise Boolean spaces stay pairwise Boolean;
    the inside/meets generators complement each other exactly."""
    rep = Report(title="hyperspace preservation")
    rng = random.Random(seed)
    for k in range(count):
        space = seeded_boolean_space(rng, max_points=5)
        vs = vietoris_space(space)
        ok_h, _ = is_pairwise_hausdorff(vs.space)
        ok = (
            ok_h
            and is_pairwise_zero_dimensional(vs.space)
            and is_pairwise_compact(vs.space)
            and not vs.warnings
        )
        all_members = (1 << len(vs.members)) - 1
        de_morgan = all(
            all_members & ~box_members(vs.members, u)
            == diamond_members(vs.members, space.full & ~u)
            and all_members & ~diamond_members(vs.members, u)
            == box_members(vs.members, space.full & ~u)
            for u in range(1 << space.n)
        )
        rep.add(f"hyperspace[{k}:n={space.n}]", ok and de_morgan)
    return rep


def coalgebra_battery(seed: int = 0) -> Report:
    """Exact identity round trips between relational objects and coalgebras,
    plus commuting squares for relational morphisms (identities and the
    bisimulation quotient)."""
    objects = [obj for _, obj in prbs_battery(seed)]
    arrows = []
    for _, obj in prbs_battery(seed)[:4]:
        arrows.append((list(range(obj.space.n)), obj, obj))
    fam = subalgebra_family(chain(2))
    from .bitopology import BitopSpace, PBSObject

    src = PRBSObject(
        PBSObject(BitopSpace.discrete(3), fam, ((1 << 3) - 1,)), (0b010, 0b001, 0b001)
    )
    tgt = PRBSObject(PBSObject(BitopSpace.discrete(2), fam, (0b11,)), (0b10, 0b01))
    arrows.append(([0, 1, 1], src, tgt))
    coalgebras = [relation_to_coalgebra(obj) for obj in objects[:10]]
    return verify_category_iso(objects + [src, tgt], coalgebras, arrows)


def soundness_chain() -> Report:
    """The full composite — dualize, read as coalgebra, read back, dualize
    back, pull through the unit — recovers every battery algebra exactly."""
    rep = Report(title="algebra recovery through the coalgebra chain")
    for name, alg in ml_battery():
        ds = dual_space(alg)
        obj = ds.object
        coalg = relation_to_coalgebra(obj)
        back = coalgebra_to_relation(coalg)
        if not (back.base == obj.base and back.rel == obj.rel):
            rep.add(f"chain[{name}]", False, "coalgebra round trip moved the object")
            continue
        da = dual_algebra(back)
        hom, gamma_rep = unit_gamma(alg)
        if not gamma_rep.passed:
            rep.add(f"chain[{name}]", False, gamma_rep.failures()[0].machine())
            continue
        g = np.array(hom.table, dtype=np.int64)
        inverse = np.zeros(alg.n, dtype=np.int64)
        inverse[g] = np.arange(alg.n)
        B = da.algebra
        recovered = MVAlgebra(
            alg.lattice,
            inverse[B.meet[g[:, None], g[None, :]]],
            inverse[B.join[g[:, None], g[None, :]]],
            inverse[B.implies[g[:, None], g[None, :]]],
            inverse[B.t[:, g]],
            int(inverse[B.bottom]),
            int(inverse[B.top]),
            box=inverse[B.box[g]] if B.has_box else None,
            labels=alg.labels,
        )
        rep.add(f"chain[{name}]", recovered.same_tables(alg))
    return rep


def run_battery(seed: int = 0, oracle_budget: int = 2**33, vietoris_count: int = 100) -> Report:
    """Every section, with stable line prefixes; byte-deterministic output."""
    rep = Report(title=f"battery seed={seed}")
    rep.extend(term_function_suite(), prefix="terms/")
    rep.extend(axiom_soundness(seed), prefix="axioms/")
    rep.extend(hom_oracle_equivalence(oracle_budget), prefix="homs/")
    rep.extend(dual_well_definedness(), prefix="functors/")
    rep.extend(duality_round_trips(seed), prefix="duality/")
    rep.extend(truth_lemma_battery(), prefix="logic/")
    rep.extend(vietoris_battery(seed, vietoris_count), prefix="vietoris/")
    rep.extend(coalgebra_battery(seed), prefix="coalgebra/")
    rep.extend(soundness_chain(), prefix="soundness/")
    return rep
