"""Workbench for finite Heyting-valued modal algebras and their dual spaces.

Builds finite Heyting algebras, truth-level algebras over them, their
bitopological dual spaces and bi-Vietoris coalgebras, and mechanically
verifies the duality and isomorphism theorems on concrete desk-scale
instances.  Everything is exact: discrete structures, no tolerances.
"""

from .lattice import (
    FiniteLattice,
    SubalgebraFamily,
    boolean_cube,
    build_lattice,
    chain,
    check_lattice_laws,
    diamond,
    enumerate_subalgebras,
    lukasiewicz_tables,
    product_of_chains,
    t_op,
    term_switch,
    u_op,
)
from .mvalgebra import (
    AlgebraHom,
    MVAlgebra,
    box_from_frame,
    brute_force_homs,
    check_lml_axioms,
    check_lvl_axioms,
    derived_u,
    enumerate_homs,
    is_homomorphism,
    powerset_algebra,
    self_algebra,
)
from .bitopology import (
    BitopSpace,
    PBSObject,
    PRBSObject,
    Topology,
    box_rel,
    check_pbs_object,
    check_prbs_object,
    diamond_rel,
    generate_topology,
    is_pairwise_boolean,
    is_pairwise_compact,
    is_pairwise_continuous,
    is_pairwise_hausdorff,
    is_pairwise_zero_dimensional,
    is_prbs_morphism,
    is_subspace_preserving,
)
from .duality import (
    DualAlgebraResult,
    DualSpaceResult,
    counit_zeta,
    dual_algebra,
    dual_morphism_algebra,
    dual_morphism_space,
    dual_space,
    unit_gamma,
    verify_lvl_duality,
    verify_ml_duality,
    verify_space_duality,
)
from .vietoris import (
    Coalgebra,
    VietorisSpace,
    check_coalgebra_morphism,
    coalgebra_to_relation,
    pairwise_closed_sets,
    relation_to_coalgebra,
    verify_category_iso,
    vietoris_arrow,
    vietoris_object,
    vietoris_space,
)
from .logic import (
    KripkeModel,
    canonical_model,
    check_truth_lemma,
    evaluate,
    parse_formula,
    pretty_print,
)

__version__ = "0.1.0"
