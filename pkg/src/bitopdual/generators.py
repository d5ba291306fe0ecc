"""Deterministic seeded instance generation for the property batteries.

Lattices are drawn from a catalogue (chains, Boolean cubes, products of
chains) so distributivity is guaranteed by construction.  Relational objects
assign each point a subalgebra label and repair the seeded relation so that
successors never escape their point's subspace — valid by construction and
verified again in tests.  Same seed, same bytes.
"""

from __future__ import annotations

import random

from .bitopology import BitopSpace, PBSObject, PRBSObject, mask_of
from .errors import UnknownVerb
from .formats import (
    serialize_lattice,
    serialize_model,
    serialize_powerset_algebra,
    serialize_space,
)
from .lattice import (
    FiniteLattice,
    boolean_cube,
    chain,
    product_of_chains,
    subalgebra_family,
)
from .logic import KripkeModel

CATALOGUE: tuple[tuple[str, FiniteLattice], ...] = tuple(
    [(f"chain{n}", chain(n)) for n in range(2, 9)]
    + [
        ("square", boolean_cube(2)),
        ("cube", boolean_cube(3)),
        ("chain2x3", product_of_chains([2, 3])),
        ("chain2x4", product_of_chains([2, 4])),
    ]
)


def catalogue_lattice(rng: random.Random) -> tuple[str, FiniteLattice]:
    return CATALOGUE[rng.randrange(len(CATALOGUE))]


def seeded_frame(rng: random.Random, n_worlds: int) -> list[tuple[int, int]]:
    """Edge set with density drawn from the generator."""
    density = rng.choice((0.0, 0.25, 0.5, 0.75, 1.0))
    return [
        (a, b)
        for a in range(n_worlds)
        for b in range(n_worlds)
        if rng.random() < density
    ]


def seeded_boolean_space(rng: random.Random, max_points: int = 5) -> BitopSpace:
    """A pairwise Boolean space of seeded size.

    Finite pairwise Hausdorff spaces (ordered reading) are discrete in both
    topologies, so size is the only degree of freedom.
    """
    return BitopSpace.discrete(rng.randrange(0, max_points + 1))


def seeded_bitop_space(rng: random.Random, max_points: int = 5) -> BitopSpace:
    """An arbitrary bitopological space from random subbases (diagnostic use)."""
    n = rng.randrange(0, max_points + 1)
    sub1 = [rng.randrange(1 << n) for _ in range(rng.randrange(0, n + 2))]
    sub2 = [rng.randrange(1 << n) for _ in range(rng.randrange(0, n + 2))]
    return BitopSpace.from_subbases(n, sub1, sub2)


def seeded_prbs_object(
    rng: random.Random, lat: FiniteLattice, max_points: int = 4
) -> PRBSObject:
    """Relational object: subalgebra labels per point induce the subspace map,
    and the seeded relation is repaired to respect it."""
    family = subalgebra_family(lat)
    n = rng.randrange(1, max_points + 1)
    labels = [rng.randrange(len(family)) for _ in range(n)]
    member_sets = [set(m) for m in family.members]
    alpha = tuple(
        mask_of(p for p in range(n) if member_sets[labels[p]] <= member_sets[i])
        for i in range(len(family))
    )
    base = PBSObject(BitopSpace.discrete(n), family, alpha)
    rows = [0] * n
    for a, b in seeded_frame(rng, n):
        if member_sets[labels[b]] <= member_sets[labels[a]]:
            rows[a] |= 1 << b
    return PRBSObject(base, tuple(rows))


GENERATOR_KINDS = ("lattice", "powerset-algebra", "frame", "bitop-space", "prbs-object")


def generate_instance(seed: int, kind: str) -> str:
    """Serialized pseudo-random instance; identical bytes for identical seeds."""
    rng = random.Random(seed)
    if kind == "lattice":
        _, lat = catalogue_lattice(rng)
        return serialize_lattice(lat)
    if kind == "powerset-algebra":
        name, lat = catalogue_lattice(rng)
        n_points = rng.randrange(0, 4)
        edges = seeded_frame(rng, n_points) if rng.random() < 0.7 else None
        header = f"# lattice: {name} (inline file reference)\n"
        return header + serialize_powerset_algebra(f"{name}.lat", n_points, edges)
    if kind == "frame":
        n = rng.randrange(1, 5)
        rows = [0] * n
        for a, b in seeded_frame(rng, n):
            rows[a] |= 1 << b
        return serialize_model(KripkeModel(n, tuple(rows), {}))
    if kind == "bitop-space":
        return serialize_space(seeded_bitop_space(rng))
    if kind == "prbs-object":
        _, lat = catalogue_lattice(rng)
        obj = seeded_prbs_object(rng, lat)
        alpha = {i: m for i, m in enumerate(obj.base.alpha)}
        return serialize_space(obj.space, rel=obj.rel, alpha=alpha)
    raise UnknownVerb(f"unknown instance kind {kind!r}; choose from {GENERATOR_KINDS}")
