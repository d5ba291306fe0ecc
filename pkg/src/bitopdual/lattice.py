"""Finite lattices and Heyting algebras as precomputed operation tables.

Elements are dense ordinals 0..n-1.  All derived tables (join, meet, relative
pseudo-complement) are filled eagerly at construction; later modules only do
table lookups.  Non-distributive lattices can be *built* for diagnostic
law-checking, but are rejected wherever a truth lattice is required.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .errors import (
    CyclicCovers,
    ElementOutOfRange,
    InvalidArity,
    NotALattice,
)
from .report import Report

TABLE_DTYPE = np.int16


class FiniteLattice:
    """A finite lattice with eager order/join/meet/implication tables.

    `implies` is the relative pseudo-complement a -> b, computed as
    join{x : a /\\ x <= b}; on a finite distributive lattice this is the
    genuine Heyting implication (residuation is re-checked by
    `check_lattice_laws`, not assumed).
    """

    def __init__(self, leq: np.ndarray, labels: tuple[str, ...] | None = None):
        leq = np.asarray(leq, dtype=bool)
        n = leq.shape[0]
        if n == 0 or leq.shape != (n, n):
            raise NotALattice("carrier must be a nonempty square order relation")
        self.n = n
        self.leq = leq
        self.leq.setflags(write=False)
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise InvalidArity(f"{n} elements but {len(self.labels)} labels")
        self._validate_order()
        self.join = self._bound_table(upper=True)
        self.meet = self._bound_table(upper=False)
        self.bottom = int(np.flatnonzero(self.leq.all(axis=1))[0])
        self.top = int(np.flatnonzero(self.leq.all(axis=0))[0])
        self.implies = self._implies_table()
        for t in (self.join, self.meet, self.implies):
            t.setflags(write=False)
        self.is_distributive = self._distributive()

    # -- construction helpers ------------------------------------------------

    def _validate_order(self):
        leq = self.leq
        if not leq.diagonal().all():
            raise NotALattice("order is not reflexive")
        if ((leq & leq.T) & ~np.eye(self.n, dtype=bool)).any():
            raise NotALattice("order is not antisymmetric")
        if ((leq.astype(int) @ leq.astype(int)) > 0).astype(bool).sum() != leq.sum():
            # closure added pairs: not transitive
            if (((leq.astype(int) @ leq.astype(int)) > 0) & ~leq).any():
                raise NotALattice("order is not transitive")

    def _bound_table(self, upper: bool) -> np.ndarray:
        """Least upper bounds (upper=True) or greatest lower bounds."""
        leq = self.leq
        table = np.zeros((self.n, self.n), dtype=TABLE_DTYPE)
        for a in range(self.n):
            for b in range(a, self.n):
                if upper:
                    bounds = np.flatnonzero(leq[a] & leq[b])
                    best = [u for u in bounds if leq[u, bounds].all()]
                else:
                    bounds = np.flatnonzero(leq[:, a] & leq[:, b])
                    best = [u for u in bounds if leq[bounds, u].all()]
                if len(best) != 1:
                    kind = "least upper" if upper else "greatest lower"
                    raise NotALattice(
                        f"elements {self.labels[a]}, {self.labels[b]} lack a unique {kind} bound"
                    )
                table[a, b] = table[b, a] = best[0]
        return table

    def _implies_table(self) -> np.ndarray:
        table = np.zeros((self.n, self.n), dtype=TABLE_DTYPE)
        for a in range(self.n):
            for b in range(self.n):
                xs = np.flatnonzero(self.leq[self.meet[a], b])
                acc = xs[0]
                for x in xs[1:]:
                    acc = self.join[acc, x]
                table[a, b] = acc
        return table

    def _distributive(self) -> bool:
        for a, b, c in itertools.product(range(self.n), repeat=3):
            if self.meet[a, self.join[b, c]] != self.join[self.meet[a, b], self.meet[a, c]]:
                return False
        return True

    # -- basic queries ---------------------------------------------------------

    def check_element(self, x: int) -> int:
        if not 0 <= int(x) < self.n:
            raise ElementOutOfRange(f"element {x} not in 0..{self.n - 1}")
        return int(x)

    def leq_(self, a: int, b: int) -> bool:
        return bool(self.leq[self.check_element(a), self.check_element(b)])

    def label(self, x: int) -> str:
        return self.labels[self.check_element(x)]

    def __eq__(self, other):
        return (
            isinstance(other, FiniteLattice)
            and self.n == other.n
            and np.array_equal(self.leq, other.leq)
        )

    def __hash__(self):
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, labels={self.labels})"


# -- constructors ---------------------------------------------------------------


def build_lattice(
    covers, num_elements: int | None = None, labels: tuple[str, ...] | None = None
) -> FiniteLattice:
    """Build a lattice from a cover relation (list of (lower, upper) pairs).

    The element count is inferred from the largest id unless given.  Raises
    CyclicCovers if the covers loop, NotALattice if some pair of elements has
    no unique join or meet.
    """
    covers = [(int(a), int(b)) for a, b in covers]
    if num_elements is None:
        num_elements = max((max(a, b) for a, b in covers), default=-1) + 1
    if num_elements <= 0:
        raise NotALattice("empty carrier")
    for a, b in covers:
        if not (0 <= a < num_elements and 0 <= b < num_elements):
            raise ElementOutOfRange(f"cover ({a},{b}) outside 0..{num_elements - 1}")
        if a == b:
            raise CyclicCovers(f"cover ({a},{b}) is a self-loop")

    # reflexive-transitive closure, with cycle detection
    leq = np.eye(num_elements, dtype=bool)
    for a, b in covers:
        leq[a, b] = True
    for _ in range(num_elements):
        new = leq | (leq.astype(int) @ leq.astype(int) > 0)
        if np.array_equal(new, leq):
            break
        leq = new
    if ((leq & leq.T) & ~np.eye(num_elements, dtype=bool)).any():
        raise CyclicCovers("cover relation contains a cycle")
    return FiniteLattice(leq, labels)


def chain(n: int) -> FiniteLattice:
    """The n-element chain 0 < 1 < ... < n-1."""
    if n < 1:
        raise InvalidArity("chain needs at least one element")
    if n == 1:
        return FiniteLattice(np.ones((1, 1), dtype=bool), ("0",))
    return build_lattice([(i, i + 1) for i in range(n - 1)], n)


def product_of_chains(sizes) -> FiniteLattice:
    """Product lattice of chains; ids are mixed-radix tuples, most significant first."""
    sizes = [int(s) for s in sizes]
    if not sizes or any(s < 1 for s in sizes):
        raise InvalidArity("need positive chain sizes")
    shapes = list(itertools.product(*(range(s) for s in sizes)))
    n = len(shapes)
    leq = np.zeros((n, n), dtype=bool)
    for i, u in enumerate(shapes):
        for j, v in enumerate(shapes):
            leq[i, j] = all(x <= y for x, y in zip(u, v))
    if len(sizes) == 1:
        labels = tuple(str(u[0]) for u in shapes)
    elif all(s <= 10 for s in sizes):
        labels = tuple("".join(map(str, u)) for u in shapes)
    else:
        labels = tuple(str(u) for u in shapes)
    return FiniteLattice(leq, labels)


def boolean_cube(k: int) -> FiniteLattice:
    """The Boolean algebra 2^k as a product of k two-element chains."""
    if k < 0:
        raise InvalidArity("cube exponent must be nonnegative")
    if k == 0:
        return chain(1)
    return product_of_chains([2] * k)


def diamond() -> FiniteLattice:
    """The 2x2 diamond with atoms labelled a, b (0 < a,b < 1)."""
    return build_lattice([(0, 1), (0, 2), (1, 3), (2, 3)], labels=("0", "a", "b", "1"))


def m3() -> FiniteLattice:
    """The non-distributive diamond M3 (three atoms); diagnostic use only."""
    return build_lattice(
        [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
        labels=("0", "a", "b", "c", "1"),
    )


# -- term functions ----------------------------------------------------------


def term_switch(lat: FiniteLattice, l1: int, l2: int, l3: int, l4: int) -> int:
    """Four-argument switch: l3 when l1 = l2, else l4."""
    l1, l2, l3, l4 = (lat.check_element(x) for x in (l1, l2, l3, l4))
    return l3 if l1 == l2 else l4


def t_op(lat: FiniteLattice, level: int, x: int) -> int:
    """Truth-level test: top when x equals `level`, bottom otherwise."""
    level, x = lat.check_element(level), lat.check_element(x)
    return lat.top if x == level else lat.bottom


def u_op(lat: FiniteLattice, level: int, x: int) -> int:
    """Truth-threshold test: top when x >= `level`, bottom otherwise."""
    level, x = lat.check_element(level), lat.check_element(x)
    return lat.top if lat.leq[level, x] else lat.bottom


# -- subalgebras ----------------------------------------------------------------


@dataclass(frozen=True)
class SubalgebraFamily:
    """All subalgebras of a lattice-with-T-operations, canonically ordered.

    Members are sorted by (size, elements); the full carrier is always last.
    The family is closed under pairwise intersection.
    """

    parent: FiniteLattice
    members: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.members)

    def index_of(self, member) -> int:
        return self.members.index(tuple(sorted(int(x) for x in member)))

    @property
    def full_index(self) -> int:
        return len(self.members) - 1

    def member_masks(self) -> tuple[int, ...]:
        return tuple(sum(1 << x for x in m) for m in self.members)


def _is_closed(lat: FiniteLattice, subset: frozenset[int]) -> bool:
    elems = sorted(subset)
    for a in elems:
        for b in elems:
            if lat.meet[a, b] not in subset or lat.join[a, b] not in subset:
                return False
            if lat.implies[a, b] not in subset:
                return False
    # T-closure is implied by {bottom, top} membership, but checked explicitly
    for level in range(lat.n):
        for a in elems:
            if t_op(lat, level, a) not in subset:
                return False
    return True


def _close(lat: FiniteLattice, seed: frozenset[int]) -> frozenset[int]:
    current = set(seed) | {lat.bottom, lat.top}
    while True:
        new = set()
        elems = sorted(current)
        for a in elems:
            for b in elems:
                new.update((int(lat.meet[a, b]), int(lat.join[a, b]), int(lat.implies[a, b])))
        if new <= current:
            return frozenset(current)
        current |= new


def enumerate_subalgebras(lat: FiniteLattice) -> SubalgebraFamily:
    """All subsets containing {0,1} closed under meet, join, implies and every T level.

    Plain subset scan up to 12 elements; incremental closure fixpoint above.
    """
    base = {lat.bottom, lat.top}
    rest = [x for x in range(lat.n) if x not in base]
    found: set[frozenset[int]] = set()
    if lat.n <= 12:
        for r in range(len(rest) + 1):
            for extra in itertools.combinations(rest, r):
                subset = frozenset(base | set(extra))
                if _is_closed(lat, subset):
                    found.add(subset)
    else:
        frontier = {_close(lat, frozenset(base))}
        found |= frontier
        while frontier:
            nxt = set()
            for sub in frontier:
                for x in range(lat.n):
                    if x not in sub:
                        grown = _close(lat, sub | {x})
                        if grown not in found:
                            nxt.add(grown)
            found |= nxt
            frontier = nxt
    members = tuple(sorted((tuple(sorted(m)) for m in found), key=lambda m: (len(m), m)))
    return SubalgebraFamily(lat, members)


@functools.lru_cache(maxsize=None)
def subalgebra_family(lat: FiniteLattice) -> SubalgebraFamily:
    """Cached subalgebra enumeration (lattices hash by their order tables)."""
    return enumerate_subalgebras(lat)


# -- law checking ----------------------------------------------------------------


def check_lattice_laws(lat: FiniteLattice) -> Report:
    """Per-law pass/fail report with the first counterexample for each failure."""
    rep = Report(title=f"lattice laws on {lat.n} elements")
    n, leq, join, meet, imp = lat.n, lat.leq, lat.join, lat.meet, lat.implies
    lab = lat.labels

    rep.add("reflexive", leq.diagonal().all())
    anti = ~((leq & leq.T) & ~np.eye(n, dtype=bool)).any()
    rep.add("antisymmetric", anti)
    trans_bad = ((leq.astype(int) @ leq.astype(int) > 0) & ~leq)
    rep.add("transitive", not trans_bad.any())
    rep.add(
        "bounds",
        bool(leq[lat.bottom].all() and leq[:, lat.top].all()),
        f"bottom={lab[lat.bottom]},top={lab[lat.top]}",
    )

    def first_pair_failure(pred):
        for a in range(n):
            for b in range(n):
                if not pred(a, b):
                    return f"({lab[a]},{lab[b]})"
        return None

    w = first_pair_failure(
        lambda a, b: leq[a, join[a, b]]
        and leq[b, join[a, b]]
        and all(leq[join[a, b], u] for u in range(n) if leq[a, u] and leq[b, u])
    )
    rep.add("join_is_lub", w is None, w or "")
    w = first_pair_failure(
        lambda a, b: leq[meet[a, b], a]
        and leq[meet[a, b], b]
        and all(leq[u, meet[a, b]] for u in range(n) if leq[u, a] and leq[u, b])
    )
    rep.add("meet_is_glb", w is None, w or "")

    w = next((f"({lab[a]})" for a in range(n) if join[a, a] != a or meet[a, a] != a), None)
    rep.add("idempotent", w is None, w or "")
    w = first_pair_failure(lambda a, b: join[a, b] == join[b, a] and meet[a, b] == meet[b, a])
    rep.add("commutative", w is None, w or "")

    def first_triple_failure(pred):
        for a, b, c in itertools.product(range(n), repeat=3):
            if not pred(a, b, c):
                return f"({lab[a]},{lab[b]},{lab[c]})"
        return None

    w = first_triple_failure(
        lambda a, b, c: join[a, join[b, c]] == join[join[a, b], c]
        and meet[a, meet[b, c]] == meet[meet[a, b], c]
    )
    rep.add("associative", w is None, w or "")
    w = first_pair_failure(lambda a, b: join[a, meet[a, b]] == a and meet[a, join[a, b]] == a)
    rep.add("absorption", w is None, w or "")
    w = first_triple_failure(
        lambda a, b, c: meet[a, join[b, c]] == join[meet[a, b], meet[a, c]]
    )
    rep.add("distributive", w is None, w or "")
    w = first_triple_failure(lambda a, b, x: bool(leq[meet[a, x], b]) == bool(leq[x, imp[a, b]]))
    rep.add("residuation", w is None, w or "")
    return rep


# -- Lukasiewicz operation tables -------------------------------------------------


@dataclass(frozen=True)
class LukasiewiczTables:
    """n-valued operation tables over {0, 1/(n-1), ..., 1}.

    Element k stands for the rational k/(n-1); rationals are never stored as
    floats, only the ordinal k and the pair (k, n-1).  Tables follow
        p v q = max(p,q)            p /\\ q = min(p,q)
        p * q = max(0, p+q-1)       p (+) q = min(1, p+q)
        p -> q = min(1, 1-p+q)      ~p = 1-p
    """

    count: int
    values: tuple[tuple[int, int], ...]  # (numerator, denominator) per element
    join: np.ndarray
    meet: np.ndarray
    strong_conj: np.ndarray
    strong_disj: np.ndarray
    implies: np.ndarray
    complement: np.ndarray


def lukasiewicz_tables(n: int) -> LukasiewiczTables:
    """Generate the six n-valued Lukasiewicz operation tables (n >= 2)."""
    if n < 2:
        raise InvalidArity("need at least the two classical truth values")
    d = n - 1
    p = np.arange(n, dtype=TABLE_DTYPE).reshape(-1, 1)
    q = np.arange(n, dtype=TABLE_DTYPE).reshape(1, -1)
    return LukasiewiczTables(
        count=n,
        values=tuple((k, d) for k in range(n)),
        join=np.maximum(p, q).astype(TABLE_DTYPE),
        meet=np.minimum(p, q).astype(TABLE_DTYPE),
        strong_conj=np.maximum(0, p + q - d).astype(TABLE_DTYPE),
        strong_disj=np.minimum(d, p + q).astype(TABLE_DTYPE),
        implies=np.minimum(d, d - p + q).astype(TABLE_DTYPE),
        complement=(d - np.arange(n, dtype=TABLE_DTYPE)),
    )
