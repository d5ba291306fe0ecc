"""Truth-level algebras over a finite Heyting truth lattice L.

An algebra here is a Heyting-algebra carrier enriched with one unary
truth-level operation per element of L (each T asks "does this element carry
truth value l?") and, optionally, a meet-preserving modal operation `box`.
Everything is a precomputed table; axiom checking and homomorphism
enumeration are exhaustive and exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .config import default_caps
from .errors import (
    ArityMismatch,
    ElementOutOfRange,
    MissingBox,
    NotDistributive,
    SizeOverflow,
    TruthLatticeMismatch,
)
from .lattice import TABLE_DTYPE, FiniteLattice
from .report import Report


def _t_table(lat: FiniteLattice) -> np.ndarray:
    """Level-test table of L itself: entry [l, x] is top iff x == l."""
    eye = np.eye(lat.n, dtype=bool)
    return np.where(eye, lat.top, lat.bottom).astype(TABLE_DTYPE)


def _u_table(lat: FiniteLattice) -> np.ndarray:
    """Threshold table of L itself: entry [l, x] is top iff x >= l."""
    return np.where(lat.leq, lat.top, lat.bottom).astype(TABLE_DTYPE)


class MVAlgebra:
    """Finite algebra over a truth lattice: Heyting tables + T levels (+ box)."""

    def __init__(
        self,
        lattice: FiniteLattice,
        meet: np.ndarray,
        join: np.ndarray,
        implies: np.ndarray,
        t: np.ndarray,
        bottom: int,
        top: int,
        box: np.ndarray | None = None,
        labels: tuple[str, ...] | None = None,
    ):
        if not lattice.is_distributive:
            raise NotDistributive("truth lattice must be distributive")
        self.lattice = lattice
        self.meet = np.ascontiguousarray(meet, dtype=TABLE_DTYPE)
        self.join = np.ascontiguousarray(join, dtype=TABLE_DTYPE)
        self.implies = np.ascontiguousarray(implies, dtype=TABLE_DTYPE)
        self.t = np.ascontiguousarray(t, dtype=TABLE_DTYPE)
        n = self.meet.shape[0]
        self.n = n
        for name, tab in (("meet", self.meet), ("join", self.join), ("implies", self.implies)):
            if tab.shape != (n, n):
                raise ArityMismatch(f"{name} table must be {n}x{n}")
            if tab.min() < 0 or tab.max() >= n:
                raise ElementOutOfRange(f"{name} table leaves the carrier")
        if self.t.shape != (lattice.n, n):
            raise TruthLatticeMismatch(
                f"need one T level per element of L: expected {lattice.n}x{n}, got {self.t.shape}"
            )
        if self.t.min() < 0 or self.t.max() >= n:
            raise ElementOutOfRange("T table leaves the carrier")
        self.bottom = int(bottom)
        self.top = int(top)
        if not (0 <= self.bottom < n and 0 <= self.top < n):
            raise ElementOutOfRange("bounds outside the carrier")
        if box is not None:
            box = np.ascontiguousarray(box, dtype=TABLE_DTYPE)
            if box.shape != (n,):
                raise ArityMismatch(f"box table must have length {n}")
            if box.min() < 0 or box.max() >= n:
                raise ElementOutOfRange("box table leaves the carrier")
        self.box = box
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise ArityMismatch(f"{n} elements but {len(self.labels)} labels")
        # optional pointwise structure (set by powerset constructors)
        self.n_points: int | None = None
        self.digits: np.ndarray | None = None
        self._derivation = None
        for tab in (self.meet, self.join, self.implies, self.t):
            tab.setflags(write=False)
        if self.box is not None:
            self.box.setflags(write=False)

    # -- small helpers -------------------------------------------------------

    @property
    def has_box(self) -> bool:
        return self.box is not None

    def check_element(self, x: int) -> int:
        if not 0 <= int(x) < self.n:
            raise ElementOutOfRange(f"element {x} not in 0..{self.n - 1}")
        return int(x)

    def leq_elems(self) -> np.ndarray:
        """Carrier order derived from the meet table: a <= b iff a /\\ b = a."""
        return self.meet == np.arange(self.n, dtype=TABLE_DTYPE).reshape(-1, 1)

    def same_tables(self, other: "MVAlgebra") -> bool:
        """Exact structural equality (used by round-trip recovery checks)."""
        if self.lattice != other.lattice or self.n != other.n:
            return False
        if self.has_box != other.has_box:
            return False
        ok = (
            np.array_equal(self.meet, other.meet)
            and np.array_equal(self.join, other.join)
            and np.array_equal(self.implies, other.implies)
            and np.array_equal(self.t, other.t)
            and self.bottom == other.bottom
            and self.top == other.top
        )
        if ok and self.has_box:
            ok = np.array_equal(self.box, other.box)
        return ok

    def with_box(self, box) -> "MVAlgebra":
        out = MVAlgebra(
            self.lattice, self.meet, self.join, self.implies, self.t,
            self.bottom, self.top, box=box, labels=self.labels,
        )
        out.n_points, out.digits = self.n_points, self.digits
        return out

    def __repr__(self):
        boxed = "+box" if self.has_box else ""
        return f"MVAlgebra(n={self.n}, L={self.lattice.n}{boxed})"


# -- constructors -------------------------------------------------------------


def self_algebra(lat: FiniteLattice, box=None) -> MVAlgebra:
    """L viewed as an algebra over itself (T levels are the level tests)."""
    return MVAlgebra(
        lat, lat.meet, lat.join, lat.implies, _t_table(lat),
        lat.bottom, lat.top, box=box, labels=lat.labels,
    )


def _digit_matrix(base: int, width: int) -> np.ndarray:
    """All base^width digit rows in lexicographic order, most significant first."""
    size = base**width
    ids = np.arange(size)
    cols = [(ids // base ** (width - 1 - p)) % base for p in range(width)]
    if width == 0:
        return np.zeros((1, 0), dtype=TABLE_DTYPE)
    return np.stack(cols, axis=1).astype(TABLE_DTYPE)


def powerset_algebra(
    lat: FiniteLattice, n_points: int, max_carrier: int | None = None
) -> MVAlgebra:
    """The algebra of all L-valued functions on a set of n_points worlds.

    All operations are pointwise; carrier ids enumerate value tuples in
    lexicographic order.  n_points = 0 is allowed and yields the one-element
    algebra (bottom = top).
    """
    if n_points < 0:
        raise ArityMismatch("point count must be nonnegative")
    if max_carrier is None:
        max_carrier = default_caps().max_carrier
    size = lat.n**n_points
    if size > max_carrier:
        raise SizeOverflow(f"{lat.n}^{n_points} = {size} elements exceeds cap {max_carrier}")
    digits = _digit_matrix(lat.n, n_points)
    places = (lat.n ** np.arange(n_points - 1, -1, -1)).astype(np.int64) if n_points else None

    def encode(dmat: np.ndarray) -> np.ndarray:
        if n_points == 0:
            return np.zeros(dmat.shape[:-1], dtype=TABLE_DTYPE)
        return (dmat.astype(np.int64) @ places).astype(TABLE_DTYPE)

    meet = np.zeros((size, size), dtype=TABLE_DTYPE)
    join = np.zeros((size, size), dtype=TABLE_DTYPE)
    imp = np.zeros((size, size), dtype=TABLE_DTYPE)
    block = max(1, min(size, 1 << 22 // max(1, size)))
    for start in range(0, size, block):
        rows = digits[start : start + block]  # (b, P)
        pair_m = lat.meet[rows[:, None, :], digits[None, :, :]]
        pair_j = lat.join[rows[:, None, :], digits[None, :, :]]
        pair_i = lat.implies[rows[:, None, :], digits[None, :, :]]
        meet[start : start + block] = encode(pair_m)
        join[start : start + block] = encode(pair_j)
        imp[start : start + block] = encode(pair_i)

    t_l = _t_table(lat)
    t = np.zeros((lat.n, size), dtype=TABLE_DTYPE)
    for level in range(lat.n):
        t[level] = encode(t_l[level][digits])

    if all(len(s) == 1 for s in lat.labels):
        labels = tuple("".join(lat.labels[d] for d in row) for row in digits)
    else:
        labels = tuple(",".join(lat.labels[d] for d in row) for row in digits)
    if n_points == 0:
        labels = ("()",)
    out = MVAlgebra(lat, meet, join, imp, t, 0, size - 1, labels=labels)
    out.n_points = n_points
    out.digits = digits
    return out


def box_from_frame(
    lat: FiniteLattice, n_points: int, edges, max_carrier: int | None = None
) -> MVAlgebra:
    """Powerset algebra with the modal operation induced by a frame relation.

    (box f)(x) is the meet of f over the successors of x; the empty meet is
    the top truth value (dead-end worlds validate every box).
    """
    alg = powerset_algebra(lat, n_points, max_carrier=max_carrier)
    successors = [[] for _ in range(n_points)]
    for a, b in edges:
        if not (0 <= a < n_points and 0 <= b < n_points):
            raise ElementOutOfRange(f"edge ({a},{b}) outside 0..{n_points - 1}")
        if b not in successors[a]:
            successors[a].append(b)
    digits = alg.digits
    boxed = np.full((alg.n, n_points), lat.top, dtype=TABLE_DTYPE)
    for x in range(n_points):
        for y in sorted(successors[x]):
            boxed[:, x] = lat.meet[boxed[:, x], digits[:, y]]
    if n_points == 0:
        box = np.zeros(1, dtype=TABLE_DTYPE)
    else:
        places = (lat.n ** np.arange(n_points - 1, -1, -1)).astype(np.int64)
        box = (boxed.astype(np.int64) @ places).astype(TABLE_DTYPE)
    return alg.with_box(box)


# -- derived threshold operations -----------------------------------------------


def derived_u(alg: MVAlgebra, level: int, a: int) -> int:
    """Threshold operation: join of the T tests at levels >= `level`."""
    lat = alg.lattice
    lat.check_element(level)
    a = alg.check_element(a)
    acc = alg.bottom
    for up in range(lat.n):
        if lat.leq[level, up]:
            acc = int(alg.join[acc, alg.t[up, a]])
    return acc


def derived_u_table(alg: MVAlgebra) -> np.ndarray:
    lat = alg.lattice
    out = np.zeros((lat.n, alg.n), dtype=TABLE_DTYPE)
    for level in range(lat.n):
        acc = np.full(alg.n, alg.bottom, dtype=TABLE_DTYPE)
        for up in range(lat.n):
            if lat.leq[level, up]:
                acc = alg.join[acc, alg.t[up]]
        out[level] = acc
    return out


# -- axiom checking ---------------------------------------------------------------


def _first_index(bad: np.ndarray) -> tuple:
    return tuple(int(v) for v in np.argwhere(bad)[0])


def check_lvl_axioms(alg: MVAlgebra) -> Report:
    """Verify every axiom group of a truth-level algebra; exact, exhaustive."""
    lat = alg.lattice
    if alg.t.shape[0] != lat.n:
        raise TruthLatticeMismatch("T levels disagree with the truth lattice")
    rep = Report(title=f"truth-level algebra axioms on {alg.n} elements")
    n = alg.n
    meet, join, imp, t = alg.meet, alg.join, alg.implies, alg.t
    leq = alg.leq_elems()
    lab = alg.labels
    llab = lat.labels

    # Heyting-algebra laws on the carrier
    witness = None
    if not (np.array_equal(meet, meet.T) and np.array_equal(join, join.T)):
        witness = "commutativity " + str(_first_index(meet != meet.T))
    if witness is None:
        idem = np.arange(n, dtype=TABLE_DTYPE)
        if not (np.array_equal(meet.diagonal(), idem) and np.array_equal(join.diagonal(), idem)):
            witness = "idempotence"
    if witness is None and not (leq[alg.bottom].all() and leq[:, alg.top].all()):
        witness = "bounds"
    for a in range(n):
        if witness:
            break
        if not np.array_equal(meet[meet[a]], meet[a][meet]):
            witness = f"associativity of meet at a={lab[a]}"
        elif not np.array_equal(join[join[a]], join[a][join]):
            witness = f"associativity of join at a={lab[a]}"
        elif not np.array_equal(join[a][meet[a]], np.full(n, a, dtype=TABLE_DTYPE)):
            witness = f"absorption at a={lab[a]}"
        elif not np.array_equal(meet[a][join[a]], np.full(n, a, dtype=TABLE_DTYPE)):
            witness = f"absorption at a={lab[a]}"
    # distributivity and residuation, blockwise
    for a in range(n):
        if witness:
            break
        lhs = meet[a][join]                       # a /\ (b \/ c)
        rhs = join[meet[a][:, None], meet[a][None, :]]  # (a/\b) \/ (a/\c)
        if not np.array_equal(lhs, rhs):
            b, c = _first_index(lhs != rhs)
            witness = f"distributivity at ({lab[a]},{lab[b]},{lab[c]})"
            break
        res_l = leq[meet[a]]           # [x, b] : a /\ x <= b
        res_r = leq[:, imp[a]]         # [x, b] : x <= a -> b
        if not np.array_equal(res_l, res_r):
            x, b = _first_index(res_l != res_r)
            witness = f"residuation at (a={lab[a]},x={lab[x]},b={lab[b]})"
            break
    rep.add("heyting", witness is None, witness or "")

    # T against the binary operations, and nested T reflection
    witness = None
    for l1 in range(lat.n):
        if witness:
            break
        for l2 in range(lat.n):
            lhs = meet[t[l1][:, None], t[l2][None, :]]
            rhs = meet[
                meet[t[lat.implies[l1, l2]][imp], t[lat.meet[l1, l2]][meet]],
                t[lat.join[l1, l2]][join],
            ]
            ok = leq[lhs, rhs]
            if not ok.all():
                a, b = _first_index(~ok)
                witness = f"(l1={llab[l1]},l2={llab[l2]},a={lab[a]},b={lab[b]})"
                break
            tl1_of_l2 = lat.top if l2 == l1 else lat.bottom
            ok2 = leq[t[l2], t[tl1_of_l2][t[l1]]]
            if not ok2.all():
                a = int(np.argwhere(~ok2)[0][0])
                witness = f"nested (l1={llab[l1]},l2={llab[l2]},a={lab[a]})"
                break
    rep.add("t_of_operations", witness is None, witness or "")

    # values at the constants
    witness = None
    for level in range(lat.n):
        want0 = alg.top if level == lat.bottom else alg.bottom
        want1 = alg.top if level == lat.top else alg.bottom
        if t[level, alg.bottom] != want0:
            witness = f"T at bottom, level {llab[level]}"
            break
        if t[level, alg.top] != want1:
            witness = f"T at top, level {llab[level]}"
            break
    rep.add("t_at_bounds", witness is None, witness or "")

    # partition behaviour: the levels exhaust and exclude
    witness = None
    acc = np.full(n, alg.bottom, dtype=TABLE_DTYPE)
    for level in range(lat.n):
        acc = join[acc, t[level]]
    if not (acc == alg.top).all():
        witness = f"join over levels at a={lab[int(np.argwhere(acc != alg.top)[0][0])]}"
    if witness is None:
        for level in range(lat.n):
            em = join[t[level], imp[t[level], alg.bottom]]
            if not (em == alg.top).all():
                witness = f"complement at level {llab[level]}"
                break
    if witness is None:
        for l1 in range(lat.n):
            for l2 in range(lat.n):
                if l1 == l2:
                    continue
                bad = meet[t[l1], t[l2]] != alg.bottom
                if bad.any():
                    a = int(np.argwhere(bad)[0][0])
                    witness = f"overlap (l1={llab[l1]},l2={llab[l2]},a={lab[a]})"
                    break
            if witness:
                break
    rep.add("t_partition", witness is None, witness or "")

    # T of T collapses to the extremal levels
    witness = None
    for level in range(lat.n):
        tl = t[level]
        if not np.array_equal(t[lat.top][tl], tl):
            witness = f"top-of-T at level {llab[level]}"
            break
        if not np.array_equal(t[lat.bottom][tl], imp[tl, alg.bottom]):
            witness = f"bottom-of-T at level {llab[level]}"
            break
        for l2 in range(lat.n):
            if l2 in (lat.bottom, lat.top):
                continue
            if not (t[l2][tl] == alg.bottom).all():
                witness = f"middle-of-T (l2={llab[l2]}, level {llab[level]})"
                break
        if witness:
            break
    rep.add("t_nesting", witness is None, witness or "")

    # the top level is below the identity and preserves meets
    witness = None
    t1 = t[lat.top]
    ok = leq[t1, np.arange(n)]
    if not ok.all():
        witness = f"T-top above a={lab[int(np.argwhere(~ok)[0][0])]}"
    elif not np.array_equal(t1[meet], meet[t1[:, None], t1[None, :]]):
        a, b = _first_index(t1[meet] != meet[t1[:, None], t1[None, :]])
        witness = f"T-top meet at ({lab[a]},{lab[b]})"
    rep.add("t_top_level", witness is None, witness or "")

    # joint level agreement separates elements
    iff = lambda x, y: meet[imp[x, y], imp[y, x]]  # noqa: E731
    acc = np.full((n, n), alg.top, dtype=TABLE_DTYPE)
    for level in range(lat.n):
        tl = t[level]
        acc = meet[acc, iff(tl[:, None], tl[None, :])]
    target = iff(np.arange(n)[:, None], np.arange(n)[None, :])
    ok = leq[acc, target]
    witness = None if ok.all() else f"({lab[_first_index(~ok)[0]]},{lab[_first_index(~ok)[1]]})"
    rep.add("t_separation", witness is None, witness or "")
    return rep


def check_lml_axioms(alg: MVAlgebra) -> Report:
    """Verify the modal axioms: box preserves meets and commutes with thresholds."""
    if not alg.has_box:
        raise MissingBox("algebra has no modal operation")
    rep = Report(title="modal axioms")
    box, meet, lab = alg.box, alg.meet, alg.labels
    lhs = box[meet]
    rhs = meet[box[:, None], box[None, :]]
    witness = None
    if not np.array_equal(lhs, rhs):
        a, b = _first_index(lhs != rhs)
        witness = f"({lab[a]},{lab[b]})"
    rep.add("box_meet_preserving", witness is None, witness or "")

    u = derived_u_table(alg)
    witness = None
    for level in range(alg.lattice.n):
        lhs = box[u[level]]
        rhs = u[level][box]
        if not np.array_equal(lhs, rhs):
            a = int(np.argwhere(lhs != rhs)[0][0])
            witness = f"(level={alg.lattice.labels[level]},a={lab[a]})"
            break
    rep.add("box_threshold_commute", witness is None, witness or "")
    return rep


# -- homomorphisms -----------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraHom:
    source: MVAlgebra
    target: MVAlgebra
    table: tuple[int, ...]

    def check(self):
        return is_homomorphism(np.array(self.table, dtype=TABLE_DTYPE), self.source, self.target)


def is_homomorphism(h, source: MVAlgebra, target: MVAlgebra):
    """True iff h preserves all operations (box included when both sides have it).

    Returns (ok, first_violation) where the violation names the operation and
    arguments that break.
    """
    h = np.asarray(h, dtype=TABLE_DTYPE)
    if h.shape != (source.n,):
        raise ArityMismatch(f"map length {h.shape} does not match carrier {source.n}")
    if h.size and (h.min() < 0 or h.max() >= target.n):
        raise ElementOutOfRange("map leaves the target carrier")
    if source.lattice != target.lattice:
        raise TruthLatticeMismatch("source and target must share the truth lattice")
    if h[source.bottom] != target.bottom:
        return False, f"bottom -> {target.labels[h[source.bottom]]}"
    if h[source.top] != target.top:
        return False, f"top -> {target.labels[h[source.top]]}"
    for name, sa, ta in (
        ("meet", source.meet, target.meet),
        ("join", source.join, target.join),
        ("implies", source.implies, target.implies),
    ):
        lhs = h[sa]
        rhs = ta[h[:, None], h[None, :]]
        if not np.array_equal(lhs, rhs):
            a, b = _first_index(lhs != rhs)
            return False, f"{name}({source.labels[a]},{source.labels[b]})"
    for level in range(source.lattice.n):
        lhs = h[source.t[level]]
        rhs = target.t[level][h]
        if not np.array_equal(lhs, rhs):
            a = int(np.argwhere(lhs != rhs)[0][0])
            return False, f"T[{source.lattice.labels[level]}]({source.labels[a]})"
    if source.has_box and target.has_box:
        lhs = h[source.box]
        rhs = target.box[h]
        if not np.array_equal(lhs, rhs):
            a = int(np.argwhere(lhs != rhs)[0][0])
            return False, f"box({source.labels[a]})"
    return True, None


def _validate_target(lat: FiniteLattice, target) -> np.ndarray:
    if target is None:
        return np.arange(lat.n, dtype=TABLE_DTYPE)
    vals = np.array(sorted({lat.check_element(x) for x in target}), dtype=TABLE_DTYPE)
    sub = set(int(v) for v in vals)
    if lat.bottom not in sub or lat.top not in sub:
        raise TruthLatticeMismatch("target must contain the truth bounds")
    for a in sub:
        for b in sub:
            if (
                int(lat.meet[a, b]) not in sub
                or int(lat.join[a, b]) not in sub
                or int(lat.implies[a, b]) not in sub
            ):
                raise TruthLatticeMismatch("target is not a subalgebra of L")
    return vals


def _derivation(alg: MVAlgebra):
    """Generating sequence for the carrier: each element is a constant, a
    generator, or a single operation applied to earlier elements."""
    if alg._derivation is not None:
        return alg._derivation
    n = alg.n
    how: dict[int, tuple] = {alg.bottom: ("const", alg.bottom)}
    how.setdefault(alg.top, ("const", alg.top))
    order = [alg.bottom] + ([alg.top] if alg.top != alg.bottom else [])
    gens: list[int] = []

    def close():
        changed = True
        while changed:
            changed = False
            cur = np.array(order)
            for name, tab in (("meet", alg.meet), ("join", alg.join), ("imp", alg.implies)):
                sub = tab[np.ix_(cur, cur)]
                for e in sorted(set(int(v) for v in sub.flat) - set(how)):
                    i, j = _first_index(sub == e)
                    how[e] = (name, int(cur[i]), int(cur[j]))
                    order.append(e)
                    changed = True
                if changed:
                    break
            if changed:
                continue
            sub = alg.t[:, cur]
            for e in sorted(set(int(v) for v in sub.flat) - set(how)):
                lv, i = _first_index(sub == e)
                how[e] = ("t", int(lv), int(cur[i]))
                order.append(e)
                changed = True

    close()
    while len(order) < n:
        g = min(x for x in range(n) if x not in how)
        gens.append(g)
        how[g] = ("gen", len(gens) - 1)
        order.append(g)
        close()
    alg._derivation = (order, how, gens)
    return alg._derivation


def enumerate_homs(alg: MVAlgebra, target=None) -> list[np.ndarray]:
    """All structure-preserving maps into the truth lattice (or a subalgebra).

    Backtracking over a generating set with T-preservation pruning; results
    are maps into L (values are L element ids, image inside `target`), sorted
    lexicographically.  Box is never required: these are the truth-level
    algebra homomorphisms used to build dual spaces.
    """
    lat = alg.lattice
    targets = _validate_target(lat, target)
    order, how, gens = _derivation(alg)
    k = len(targets)
    n_cand = k ** len(gens)
    if n_cand == 0:
        return []
    assign = np.array(list(itertools.product(range(k), repeat=len(gens))), dtype=np.int64)
    values = np.zeros((n_cand, alg.n), dtype=TABLE_DTYPE)
    for e in order:
        spec = how[e]
        if spec[0] == "const":
            values[:, e] = lat.bottom if e == alg.bottom else lat.top
        elif spec[0] == "gen":
            values[:, e] = targets[assign[:, spec[1]]]
        elif spec[0] == "meet":
            values[:, e] = lat.meet[values[:, spec[1]], values[:, spec[2]]]
        elif spec[0] == "join":
            values[:, e] = lat.join[values[:, spec[1]], values[:, spec[2]]]
        elif spec[0] == "imp":
            values[:, e] = lat.implies[values[:, spec[1]], values[:, spec[2]]]
        else:  # ("t", level, arg)
            values[:, e] = _t_table(lat)[spec[1], values[:, spec[2]]]

    # cheap pruning first: constants, then level preservation
    mask = (values[:, alg.bottom] == lat.bottom) & (values[:, alg.top] == lat.top)
    t_l = _t_table(lat)
    for level in range(lat.n):
        live = np.flatnonzero(mask)
        if live.size == 0:
            break
        sub = values[live]
        good = (sub[:, alg.t[level]] == t_l[level][sub]).all(axis=1)
        mask[live[~good]] = False

    target_set = set(int(v) for v in targets)
    out = []
    lt = self_algebra(lat)
    for idx in np.flatnonzero(mask):
        h = values[idx]
        if not set(int(v) for v in h) <= target_set:
            continue
        ok, _ = is_homomorphism(h, alg, lt)
        if ok:
            out.append(h.copy())
    out.sort(key=lambda arr: tuple(int(v) for v in arr))
    for h in out:
        h.setflags(write=False)
    return out


def brute_force_homs(
    alg: MVAlgebra, target=None, max_candidates: int | None = None, implementation=None
) -> list[np.ndarray]:
    """Oracle: filter ALL maps carrier -> target through preservation checks.

    Independent of enumerate_homs (no generating set, no pruning); work is
    |target|^|carrier| candidate maps, so cap accordingly.
    """
    lat = alg.lattice
    targets = _validate_target(lat, target)
    found = kernels.hom_filter(
        alg.meet, alg.join, alg.implies, alg.t, alg.bottom, alg.top,
        lat.meet, lat.join, lat.implies, _t_table(lat), lat.bottom, lat.top,
        targets, max_candidates=max_candidates, implementation=implementation,
    )
    out = [found[i].copy() for i in range(found.shape[0])]
    out.sort(key=lambda arr: tuple(int(v) for v in arr))
    for h in out:
        h.setflags(write=False)
    return out
