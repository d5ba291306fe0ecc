"""Modal formula language over a finite truth lattice, with Kripke evaluation.

Concrete syntax (ASCII, whitespace-insensitive):

    formula  :=  or ( '->' formula )?          right-associative
    or       :=  and ( '|' and )*
    and      :=  unary ( '&' unary )*
    unary    :=  '[]' unary | 'T{' k '}' unary | atom
    atom     :=  '0' | '1' | identifier | '(' formula ')'

`T{k}` tests whether a formula carries the k-th truth value (ordinals of the
active lattice); `[]` is the modal operation.  There is no diamond primitive.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    FormulaSyntaxError,
    MissingBox,
    UnboundVariable,
    UnknownTruthConstant,
)
from .lattice import FiniteLattice
from .mvalgebra import MVAlgebra, enumerate_homs
from .report import Report


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const0:
    pass


@dataclass(frozen=True)
class Const1:
    pass


@dataclass(frozen=True)
class And:
    left: object
    right: object


@dataclass(frozen=True)
class Or:
    left: object
    right: object


@dataclass(frozen=True)
class Imp:
    left: object
    right: object


@dataclass(frozen=True)
class T:
    level: int
    sub: object


@dataclass(frozen=True)
class Box:
    sub: object


Formula = Var | Const0 | Const1 | And | Or | Imp | T | Box


# -- parser -------------------------------------------------------------------


class _Parser:
    def __init__(self, text: str, levels: int | None):
        self.text = text
        self.pos = 0
        self.levels = levels

    def error(self, message: str):
        raise FormulaSyntaxError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> bool:
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def formula(self):
        left = self.or_expr()
        if self.take("->"):
            return Imp(left, self.formula())
        return left

    def or_expr(self):
        node = self.and_expr()
        while True:
            self.skip_ws()
            # '|' but not part of '->' lookalikes; simple single-char token
            if self.peek() == "|":
                self.pos += 1
                node = Or(node, self.and_expr())
            else:
                return node

    def and_expr(self):
        node = self.unary()
        while self.peek() == "&":
            self.pos += 1
            node = And(node, self.unary())
        return node

    def unary(self):
        if self.take("[]"):
            return Box(self.unary())
        self.skip_ws()
        if (
            self.pos + 1 < len(self.text)
            and self.text[self.pos] == "T"
            and self.text[self.pos + 1] == "{"
        ):
            self.pos += 2
            self.skip_ws()
            start = self.pos
            while self.pos < len(self.text) and self.text[self.pos].isdigit():
                self.pos += 1
            if start == self.pos:
                self.error("expected a truth-level ordinal after 'T{'")
            level = int(self.text[start : self.pos])
            if not self.take("}"):
                self.error("expected '}' closing the truth level")
            if self.levels is not None and level >= self.levels:
                raise UnknownTruthConstant(
                    f"truth level {level} not in the {self.levels}-element lattice"
                )
            return T(level, self.unary())
        return self.atom()

    def atom(self):
        if self.take("("):
            node = self.formula()
            if not self.take(")"):
                self.error("expected ')'")
            return node
        ch = self.peek()
        if ch == "0":
            self.pos += 1
            return Const0()
        if ch == "1":
            self.pos += 1
            return Const1()
        if ch.isalpha() or ch == "_":
            start = self.pos
            while self.pos < len(self.text) and (
                self.text[self.pos].isalnum() or self.text[self.pos] == "_"
            ):
                self.pos += 1
            return Var(self.text[start : self.pos])
        self.error("expected a formula")


def parse_formula(text: str, levels: int | None = None) -> Formula:
    """Parse formula text; `levels` (|L|) enables truth-level range checking."""
    parser = _Parser(text, levels)
    node = parser.formula()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input")
    return node


_LEVEL_IMP, _LEVEL_OR, _LEVEL_AND, _LEVEL_UNARY = 0, 1, 2, 3


def pretty_print(node: Formula) -> str:
    """Canonical rendering; parse_formula(pretty_print(f)) == f."""

    def render(n, minimum: int) -> str:
        if isinstance(n, Var):
            return n.name
        if isinstance(n, Const0):
            return "0"
        if isinstance(n, Const1):
            return "1"
        if isinstance(n, Box):
            out, mine = "[]" + render(n.sub, _LEVEL_UNARY), _LEVEL_UNARY
        elif isinstance(n, T):
            out, mine = f"T{{{n.level}}}" + render(n.sub, _LEVEL_UNARY), _LEVEL_UNARY
        elif isinstance(n, And):
            out = f"{render(n.left, _LEVEL_AND)} & {render(n.right, _LEVEL_AND + 1)}"
            mine = _LEVEL_AND
        elif isinstance(n, Or):
            out = f"{render(n.left, _LEVEL_OR)} | {render(n.right, _LEVEL_OR + 1)}"
            mine = _LEVEL_OR
        else:
            out = f"{render(n.left, _LEVEL_OR)} -> {render(n.right, _LEVEL_IMP)}"
            mine = _LEVEL_IMP
        return f"({out})" if mine < minimum else out

    return render(node, _LEVEL_IMP)


def formula_variables(node: Formula) -> set[str]:
    if isinstance(node, Var):
        return {node.name}
    if isinstance(node, (Const0, Const1)):
        return set()
    if isinstance(node, (Box, T)):
        return formula_variables(node.sub)
    return formula_variables(node.left) | formula_variables(node.right)


# -- Kripke models -------------------------------------------------------------


@dataclass(frozen=True)
class KripkeModel:
    """A finite frame with an L-valued valuation, total on declared variables."""

    n_worlds: int
    rel: tuple[int, ...]  # successor bitmask per world
    valuation: dict[str, tuple[int, ...]]  # variable -> value per world

    def successors(self, world: int) -> int:
        return self.rel[world]


def evaluate(model: KripkeModel, lat: FiniteLattice, world: int, formula: Formula) -> int:
    """Structural recursion through the lattice tables; the modal clause takes
    the meet over successors (empty meet = top).  Memoized per (world, node)."""
    if not 0 <= world < model.n_worlds:
        raise UnboundVariable(f"world {world} not in 0..{model.n_worlds - 1}")
    memo: dict[tuple[int, int], int] = {}

    def rec(w: int, node) -> int:
        key = (w, id(node))
        got = memo.get(key)
        if got is not None:
            return got
        if isinstance(node, Var):
            try:
                value = model.valuation[node.name][w]
            except KeyError:
                raise UnboundVariable(f"variable {node.name!r} has no valuation") from None
        elif isinstance(node, Const0):
            value = lat.bottom
        elif isinstance(node, Const1):
            value = lat.top
        elif isinstance(node, And):
            value = int(lat.meet[rec(w, node.left), rec(w, node.right)])
        elif isinstance(node, Or):
            value = int(lat.join[rec(w, node.left), rec(w, node.right)])
        elif isinstance(node, Imp):
            value = int(lat.implies[rec(w, node.left), rec(w, node.right)])
        elif isinstance(node, T):
            if node.level >= lat.n:
                raise UnknownTruthConstant(
                    f"truth level {node.level} not in the {lat.n}-element lattice"
                )
            value = lat.top if rec(w, node.sub) == node.level else lat.bottom
        else:  # Box
            value = lat.top
            succ = model.rel[w]
            v = 0
            while succ:
                if succ & 1:
                    value = int(lat.meet[value, rec(v, node.sub)])
                succ >>= 1
                v += 1
        memo[key] = value
        return value

    return rec(world, formula)


# -- canonical models --------------------------------------------------------------


@dataclass(frozen=True)
class CanonicalModel:
    """Worlds are the truth-lattice homs of a modal algebra; the relation is
    the induced successor relation; the valuation evaluates elements at homs
    (element i is addressed as variable 'a<i>')."""

    model: KripkeModel
    homs: tuple[tuple[int, ...], ...]
    d: np.ndarray  # [world, element] = hom value


def canonical_model(alg: MVAlgebra) -> CanonicalModel:
    from .duality import br_relation  # local import keeps module layering simple

    if not alg.has_box:
        raise MissingBox("canonical models need a modal operation")
    homs = enumerate_homs(alg)
    rel = br_relation(alg, homs)
    d = np.array([list(h) for h in homs], dtype=np.int64).reshape(len(homs), alg.n)
    valuation = {
        f"a{i}": tuple(int(d[w, i]) for w in range(len(homs))) for i in range(alg.n)
    }
    model = KripkeModel(len(homs), rel, valuation)
    return CanonicalModel(model, tuple(tuple(int(v) for v in h) for h in homs), d)


def check_truth_lemma(alg: MVAlgebra) -> Report:
    """Each hom's value at a boxed element equals the meet of its successors'
    values at the element; exact equality, every hom, every element."""
    rep = Report(title="canonical-model truth lemma")
    cm = canonical_model(alg)
    lat = alg.lattice
    witness = None
    for w in range(cm.model.n_worlds):
        for a in range(alg.n):
            expect = int(cm.d[w, alg.box[a]])
            got = lat.top
            succ = cm.model.rel[w]
            v = 0
            while succ:
                if succ & 1:
                    got = int(lat.meet[got, cm.d[v, a]])
                succ >>= 1
                v += 1
            if got != expect:
                witness = f"(world {w}, element {alg.labels[a]})"
                break
        if witness:
            break
    rep.add("truth_lemma", witness is None, witness or "")
    return rep
