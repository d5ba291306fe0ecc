"""Plain-text input formats for lattices, algebras, spaces, and models.

Blank lines and `#` comments are ignored everywhere.  Formats:

lattice      elements: <n>
             covers:
             <i> < <j>          one cover pair per line

algebra      powerset L=<latticefile> P=<n>
             R:                  optional frame, one `<i> <j>` edge per line
   or        tables L=<latticefile>
             carrier: <m>
             bottom: <i>
             top: <j>
             meet: / join: / implies:      m rows of m ids (row-major)
             t:                  |L| rows of m ids
             box:                optional single row of m ids

space        points: <n>
             tau1: / tau2:       one `{i,j,...}` subbasis set per line
             R:                  optional edge list
             alpha:              optional `<subalgebra index> -> {points}` lines

model        worlds: <n>
             R:                  edge list
             val:
             <var> @ <world> = <value ordinal>
"""

from __future__ import annotations

import os
import re

import numpy as np

from .bitopology import BitopSpace, PBSObject, PRBSObject, Topology, mask_of, set_str
from .errors import ParseError
from .lattice import FiniteLattice, build_lattice, subalgebra_family
from .logic import KripkeModel
from .mvalgebra import MVAlgebra, box_from_frame, powerset_algebra


def _lines(text: str):
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield i, line


def _expect_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", lineno) from None


# -- lattices ----------------------------------------------------------------


def parse_lattice_text(text: str) -> FiniteLattice:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty lattice file")
    lineno, head = lines[0]
    m = re.fullmatch(r"elements:\s*(\d+)", head)
    if not m:
        raise ParseError("lattice file must start with 'elements: n'", lineno)
    n = int(m.group(1))
    covers = []
    if len(lines) > 1:
        lineno, head = lines[1]
        if head != "covers:":
            raise ParseError("expected 'covers:'", lineno)
        for lineno, line in lines[2:]:
            m = re.fullmatch(r"(\d+)\s*<\s*(\d+)", line)
            if not m:
                raise ParseError(f"expected 'i < j', got {line!r}", lineno)
            covers.append((int(m.group(1)), int(m.group(2))))
    return build_lattice(covers, num_elements=n)


def serialize_lattice(lat: FiniteLattice) -> str:
    out = [f"elements: {lat.n}", "covers:"]
    for a in range(lat.n):
        for b in range(lat.n):
            if a != b and lat.leq[a, b]:
                between = any(
                    lat.leq[a, c] and lat.leq[c, b] for c in range(lat.n) if c not in (a, b)
                )
                if not between:
                    out.append(f"{a} < {b}")
    return "\n".join(out) + "\n"


def load_lattice(path: str) -> FiniteLattice:
    with open(path, encoding="utf-8") as fh:
        return parse_lattice_text(fh.read())


# -- edge lists -----------------------------------------------------------------


def _parse_edges(lines) -> list[tuple[int, int]]:
    edges = []
    for lineno, line in lines:
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected an edge 'i j', got {line!r}", lineno)
        edges.append((_expect_int(parts[0], lineno), _expect_int(parts[1], lineno)))
    return edges


# -- algebras ----------------------------------------------------------------------


def parse_algebra_text(text: str, base_dir: str = ".") -> MVAlgebra:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty algebra file")
    lineno, head = lines[0]
    m = re.fullmatch(r"powerset\s+L=(\S+)\s+P=(\d+)", head)
    if m:
        lat = load_lattice(os.path.join(base_dir, m.group(1)))
        n_points = int(m.group(2))
        if len(lines) > 1:
            lineno, marker = lines[1]
            if marker != "R:":
                raise ParseError("expected 'R:' after the powerset header", lineno)
            edges = _parse_edges(lines[2:])
            return box_from_frame(lat, n_points, edges)
        return powerset_algebra(lat, n_points)

    m = re.fullmatch(r"tables\s+L=(\S+)", head)
    if not m:
        raise ParseError("algebra file must start with 'powerset ...' or 'tables ...'", lineno)
    lat = load_lattice(os.path.join(base_dir, m.group(1)))
    fields: dict[str, list[list[int]]] = {}
    scalars: dict[str, int] = {}
    current: str | None = None
    for lineno, line in lines[1:]:
        m = re.fullmatch(r"(carrier|bottom|top):\s*(\d+)", line)
        if m:
            scalars[m.group(1)] = int(m.group(2))
            current = None
            continue
        m = re.fullmatch(r"(meet|join|implies|t|box):", line)
        if m:
            current = m.group(1)
            fields[current] = []
            continue
        if current is None:
            raise ParseError(f"unexpected line {line!r}", lineno)
        fields[current].append([_expect_int(tok, lineno) for tok in line.split()])
    for key in ("carrier", "bottom", "top"):
        if key not in scalars:
            raise ParseError(f"missing '{key}:' in algebra tables")
    for key in ("meet", "join", "implies", "t"):
        if key not in fields:
            raise ParseError(f"missing '{key}:' block in algebra tables")
    box = None
    if "box" in fields:
        rows = fields["box"]
        flat = [v for row in rows for v in row]
        box = np.array(flat, dtype=np.int16)
    return MVAlgebra(
        lat,
        np.array(fields["meet"], dtype=np.int16),
        np.array(fields["join"], dtype=np.int16),
        np.array(fields["implies"], dtype=np.int16),
        np.array(fields["t"], dtype=np.int16),
        scalars["bottom"],
        scalars["top"],
        box=box,
    )


def serialize_powerset_algebra(lattice_file: str, n_points: int, edges=None) -> str:
    out = [f"powerset L={lattice_file} P={n_points}"]
    if edges is not None:
        out.append("R:")
        out.extend(f"{a} {b}" for a, b in edges)
    return "\n".join(out) + "\n"


def load_algebra(path: str) -> MVAlgebra:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra_text(fh.read(), base_dir=os.path.dirname(path) or ".")


# -- spaces ------------------------------------------------------------------------


def _parse_brace_set(token: str, lineno: int) -> int:
    m = re.fullmatch(r"\{([\d\s,]*)\}", token)
    if not m:
        raise ParseError(f"expected a brace set like {{0,1}}, got {token!r}", lineno)
    inner = m.group(1).replace(",", " ").split()
    return mask_of(_expect_int(tok, lineno) for tok in inner)


def parse_space_text(text: str, lat: FiniteLattice | None = None):
    """Returns (BitopSpace, rel | None, alpha: dict[int, int] | None)."""
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty space file")
    lineno, head = lines[0]
    m = re.fullmatch(r"points:\s*(\d+)", head)
    if not m:
        raise ParseError("space file must start with 'points: n'", lineno)
    n = int(m.group(1))
    section = None
    sub1: list[int] = []
    sub2: list[int] = []
    edges: list[tuple[int, int]] | None = None
    alpha: dict[int, int] | None = None
    for lineno, line in lines[1:]:
        if line in ("tau1:", "tau2:", "R:", "alpha:"):
            section = line[:-1]
            if section == "R":
                edges = []
            if section == "alpha":
                alpha = {}
            continue
        if section == "tau1":
            sub1.append(_parse_brace_set(line, lineno))
        elif section == "tau2":
            sub2.append(_parse_brace_set(line, lineno))
        elif section == "R":
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected an edge 'i j', got {line!r}", lineno)
            edges.append((_expect_int(parts[0], lineno), _expect_int(parts[1], lineno)))
        elif section == "alpha":
            m = re.fullmatch(r"(\d+)\s*->\s*(\{[\d\s,]*\})", line)
            if not m:
                raise ParseError(f"expected 'index -> {{points}}', got {line!r}", lineno)
            alpha[int(m.group(1))] = _parse_brace_set(m.group(2), lineno)
        else:
            raise ParseError(f"line outside any section: {line!r}", lineno)
    space = BitopSpace(Topology.from_subbasis(n, sub1), Topology.from_subbasis(n, sub2))
    rel = None
    if edges is not None:
        rows = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise ParseError(f"edge ({a},{b}) outside 0..{n - 1}")
            rows[a] |= 1 << b
        rel = tuple(rows)
    return space, rel, alpha


def space_to_object(space: BitopSpace, lat: FiniteLattice, alpha: dict[int, int] | None, rel=None):
    """Assemble a PBS/PRBS object; a missing alpha defaults to the trivial one
    (full space on the full subalgebra, empty elsewhere)."""
    family = subalgebra_family(lat)
    if alpha is None:
        values = tuple(
            space.full if i == family.full_index else 0 for i in range(len(family))
        )
    else:
        values = tuple(alpha.get(i, 0) for i in range(len(family)))
    base = PBSObject(space, family, values)
    if rel is None:
        return base
    return PRBSObject(base, rel)


def serialize_space(space: BitopSpace, rel=None, alpha=None) -> str:
    out = [f"points: {space.n}", "tau1:"]
    out.extend(set_str(m) for m in sorted(set(space.tau1.neigh)))
    out.append("tau2:")
    out.extend(set_str(m) for m in sorted(set(space.tau2.neigh)))
    if rel is not None:
        out.append("R:")
        for p, row in enumerate(rel):
            out.extend(f"{p} {q}" for q in range(space.n) if row >> q & 1)
    if alpha is not None:
        out.append("alpha:")
        out.extend(f"{i} -> {set_str(m)}" for i, m in sorted(alpha.items()))
    return "\n".join(out) + "\n"


def load_space(path: str, lat: FiniteLattice | None = None):
    with open(path, encoding="utf-8") as fh:
        return parse_space_text(fh.read(), lat)


# -- Kripke models --------------------------------------------------------------------


def parse_model_text(text: str) -> KripkeModel:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty model file")
    lineno, head = lines[0]
    m = re.fullmatch(r"worlds:\s*(\d+)", head)
    if not m:
        raise ParseError("model file must start with 'worlds: n'", lineno)
    n = int(m.group(1))
    rows = [0] * n
    values: dict[str, dict[int, int]] = {}
    section = None
    for lineno, line in lines[1:]:
        if line in ("R:", "val:"):
            section = line[:-1]
            continue
        if section == "R":
            parts = line.split()
            if len(parts) != 2:
                raise ParseError(f"expected an edge 'i j', got {line!r}", lineno)
            a, b = _expect_int(parts[0], lineno), _expect_int(parts[1], lineno)
            if not (0 <= a < n and 0 <= b < n):
                raise ParseError(f"edge ({a},{b}) outside 0..{n - 1}", lineno)
            rows[a] |= 1 << b
        elif section == "val":
            m = re.fullmatch(r"(\w+)\s*@\s*(\d+)\s*=\s*(\d+)", line)
            if not m:
                raise ParseError(f"expected 'var @ world = value', got {line!r}", lineno)
            var, world, value = m.group(1), int(m.group(2)), int(m.group(3))
            if not 0 <= world < n:
                raise ParseError(f"world {world} outside 0..{n - 1}", lineno)
            values.setdefault(var, {})[world] = value
        else:
            raise ParseError(f"line outside any section: {line!r}", lineno)
    valuation = {}
    for var, per_world in values.items():
        missing = [w for w in range(n) if w not in per_world]
        if missing:
            raise ParseError(f"variable {var!r} lacks a value at worlds {missing}")
        valuation[var] = tuple(per_world[w] for w in range(n))
    return KripkeModel(n, tuple(rows), valuation)


def serialize_model(model: KripkeModel) -> str:
    out = [f"worlds: {model.n_worlds}", "R:"]
    for p, row in enumerate(model.rel):
        out.extend(f"{p} {q}" for q in range(model.n_worlds) if row >> q & 1)
    out.append("val:")
    for var in sorted(model.valuation):
        for w, v in enumerate(model.valuation[var]):
            out.append(f"{var} @ {w} = {v}")
    return "\n".join(out) + "\n"


def load_model(path: str) -> KripkeModel:
    with open(path, encoding="utf-8") as fh:
        return parse_model_text(fh.read())
