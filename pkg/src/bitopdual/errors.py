"""Exception types shared across the workbench."""


class BitopdualError(Exception):
    """Base class for all workbench errors."""


# ---- lattice construction ----

class CyclicCovers(BitopdualError):
    """The cover relation contains a cycle."""


class NotALattice(BitopdualError):
    """Some pair of elements lacks a unique least upper / greatest lower bound."""


class NotDistributive(BitopdualError):
    """A non-distributive lattice was used where a Heyting algebra is required."""


class ElementOutOfRange(BitopdualError):
    """An element id is not a member of the carrier."""


class InvalidArity(BitopdualError):
    """A size/arity parameter is out of its allowed range."""


# ---- algebras ----

class TruthLatticeMismatch(BitopdualError):
    """Operation tables disagree with the declared truth lattice."""


class MissingBox(BitopdualError):
    """A modal operation was required but the algebra has none."""


class ArityMismatch(BitopdualError):
    """A map's length disagrees with the carriers it connects."""


class SizeOverflow(BitopdualError):
    """A constructed carrier would exceed the configured cap."""


# ---- spaces ----

class AlphaDomainMismatch(BitopdualError):
    """A subspace assignment is not defined on every subalgebra of L."""


class CapExceeded(BitopdualError):
    """A search/enumeration budget was exceeded."""


# ---- formula language / file formats ----

class FormulaSyntaxError(BitopdualError):
    """Malformed formula text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownTruthConstant(BitopdualError):
    """A T{k} truth-level index is not an element of the active lattice."""


class UnboundVariable(BitopdualError):
    """A formula variable has no valuation in the model."""


class ParseError(BitopdualError):
    """Malformed input file; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{message}{where}")
        self.line = line


class UnknownVerb(BitopdualError):
    """The CLI was invoked with a verb it does not know."""
