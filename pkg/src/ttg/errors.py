"""Exception hierarchy shared by all ttg modules."""


class TTGError(Exception):
    """Base class for every error raised by this package."""


class SchemaError(TTGError):
    """Input document is malformed (missing key, bad scalar, bad grammar)."""


class DuplicateName(SchemaError):
    """Two orbits or two basis morphisms share a name."""


class DegreeOutOfWindow(SchemaError):
    """A hom or composition entry lives outside the declared hom window."""


class NoTensorStructure(TTGError):
    """Operation requires a tensor table the presentation does not have."""


class TooManyOrbits(TTGError):
    """Lattice enumeration refused: orbit count exceeds the hard cap."""


class NotAnIdeal(TTGError):
    """Primality test called on a set that is not ideal-closed."""


class NotInLattice(TTGError):
    """Set handed to a lattice operation is not a member of the lattice."""


class TopologyAxiomFailure(TTGError):
    """Internal consistency check of a finite topology failed (engine bug)."""


class NotStabilized(TTGError):
    """Quotient-category computation did not stabilize within the rank bound."""


class RankBoundExceeded(TTGError):
    """Queried object is larger than the configured roof rank bound."""


class NotFunctorial(TTGError):
    """Presheaf restriction maps fail functoriality."""


class NotCommutative(TTGError):
    """Algebra handed to the chain model is not commutative."""


class DimensionTooLarge(TTGError):
    """Algebra dimension exceeds the desk-scale cap of the chain model."""


class FactorizationLimit(TTGError):
    """Minimal-polynomial splitting gave up (outside desk-scale coverage)."""


class NotAChainMap(TTGError):
    """Matrix data does not commute with the differentials."""


class UnsupportedRing(TTGError):
    """Requested builtin name is not in the registry."""


class InvalidEquivalence(TTGError):
    """Claimed equivalence data fails the hom-table comparison."""
