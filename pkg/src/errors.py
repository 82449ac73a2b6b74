"""Exception hierarchy shared by every glat module.

All errors derive from :class:`GlatError`, itself a ``ValueError`` so callers that
only guard against bad input keep working. The CLI maps any ``GlatError`` to exit
code 1 and prints the class name together with the message.
"""


class GlatError(ValueError):
    """Base class for computation errors raised by glat."""


class TooLarge(GlatError):
    """An enumeration exceeded its configured guard."""


class UnknownSuite(GlatError):
    """A verification suite name is not registered."""


class ConfigError(GlatError):
    """Invalid configuration value or unknown configuration key."""


class InvalidStructure(GlatError):
    """A Yang-Baxter presentation failed validation during conversion."""


# Finite lattices


class LatticeError(GlatError):
    """Base class for finite-lattice errors."""


class NotALattice(LatticeError):
    """Two elements lack a meet or a join, or the bounds are not unique."""


class CyclicCovers(LatticeError):
    """The cover relation contains a cycle."""


class NotModular(LatticeError):
    """An operation that requires a modular lattice received another one."""


class NotADownset(LatticeError):
    """An embedded lattice is not a principal downset of the next one."""


class FactorizationMismatch(LatticeError):
    """Factorizations along a chain of lattices are not induced from each other."""


# Lattices of submodules


class ModuleError(GlatError):
    """Base class for errors in the coordinatized beam model."""


class InvalidParams(ModuleError):
    """The beam parameters are invalid (p not prime or delta < 1)."""


class NotFullRank(ModuleError):
    """Generators do not span Q^delta."""


class ParamMismatch(ModuleError):
    """Operands live over different beam parameters or slot layouts."""


class NotInNegativeCone(ModuleError):
    """The lattice is not contained in R^delta."""


# Germs


class GermError(GlatError):
    """Base class for germ engine errors."""


class InvalidGerm(GermError):
    """A germ table is malformed beyond what validation can report."""


class UnknownElement(GermError):
    """A germ element name or id does not exist."""


class ProductUndefined(GermError):
    """A product needed by a normal-form step is missing from the table."""


class NotCentralDualAtom(GermError):
    """The element is not a dual atom of the lattice center."""
