"""Exception types shared across the package.

Validators never raise for *axiom* failures (those go into reports with
witnesses); exceptions are reserved for malformed data, violated operation
preconditions and impossible requests.
"""


class StructureError(Exception):
    """Base class for all table/structure errors raised by this package."""


class MalformedTable(StructureError):
    """A table references unknown ids or is not total over its domain."""


class DomainMismatch(StructureError):
    """A functor map is partial or maps outside its declared groupoids."""


class ArityMismatch(StructureError):
    """A family's components are not keyed by tuples of its declared arity."""


class EndpointMismatch(StructureError):
    """Two consecutive morphisms in a chain do not share an endpoint."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class MissingFamily(StructureError):
    """A structural family required by the requested check is absent."""


class UnitorMismatch(StructureError):
    """The left and right unitor components at the unit object differ."""


class NoInverse(StructureError):
    """An object has no weak inverse under the sum."""

    def __init__(self, obj: str):
        super().__init__(f"object {obj!r} has no weak inverse")
        self.obj = obj


class StructureMismatch(StructureError):
    """Two structures expected to share a carrier or endpoint do not."""


class MissingZeroIso(StructureError):
    """A zero isomorphism is required but absent on the functor."""


class PresentationMismatch(StructureError):
    """A 2-ring is in the wrong additive presentation for this operation."""


class MissingAbsorbers(StructureError):
    """An AC 2-ring operation needs absorbing isomorphisms that are absent."""


class NotARing(StructureError):
    """Input tables violate a ring law; carries the law and a witness."""

    def __init__(self, law: str, witness: tuple):
        super().__init__(f"not a ring: {law} fails at {witness}")
        self.law = law
        self.witness = witness


class InvalidModulus(StructureError):
    """A fixture modulus below 2 was requested."""


class PreconditionFailed(StructureError):
    """An operation's stated precondition does not hold for the input."""


class DocumentError(StructureError):
    """A structure document is malformed (syntax or reference errors)."""
