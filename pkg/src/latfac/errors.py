"""Exception types raised across the package."""


class LatfacError(Exception):
    """Base class for all domain errors."""


# --- lattice construction ---------------------------------------------------


class NotAPoset(LatfacError):
    """The input order relation violates antisymmetry."""


class NotALattice(LatfacError):
    """Some pair of elements lacks a unique meet or join."""


class NoBoundedness(LatfacError):
    """The poset has no global bottom or top element."""


class BadParams(LatfacError):
    """Invalid constructor parameters."""


class SizeLimitExceeded(LatfacError):
    """The lattice has more elements than the configured cap allows."""


# --- relations and transfer systems -----------------------------------------


class RefinementViolation(LatfacError):
    """A relation pair (x, y) does not satisfy x <= y in the carrier."""


class NotARelation(LatfacError):
    """The given pair is not a comparable pair of the lattice."""


class NotATransferSystem(LatfacError):
    """The relation fails the transfer-system closure axioms."""


class CarrierMismatch(LatfacError):
    """Two structures live on different carrier lattices."""


class EnumerationLimitExceeded(LatfacError):
    """An enumeration produced more structures than the configured cap."""


class NotModular(LatfacError):
    """The operation requires a modular carrier lattice."""


class NotACoverSubset(LatfacError):
    """The relation is not a subset of the covering relations."""


class NotSaturated(LatfacError):
    """The transfer system or cover set fails the saturation conditions."""


class NoMatchingSystem(LatfacError):
    """No saturated transfer system realizes the given cover set.

    This signals an implementation bug, not a bad input: every valid
    saturated cover on a modular lattice determines a unique system.
    """


# --- factorization systems ---------------------------------------------------


class NotComparable(LatfacError):
    """factor() was asked about a pair x, y with x not below y."""


class NonUniqueFactorization(LatfacError):
    """The factoring object is missing or ambiguous (invalid system)."""


# --- operators ----------------------------------------------------------------


class MinNotUnique(LatfacError):
    """A candidate set has no unique minimum (invalid system input)."""


class MaxNotUnique(LatfacError):
    """A candidate set has no unique maximum (invalid system input)."""


class FormulaMismatch(LatfacError):
    """The two defining formulas for an operator disagree (invalid input)."""


class NotMonotone(LatfacError):
    """The self-map is not order-preserving."""


class NotIdempotent(LatfacError):
    """fixed_points() requires an idempotent self-map."""


class EmptyFiber(LatfacError):
    """The requested operator is not in the image of the assignment."""


# --- submonoids, models, counting --------------------------------------------


class NotASubmonoid(LatfacError):
    """The element set is not closed under the operation or lacks the unit."""


class NotReflective(LatfacError):
    """The factorization system is not reflective."""


class NotCoreflective(LatfacError):
    """The factorization system is not coreflective."""


class CountMismatch(LatfacError):
    """Two independently computed counts disagree (theorem-violation signal)."""


class BadIndex(LatfacError):
    """Poly-Bernoulli indices must be at least 1."""
