"""Exception types shared across the engine."""


class HopfCyclicError(Exception):
    """Base class for all engine errors."""


class WellDefinednessError(HopfCyclicError):
    """A lifted map fails to descend to a quotient.

    On valid input every structure map descends; this error signals a
    malformed instance (or a violated algebraic identity), not a bug in
    the caller.
    """


class RestrictionError(HopfCyclicError):
    """A map fails to preserve a subspace it was expected to restrict to."""


class ClosureError(HopfCyclicError):
    """An induced Hom-space action leaves the module-map subspace."""


class NaturalityError(HopfCyclicError):
    """A claimed natural isomorphism fails naturality or invariance."""


class CyclicityError(HopfCyclicError):
    """An operation requiring tau^(n+1) = id received para-cyclic input."""


class B2Error(HopfCyclicError):
    """A differential fails b.b = 0."""


class CommutationError(HopfCyclicError):
    """A claimed chain map does not commute with the differentials."""


class ParseError(HopfCyclicError):
    """Malformed instance file."""
