"""Exception hierarchy.

ComputationError covers refusals at stated desk-scale limits and failed
operation preconditions; ConsistencyError signals that two routes which must
agree (the two irreducibility criteria, or the per-index equivalence columns)
disagreed, which is a bug in this package rather than bad input.
"""


class FqbinomError(Exception):
    pass


class ComputationError(FqbinomError):
    pass


class NotIrreducible(ComputationError):
    """A binomial required to be irreducible is not."""


class FactorizationTooHard(ComputationError):
    """The desk-scale factorizer gave up within its iteration budget."""


class SizeBoundExceeded(ComputationError):
    """The request is beyond a documented desk-scale bound."""


class SearchCutoffExceeded(ComputationError):
    """A bounded search ran out of candidates."""


class ConsistencyError(FqbinomError):
    """Internal cross-check failed; indicates an implementation bug."""
