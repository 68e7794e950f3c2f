"""Exception types shared across forbconf.

Every error carries a short machine-readable ``code`` that the CLI copies
into its JSON error payload.
"""

from __future__ import annotations


class ForbConfError(Exception):
    code = "error"


class ShapeError(ForbConfError, ValueError):
    code = "shape"


class DomainError(ForbConfError, ValueError):
    code = "domain"


class PreconditionError(ForbConfError, ValueError):
    code = "precondition"


class HypothesisError(ForbConfError, ValueError):
    """A lemma's hypotheses do not hold for the given input."""

    code = "hypothesis"


class ContradictionError(ForbConfError, RuntimeError):
    """A structural guarantee failed; indicates a bug, not bad input."""

    code = "contradiction"


class StabilityError(ForbConfError, RuntimeError):
    code = "unstable"


class ParseError(ForbConfError, ValueError):
    code = "parse"
