"""Exception types raised by the toolkit.

Every error derives from :class:`GLPError`, itself a ``ValueError``, so callers
can catch bad-input conditions with a single clause.
"""

from __future__ import annotations


class GLPError(ValueError):
    """Base class for all input and contract violations."""


class DimensionMismatch(GLPError):
    """Vectors or matrices of incompatible shape were combined."""


class IsotropicVector(GLPError):
    """A coroot was requested for a vector of zero length."""


class InvalidRank(GLPError):
    """No root system of the requested family exists in this rank."""


class NonIntegralWeight(GLPError):
    """A weight pairs non-integrally with some simple coroot."""


class NotDominant(GLPError):
    """A dominant weight was required."""


class NotARootSystem(GLPError):
    """A vector set fails one of the root system axioms."""


class NotGCM(GLPError):
    """A matrix fails the generalized Cartan matrix axioms."""


class UnknownConstruction(GLPError):
    """A catalog lookup found no entry with the given name."""


class NonHomogeneousClosure(GLPError):
    """A matrix Lie algebra is not stable under the grading derivation."""


class NotAlmostEffective(GLPError):
    """An analysis requiring an almost effective algebra got another one."""


class NotASubalgebra(GLPError):
    """A matrix span is not closed under commutators."""


class IrrationalSpectrum(GLPError):
    """A grading element has eigenvalues outside the rationals."""


class NonIntegralSpacing(GLPError):
    """Eigenvalues of a grading element differ by non-integers."""
