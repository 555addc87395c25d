"""Exception hierarchy for mbasis.

Every error raised by the library derives from :class:`MBasisError` so that
callers (and the CLI) can catch the whole family at once.  The CLI maps the
usage/format related subclasses to exit status 2.
"""

from __future__ import annotations


class MBasisError(Exception):
    """Base class of all mbasis errors."""


class InvalidBladeError(MBasisError):
    """A blade index lies outside ``1..m`` or ``m`` exceeds ``MAX_DIM``."""


class DimensionMismatchError(MBasisError):
    """Two operands live in ambient spaces of different dimension."""


class InvalidIndexError(MBasisError):
    """A coordinate index or index range is outside the ambient space."""


class PreconditionError(MBasisError):
    """An input does not satisfy the documented precondition."""


class NotHarmonicError(PreconditionError):
    """A factor declared harmonic is not annihilated by the Laplacian."""


class NotMonogenicError(PreconditionError):
    """A factor declared monogenic is not annihilated by the Dirac operator."""


class NotEigenvectorError(MBasisError):
    """A polynomial is not an exact eigenvector of the requested operator."""


class SingularCoefficientError(MBasisError):
    """A projector or series coefficient has a vanishing denominator."""


class ChainError(MBasisError):
    """A branching chain is not a valid composition of the dimension."""


class BasisFormatError(MBasisError):
    """A basis file (or JSON fragment) is malformed."""


class BoundsError(MBasisError):
    """A request exceeds the configured desk-scale bounds."""
