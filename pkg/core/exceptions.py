"""
Error hierarchy shared by every laboratory app.

Operations raise these; management commands translate them into exit
statuses (1 for mathematical inconsistencies, 2 for usage problems).
"""


class LabError(Exception):
    """Root of all laboratory errors."""


class PreconditionError(LabError, ValueError):
    """An operation was called with arguments outside its domain."""


class RadicandMismatchError(PreconditionError):
    """Two quadratic-field values live in different fields Q(sqrt D)."""


class DegenerateConfigurationError(PreconditionError):
    """Collinear triples, degenerate triangles or coincident points."""


class CertificateError(LabError):
    """A point set does not satisfy the Diophantine certificate."""


class InconsistencyError(LabError):
    """A computed result contradicts a proven bound or an independent oracle."""
