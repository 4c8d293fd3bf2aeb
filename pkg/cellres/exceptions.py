# exceptions.py
"""Error types raised by the cellres package.

Every precondition failure raises a subclass of ``CellResError``. The CLI
maps ``ParseError`` to exit code 2 and every other subclass to exit code 1.
"""


class CellResError(Exception):
    """Base class for all domain errors"""


class ConfigurationError(CellResError):
    """Invalid CELLRES_* setting"""


class ParseError(CellResError):
    """Malformed textual or JSON input"""


class RingMismatchError(CellResError):
    """Operands live over different rings"""


class EmptyIdealError(CellResError):
    """A monomial ideal needs at least one generator"""


class CellConstructionError(CellResError):
    """A cell could not be built from its boundary and label"""


class OrientationError(CellConstructionError):
    """Attaching degrees could not be inferred consistently"""


class ComplexValidationError(CellResError):
    """A cell complex violates one or more structural rules"""

    def __init__(self, violations):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations[:5])
        if len(self.violations) > 5:
            summary += f"; ... ({len(self.violations)} violations)"
        super().__init__(f"invalid cell complex: {summary}")


class PolyhedralError(CellResError):
    """Inconsistent polyhedral input"""


class ResolutionError(CellResError):
    """A complex does not meet the requirements of a resolution query"""


class NotAResolutionError(ResolutionError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"complex does not support a resolution: {witness}")


class NotMinimalError(ResolutionError):
    def __init__(self, cell_id, face_id, label):
        self.cell_id = cell_id
        self.face_id = face_id
        self.label = label
        super().__init__(
            f"resolution is not minimal: cell {cell_id} and its face {face_id} "
            f"share the label {label}"
        )
