"""Error taxonomy shared by the library, the CLI, and the service.

Every domain error carries a short machine code from a fixed set so the
wire protocol and the CLI can map failures uniformly:

    SYNTAX        PD text does not match the grammar
    STRUCTURE     well-formed text but not a valid diagram
    INVALID_SITE  move site does not exist on the given diagram
    BUDGET        crossing or node budget exceeded
    NOT_FOUND     unknown catalog name, session id, or component id
"""

from __future__ import annotations


class KnotlabError(Exception):
    """Base class; subclasses set a stable wire code."""

    code = "STRUCTURE"

    def __init__(self, message: str, *, detail: object = None):
        super().__init__(message)
        self.message = message
        self.detail = detail


class PDSyntaxError(KnotlabError):
    """PD text rejected by the tokenizer or grammar; offset is in bytes."""

    code = "SYNTAX"

    def __init__(self, message: str, offset: int):
        super().__init__(message, detail={"offset": offset})
        self.offset = offset


class StructureError(KnotlabError):
    code = "STRUCTURE"


class IncompleteColoringError(StructureError):
    """A coloring is missing one or more arcs (maps to STRUCTURE)."""


class InconsistentLayoutError(StructureError):
    """Layout geometry does not cover the diagram (maps to STRUCTURE)."""


class InvalidSiteError(KnotlabError):
    code = "INVALID_SITE"


class BudgetExceededError(KnotlabError):
    code = "BUDGET"


class NotFoundError(KnotlabError):
    code = "NOT_FOUND"


class BadComponentError(NotFoundError):
    """Component id out of range (maps to NOT_FOUND)."""
