from __future__ import annotations

from enum import Enum


class Kind(str, Enum):
    UnknownRule = "UnknownRule"
    RuleNotInSystem = "RuleNotInSystem"
    PremiseShapeMismatch = "PremiseShapeMismatch"
    SideConditionViolated = "SideConditionViolated"
    EigenvariableNotFresh = "EigenvariableNotFresh"
    NotAtomic = "NotAtomic"
    CaptureError = "CaptureError"
    LanguageViolation = "LanguageViolation"
    DischargeScopeError = "DischargeScopeError"


class CheckError(Exception):
    """A rejected proof step.

    ``path`` lists premise indices from the root down to the offending node.
    """

    def __init__(self, kind: Kind, detail: str, path: tuple = ()):
        self.kind = Kind(kind)
        self.detail = detail
        self.path = tuple(path)
        super().__init__(self.render())

    def at(self, path) -> "CheckError":
        return CheckError(self.kind, self.detail, path)

    def render(self) -> str:
        where = "/".join(map(str, self.path)) or "root"
        return f"{self.kind.value} at {where}: {self.detail}"


class UnknownSystem(KeyError):
    pass
