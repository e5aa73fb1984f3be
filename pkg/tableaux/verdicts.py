"""
Verdicts of a query.
Each verdict class knows its status value and the exit codes it maps to.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Optional

from .constants import (
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_UNDECIDED,
    STATUS_CLOSED,
    STATUS_OPEN,
    STATUS_RESOURCE_OUT,
)
from .engine import Proof, SearchStats
from .prefixed import Branch


class Verdict(ABC):
    """Abstract base class for query verdicts."""

    logic: str
    stats: SearchStats

    @abstractmethod
    def get_status_value(self) -> str:
        """Return the string value of the status."""

    @abstractmethod
    def prove_exit_code(self) -> int:
        """Exit code when the query asked for a proof."""

    @abstractmethod
    def countermodel_exit_code(self) -> int:
        """Exit code when the query asked for a countermodel."""

    @property
    def is_definite(self) -> bool:
        return True


@dataclass
class Closed(Verdict):
    logic: str
    proof: Proof
    stats: SearchStats = field(default_factory=SearchStats)

    def get_status_value(self) -> str:
        return STATUS_CLOSED

    def prove_exit_code(self) -> int:
        return EXIT_OK

    def countermodel_exit_code(self) -> int:
        return EXIT_NEGATIVE


@dataclass
class Open(Verdict):
    """An open saturated branch and the model read off it."""

    logic: str
    branch: Branch
    countermodel: object
    assignment: dict
    certified: bool
    violations: tuple = ()
    saturated: bool = True
    stats: SearchStats = field(default_factory=SearchStats)

    def get_status_value(self) -> str:
        return STATUS_OPEN

    def prove_exit_code(self) -> int:
        # A saturated branch without a certified model is no definite answer
        return EXIT_NEGATIVE if self.certified else EXIT_UNDECIDED

    def countermodel_exit_code(self) -> int:
        return EXIT_OK if self.certified else EXIT_UNDECIDED

    @property
    def is_definite(self) -> bool:
        return self.certified


@dataclass
class ResourceOut(Verdict):
    logic: str
    limit: str
    branch: Optional[Branch] = None
    stats: SearchStats = field(default_factory=SearchStats)

    def get_status_value(self) -> str:
        return STATUS_RESOURCE_OUT

    def prove_exit_code(self) -> int:
        return EXIT_UNDECIDED

    def countermodel_exit_code(self) -> int:
        return EXIT_UNDECIDED

    @property
    def is_definite(self) -> bool:
        return False
