"""Exception types shared across the package."""

from __future__ import annotations


class CupstackError(Exception):
    """Base class for all package errors."""


class ParameterError(CupstackError, ValueError):
    """A generator or solver parameter violates its documented range.

    The message names the violated constraint.
    """


class DisconnectedGraphError(CupstackError):
    """An operation that requires a connected graph was given one that is not."""


class NotBipartiteError(CupstackError):
    """An operation that requires a bipartite graph was given an odd cycle."""


class NotATreeError(CupstackError):
    """A tree-only operation was applied to a graph with a cycle or too many edges."""


class InvalidPartitionError(CupstackError):
    """A claimed path partition does not partition the vertex set into paths."""


class BudgetExceededError(CupstackError):
    """A search or construction hit its configured resource budget.

    Budget exhaustion is never silently converted into a definitive verdict.
    """


class NoHamiltonPathError(CupstackError):
    """The graph provably has no Hamilton path (distinct from budget overrun)."""


class IllegalMoveError(CupstackError):
    """A move violates the game rule; the message names the failing clause."""


class NotStackableError(CupstackError):
    """A weight query was made for a target the graph cannot be stacked onto."""


class FormatError(CupstackError, ValueError):
    """A file being read does not match its documented format."""
