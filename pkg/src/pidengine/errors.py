"""Exception types raised across the engine.

Everything derives from :class:`DiagramError` so callers can catch one type.
Validation problems found by the regularity validator are *reported*, not
raised; see :mod:`pidengine.diagram`.
"""


class DiagramError(Exception):
    """Base class for all engine errors."""


# --- table construction and algebra ---------------------------------------

class NegativeValue(DiagramError):
    """A table value is negative, NaN or infinite."""


class LengthMismatch(DiagramError):
    """Flat value sequence does not match the product of scope cardinalities."""


class DuplicateVariableInScope(DiagramError):
    """The same variable id appears twice in one scope."""


class CardinalityMismatch(DiagramError):
    """Two tables disagree about a shared variable."""


class VariableNotInScope(DiagramError):
    """An operation referenced a variable absent from the table's scope."""


class StateOutOfRange(DiagramError):
    """A state index is >= the variable's cardinality."""


class ScopeNotContained(DiagramError):
    """Divisor scope is not a subset of the dividend scope."""


class PositiveDividedByZero(DiagramError):
    """x / 0 with x > 0: the factorization is inconsistent."""


# --- graph model ------------------------------------------------------------

class UnknownNode(DiagramError):
    """Node id not present in the diagram."""


class UnknownName(DiagramError):
    """No node or state with the given name."""


class DirectedCycle(DiagramError):
    """The graph contains a directed cycle."""


class NodeNotChance(DiagramError):
    """Operation requires a chance node."""


class NotDecision(DiagramError):
    """Operation requires a decision node."""


class MissingValueNode(DiagramError):
    """Operation requires a value node."""


class TargetUnachievable(DiagramError):
    """No sequence of reversals can realize the requested order."""


# --- primitive operations ---------------------------------------------------

class NoSuchArc(DiagramError):
    """The arc to reverse does not exist."""


class WouldCreateCycle(DiagramError):
    """Reversing this arc would create a directed cycle."""


class NotConditional(DiagramError):
    """Operation requires a conditional table (got a potential)."""


class HasChildren(DiagramError):
    """Node is not barren: it still has children."""


class IsEvidence(DiagramError):
    """Node is observed."""


class IsValue(DiagramError):
    """Node is the value node."""


class IsDecision(DiagramError):
    """Node is a decision node."""


class AlreadyObserved(DiagramError):
    """Evidence was already attached to this node."""


class NotLastDecision(DiagramError):
    """Policy selection applies only to the last decision in the order."""


class UnobservedValueParent(DiagramError):
    """A parent of the value node is neither the decision nor its information."""


# --- compound transforms ----------------------------------------------------

class FewerThanTwoObservedChildren(DiagramError):
    """Combining observed children needs at least two of them."""


class NotEvidence(DiagramError):
    """Operation requires an observed node."""


class NoValidDistinguishedParent(DiagramError):
    """No parent qualifies to receive the reduced node's information."""


class HasDecisionChild(DiagramError):
    """Reducing this node would destroy a decision's information set."""


class ZeroProbabilityEvidence(DiagramError):
    """The observed evidence has probability zero under the model."""


class NotRegular(DiagramError):
    """The diagram fails one or more regularity conditions."""


class Stuck(DiagramError):
    """No solve step applies; indicates an inconsistent or irregular model."""


class OverlappingSets(DiagramError):
    """Separation queries require pairwise disjoint node sets."""


# --- oracle -----------------------------------------------------------------

class StateSpaceTooLarge(DiagramError):
    """Exhaustive enumeration would exceed the configured cell cap."""


class PolicySpaceTooLarge(DiagramError):
    """Exhaustive policy enumeration would exceed the configured cap."""
