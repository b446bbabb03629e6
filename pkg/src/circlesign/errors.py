"""Exception types shared across the library."""


class CircleSignError(Exception):
    """Base class for every error raised by this package."""


class LoopEdgeError(CircleSignError):
    """An edge was given with two equal endpoints."""


class VertexOutOfRangeError(CircleSignError):
    """A vertex index does not exist in the host graph."""


class NotACycleError(CircleSignError):
    """A vertex sequence is not an induced cycle of the host graph."""


class RuleIncompleteError(CircleSignError):
    """An explicit balance rule does not cover every induced cycle."""


class NotATreeError(CircleSignError):
    """An edge set is not a maximal acyclic subgraph of the host."""


class NotBalanceableError(CircleSignError):
    """No labelling satisfies the requested balance rule."""


class GraphMismatchError(CircleSignError):
    """Two signed graphs do not share the same underlying graph."""


class UnsupportedRuleError(CircleSignError):
    """Only the named length-based balance rules are accepted here."""


class DuplicatePointError(CircleSignError):
    """Circle points must be pairwise distinct."""


class NotAdjacentError(CircleSignError):
    """The two points are not an edge of the dense circle graph."""


class DegenerateConfigurationError(CircleSignError):
    """A pair of points sits exactly on the adjacency threshold."""


class WitnessSearchExhaustedError(CircleSignError):
    """A bounded witness search ran out of candidates; this is not a 'no'."""


class NotIndependenceTwoError(CircleSignError):
    """The graph contains three pairwise non-adjacent vertices."""


class InconsistentTriangleError(CircleSignError):
    """A triangle pattern whose labels sum to 1 can never be realized."""


class HostMismatchError(CircleSignError):
    """Host points do not realize the restriction of the target pattern."""


class NotAssociativeError(CircleSignError):
    """Atom composition fails the associativity axiom."""


class NotPeirceanClosedError(CircleSignError):
    """The allowed-triple set is not closed under the Peircean transforms."""


class BadIdentityError(CircleSignError):
    """Composition with the identity atom does not fix every atom."""


class BadConverseError(CircleSignError):
    """The converse map is not an involution fixing the identity."""


class NotAtomicError(CircleSignError):
    """Every constraint of the network must be a single atom."""


class IdOffDiagonalError(CircleSignError):
    """The identity atom may only appear on the diagonal."""


class UnsupportedAlgebraError(CircleSignError):
    """The complete solver only covers the four-atom algebra it targets."""


class InternalInvariantViolationError(CircleSignError):
    """A step that theory guarantees has failed; indicates a bug."""


class ParseError(CircleSignError):
    """A document could not be parsed."""


class ValidationError(CircleSignError):
    """A parsed document failed semantic validation."""
