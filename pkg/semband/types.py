from enum import Enum


class SembandError(Exception):
    """Base class for every error raised by semband."""


class GraphError(SembandError):
    """Raised when a graph or weight matrix is defined incorrectly."""

    def __init__(self, message: str, *, node: int | None = None):
        super().__init__(message)
        self.node = node


class CycleDetected(GraphError):
    """No topological order exists for the given parent lists."""


class BadIndex(GraphError):
    """A parent or reward index is out of range, repeated, or a self-loop."""


class RewardHasChild(GraphError):
    """The reward node is listed as a parent of some node."""


class SupportMismatch(GraphError):
    """A weight matrix has nonzero entries outside the DAG support."""


class TooLarge(GraphError):
    """Path enumeration was requested on a graph above the enumeration guard."""


class ArmSpaceTooLarge(GraphError):
    """The intervenable set would produce more arms than the hard cap."""


class NumericalError(SembandError):
    """Raised when a numerical invariant is breached at runtime."""


class NumericalBreakdown(NumericalError):
    """A rank-one update denominator collapsed."""


class FactorizationFailure(NumericalError):
    """A Gram matrix could not be Cholesky-factorized."""


class DomainError(NumericalError):
    """A formula was evaluated outside its domain."""


class SamplingError(NumericalError):
    """Rejection sampling exhausted its attempt budget."""


class ContractViolation(SembandError):
    """A policy was driven out of its choose/observe alternation."""


class ConfigError(SembandError):
    """Raised for invalid or unknown experiment configuration."""


class ExportError(SembandError):
    """Raised when results cannot be written or read."""

    def __init__(self, message: str, *, path: str):
        super().__init__(f"{message}: {path}")
        self.path = path


class SingularMomentWarning(UserWarning):
    """A second-moment block has no positive effective singular value."""


class NoiseKind(Enum):
    GAUSSIAN = "gaussian"
    TRUNCATED_GAUSSIAN = "truncated_gaussian"


class InterventionalRule(Enum):
    """How interventional weights relate to observational ones in the prior."""

    NEGATE = "negate"  # B* = -B, as in the hierarchical/parallel experiments
    INDEPENDENT = "independent"


class GraphFamily(Enum):
    HIERARCHICAL = "hierarchical"
    ENHANCED_PARALLEL = "enhanced_parallel"
    FILE = "file"


class PolicyKind(Enum):
    LINSEM_UCB = "linsem_ucb"
    LINSEM_TS_GAUSSIAN = "linsem_ts_gaussian"
    BASELINE_UCB = "baseline_ucb"
    KNOWN_DIST = "known_dist"


class KnownDistMode(Enum):
    UCB = "ucb"
    TS = "ts"


class StreamPurpose(Enum):
    """Tags mixed into per-replication seeds so streams never collide."""

    STRUCTURE = 1
    PRIOR_CENTER = 2
    INSTANCE = 3
    ENVIRONMENT = 4
    POLICY = 5
    MONTE_CARLO = 6
