"""Theory diagnostics: parent second moments, kappa envelopes and bound constants."""

from semband.analysis.constants import TheoryConstants, regret_bound_constants
from semband.analysis.moments import SecondMoments, kappa_bounds, second_moment

__all__ = [
    "SecondMoments",
    "TheoryConstants",
    "kappa_bounds",
    "regret_bound_constants",
    "second_moment",
]
