"""Regret-bound constants, computed as diagnostics next to empirical regret.

``alpha`` uses the ``T^(5/2)`` exponent inside the logarithm. A variant with
``T^(T/2)`` also circulates for the same bound; it overflows for any
practical horizon and is not implemented.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from semband.estimation.confidence import confidence_radius
from semband.types import DomainError

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True, slots=True)
class TheoryConstants:
    alpha: float
    tau: float
    g_tau: float
    beta: float
    kappa_min: float
    kappa_max: float
    lambda_bound: float
    lambda_leading: float
    regret_bound: float

    def as_dict(self) -> dict[str, float]:
        return asdict(self)


def regret_bound_constants(
    N: int,
    T: int,
    d: int,
    L: int,
    m: float,
    nu_norm: float,
    kappa_min: float,
    kappa_max: float,
) -> TheoryConstants:
    """Evaluate ``alpha``, ``tau``, ``g(tau)``, the ``lambda_T`` bound and the
    LinSEM-UCB regret bound.

    ``lambda_leading`` is the ``sqrt(NT)`` term of the ``lambda_T`` bound.

    Raises:
        DomainError: if ``T < 2N`` or the kappa envelope is not
            ``0 < kappa_min <= kappa_max``.
    """
    if T < 2 * N:
        raise DomainError(f"Need T >= 2N for the log(T/2N) term, got T={T}, N={N}")
    if not 0 < kappa_min <= kappa_max:
        raise DomainError(
            f"Need 0 < kappa_min <= kappa_max, got {kappa_min}, {kappa_max}"
        )
    if d < 1 or L < 0 or m <= 0 or nu_norm < 0:
        raise DomainError("Need d >= 1, L >= 0, m > 0 and a non-negative nu norm")

    alpha = math.sqrt((16.0 / 3.0) * math.log(d * N * T**2.5 * (T + 1)))
    tau = alpha**2 * m**4 / kappa_min**2
    g_tau = SQRT2 * (math.sqrt(tau * kappa_max) + math.sqrt(tau * kappa_min) + 1.0)

    leading = 4.0 * g_tau / math.sqrt(kappa_min) * math.sqrt(N * T)
    lambda_bound = (
        leading
        + 2.0 * SQRT2 * (N + 1) * tau * g_tau
        + (2.0 * SQRT2 * N * math.sqrt(tau) * g_tau / math.sqrt(kappa_min))
        * math.log(T / (2 * N))
        + m / T
        + 2.0 * m / 3.0
        + 1.0
    )
    beta = confidence_radius(N, T, d, m)
    path_factor = 2 ** (L + 1) * L * beta**L * d ** (L / 2)
    regret = 2.0 * m + nu_norm * path_factor * lambda_bound
    return TheoryConstants(
        alpha=alpha,
        tau=tau,
        g_tau=g_tau,
        beta=beta,
        kappa_min=kappa_min,
        kappa_max=kappa_max,
        lambda_bound=lambda_bound,
        lambda_leading=leading,
        regret_bound=regret,
    )
