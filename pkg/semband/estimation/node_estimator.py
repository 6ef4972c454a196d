"""Online ridge regression of one node on its parents.

The Gram matrix is kept in compact form over ``Pa(i)`` only. Padding it to
``N x N`` adds identity rows/columns for non-parents whose estimates stay at
zero, so the compact and padded estimators agree on every parent coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt
import scipy.linalg

from semband.types import FactorizationFailure, NumericalBreakdown, SupportMismatch

REFRESH_INTERVAL = 512
"""Updates between from-scratch re-inversions of the Gram matrix."""

BREAKDOWN_TOL = 1e-12

Array = npt.NDArray[np.float64]


@dataclass(eq=False)
class NodeEstimator:
    """``V = I + sum x x^T``, ``g = sum x (x_i - nu_i)``, ``b = V^{-1} g``."""

    parent_idx: tuple[int, ...]
    gram: Array
    gram_inv: Array
    resp: Array
    estimate: Array
    count: int = 0
    _since_refresh: int = field(default=0, repr=False)
    _chol: Array | None = field(default=None, repr=False)

    @classmethod
    def fresh(cls, parent_idx: tuple[int, ...]) -> NodeEstimator:
        k = len(parent_idx)
        return cls(
            parent_idx=tuple(parent_idx),
            gram=np.eye(k),
            gram_inv=np.eye(k),
            resp=np.zeros(k),
            estimate=np.zeros(k),
        )

    @classmethod
    def from_state(
        cls,
        parent_idx: tuple[int, ...],
        gram: Array,
        resp: Array,
        count: int = 0,
    ) -> NodeEstimator:
        """Rebuild an estimator from sufficient statistics (checkpoints, tests)."""
        gram = np.array(gram, dtype=np.float64)
        resp = np.array(resp, dtype=np.float64)
        k = len(parent_idx)
        if gram.shape != (k, k) or resp.shape != (k,):
            raise SupportMismatch(f"Expected a {k}x{k} gram and length-{k} resp")
        gram_inv = np.linalg.inv(gram) if k else np.eye(0)
        return cls(
            parent_idx=tuple(parent_idx),
            gram=gram,
            gram_inv=gram_inv,
            resp=resp,
            estimate=gram_inv @ resp,
            count=count,
        )

    @property
    def dimension(self) -> int:
        return len(self.parent_idx)

    def update(self, x_parents: Array, x_i: float, nu_i: float) -> None:
        """Absorb one sample with a Sherman-Morrison update of ``V^{-1}``.

        Raises:
            NumericalBreakdown: the rank-one denominator is not positive.
        """
        x = np.asarray(x_parents, dtype=np.float64)
        if x.shape != (self.dimension,):
            raise SupportMismatch(
                f"Expected {self.dimension} parent values, got shape {x.shape}"
            )
        v_inv_x = self.gram_inv @ x
        denom = 1.0 + float(x @ v_inv_x)
        if denom <= BREAKDOWN_TOL:
            raise NumericalBreakdown(
                f"Rank-one denominator {denom!r} for parents {self.parent_idx}"
            )

        self.gram += np.outer(x, x)
        self.gram_inv -= np.outer(v_inv_x, v_inv_x) / denom
        self.resp += x * (x_i - nu_i)
        self.count += 1
        self._chol = None

        self._since_refresh += 1
        if self._since_refresh >= REFRESH_INTERVAL:
            self.refresh()
        self.estimate = self.gram_inv @ self.resp

    def refresh(self) -> None:
        """Re-invert the Gram matrix from scratch to shed accumulated drift."""
        if self.dimension:
            inv = np.linalg.inv(self.gram)
            self.gram_inv = 0.5 * (inv + inv.T)
        self._since_refresh = 0
        self.estimate = self.gram_inv @ self.resp

    def batch_estimate(self) -> Array:
        if not self.dimension:
            return np.zeros(0)
        return np.linalg.solve(self.gram, self.resp)

    def cholesky(self) -> Array:
        """Lower Cholesky factor of the Gram matrix, cached until the next update.

        Raises:
            FactorizationFailure: the Gram matrix is not positive definite.
        """
        if self._chol is None:
            try:
                self._chol = scipy.linalg.cholesky(self.gram, lower=True)
            except (np.linalg.LinAlgError, ValueError) as e:
                raise FactorizationFailure(
                    f"Gram for parents {self.parent_idx} is not positive definite"
                ) from e
        return self._chol

    def v_norm(self, vector: Array) -> float:
        """``||vector||_V``."""
        return float(np.sqrt(max(float(vector @ self.gram @ vector), 0.0)))

    def v_inv_norm(self, vector: Array) -> float:
        """``||vector||_{V^{-1}}``."""
        return float(np.sqrt(max(float(vector @ self.gram_inv @ vector), 0.0)))
