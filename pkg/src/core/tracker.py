import time

import numpy as np

from src.diagnostics.diversity import dimension_diversity

from .model import Cat, RunResult
from .population import Incumbent, positions_matrix


class RunTracker:
    """Per-iteration best-so-far and diversity bookkeeping for one run."""

    def __init__(self, max_iter: int, record_diversity: bool):
        self.max_iter = max_iter
        self.record_diversity = record_diversity
        self.convergence = np.empty(max_iter)
        self.diversity = np.empty(max_iter) if record_diversity else None
        self._iteration = 0
        self._started = time.perf_counter()

    def record(self, incumbent: Incumbent, population: list[Cat]) -> None:
        if self._iteration >= self.max_iter:
            raise RuntimeError(f"Tracker already holds {self.max_iter} iterations")
        self.convergence[self._iteration] = incumbent[1]
        if self.diversity is not None:
            snapshot = dimension_diversity(
                positions_matrix(population), iteration=self._iteration + 1
            )
            self.diversity[self._iteration] = snapshot.div
        self._iteration += 1

    def finish(self, incumbent: Incumbent, seed: int, algorithm: str, objective: str) -> RunResult:
        if self._iteration != self.max_iter:
            raise RuntimeError(
                f"Run stopped after {self._iteration} of {self.max_iter} iterations"
            )
        best_position, best_cost = incumbent
        return RunResult(
            best_position=best_position,
            best_cost=float(best_cost),
            convergence=self.convergence,
            diversity_trace=self.diversity,
            elapsed_seconds=time.perf_counter() - self._started,
            seed=seed,
            algorithm=algorithm,
            objective=objective,
        )
