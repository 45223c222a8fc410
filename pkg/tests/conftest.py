from collections import deque
from typing import Iterable, Optional

import numpy as np
import pytest
from prefect.testing.utilities import prefect_test_harness

from src.config.settings import get_settings
from src.core import Bounds, ObjectiveSpec
from src.qap import QapInstance


class PinnedStream:
    """Every uniform draw returns the same value; index draws are 0, 1, 2, ..."""

    def __init__(self, value: float = 0.5):
        self.value = value

    def derive(self, stream: int) -> "PinnedStream":
        return self

    def next_uniform(self) -> float:
        return self.value

    def random(self, size: Optional[int] = None):
        if size is None:
            return self.next_uniform()
        return np.array([self.next_uniform() for _ in range(size)])

    def uniform(self, low, high, size: Optional[int] = None):
        draw = self.random(size)
        return low + (high - low) * draw

    def integers(self, low: int, high: int) -> int:
        return low

    def sample_without_replacement(self, n: int, k: int) -> np.ndarray:
        return np.arange(k)


class ScriptedStream(PinnedStream):
    """Uniform draws come from `values` in order, then `fallback` forever."""

    def __init__(self, values: Iterable[float], fallback: float = 0.5):
        super().__init__(fallback)
        self.queue = deque(values)

    def next_uniform(self) -> float:
        return self.queue.popleft() if self.queue else self.value


@pytest.fixture
def pinned():
    return PinnedStream(0.5)


@pytest.fixture
def toy_qap() -> QapInstance:
    return QapInstance(
        name="toy2",
        n=2,
        flow=np.array([[0.0, 3.0], [3.0, 0.0]]),
        dist=np.array([[0.0, 2.0], [2.0, 0.0]]),
    )


def random_qap(n: int, seed: int, symmetric: bool = True) -> QapInstance:
    rng = np.random.default_rng(seed)
    flow = rng.integers(0, 10, size=(n, n)).astype(float)
    dist = rng.integers(1, 10, size=(n, n)).astype(float)
    if symmetric:
        flow = np.triu(flow, 1) + np.triu(flow, 1).T
        dist = np.triu(dist, 1) + np.triu(dist, 1).T
    return QapInstance(name=f"rand{n}", n=n, flow=flow, dist=dist)


@pytest.fixture
def sphere():
    return ObjectiveSpec(
        name="sphere2", bounds=Bounds.box(-10.0, 10.0, 2), evaluate=lambda x: float(np.sum(x**2))
    )


@pytest.fixture
def qaplib_dir():
    return get_settings().qaplib_dir


@pytest.fixture(scope="session")
def prefect_harness():
    with prefect_test_harness():
        yield


@pytest.fixture
def clean_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("OUTPUT_DIR", str(tmp_path / "results"))
    monkeypatch.setenv("SHOW_PROGRESS", "false")
    get_settings.cache_clear()
    yield get_settings()
    get_settings.cache_clear()


@pytest.fixture
def make_qap():
    return random_qap
