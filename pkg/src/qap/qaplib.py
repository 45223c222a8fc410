"""
QAPLIB instance files: the order n followed by two n x n matrices, all tokens
separated by arbitrary whitespace. The first matrix is the flow matrix A and
the second the distance matrix D, which is the convention the published
ste36 solutions are scored with.
"""

from dataclasses import dataclass
from pathlib import Path

import numpy as np


class QaplibFormatError(ValueError):
    def __init__(self, message: str, token_position: int):
        super().__init__(f"{message} (token {token_position})")
        self.message = message
        self.token_position = token_position

    def __reduce__(self):
        return type(self), (self.message, self.token_position)


@dataclass(frozen=True)
class QapInstance:
    name: str
    n: int
    flow: np.ndarray
    dist: np.ndarray

    def __post_init__(self):
        for label, matrix in (("flow", self.flow), ("dist", self.dist)):
            if matrix.shape != (self.n, self.n):
                raise ValueError(f"{label} matrix must be {self.n}x{self.n}, got {matrix.shape}")
            if not np.all(np.isfinite(matrix)):
                raise ValueError(f"{label} matrix has non-finite entries")
            matrix.setflags(write=False)


def _to_number(token: str, position: int) -> float:
    try:
        return float(token)
    except ValueError:
        raise QaplibFormatError(f"Non-numeric token '{token}'", position) from None


def parse_qaplib(text: str, name: str = "qap") -> QapInstance:
    tokens = text.split()
    if not tokens:
        raise QaplibFormatError("Empty QAPLIB file", 0)

    n_value = _to_number(tokens[0], 0)
    if n_value != int(n_value) or n_value < 1:
        raise QaplibFormatError(f"Order must be a positive integer, got '{tokens[0]}'", 0)
    n = int(n_value)

    expected = 1 + 2 * n * n
    if len(tokens) != expected:
        # the first missing or first surplus token
        position = min(len(tokens), expected)
        raise QaplibFormatError(
            f"Expected {expected} tokens for n={n}, found {len(tokens)}", position
        )

    values = np.array([_to_number(token, i) for i, token in enumerate(tokens[1:], start=1)])
    flow = values[: n * n].reshape(n, n)
    dist = values[n * n :].reshape(n, n)
    return QapInstance(name=name, n=n, flow=flow, dist=dist)


def load_qaplib(path: Path) -> QapInstance:
    path = Path(path)
    return parse_qaplib(path.read_text(), name=path.stem)
