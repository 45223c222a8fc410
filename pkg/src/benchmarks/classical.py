"""
Classical test functions F1-F23: unimodal F1-F7, multimodal F8-F13 and
fixed-dimension multimodal F14-F23, with the constant tables of the standard
definitions (Shekel foxholes, Kowalik, Hartmann, Shekel).
"""

from typing import Callable

import numpy as np

from src.core import RngStream

# F14 Shekel's foxholes: a 5x5 grid of holes at {-32, -16, 0, 16, 32}^2
_FOXHOLE_GRID = np.array([-32.0, -16.0, 0.0, 16.0, 32.0])
FOXHOLES = np.vstack([np.tile(_FOXHOLE_GRID, 5), np.repeat(_FOXHOLE_GRID, 5)])

KOWALIK_A = np.array(
    [0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627, 0.0456, 0.0342, 0.0323, 0.0235, 0.0246]
)
KOWALIK_B = 1.0 / np.array([0.25, 0.5, 1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0])

HARTMANN_C = np.array([1.0, 1.2, 3.0, 3.2])
HARTMANN3_A = np.array(
    [[3.0, 10.0, 30.0], [0.1, 10.0, 35.0], [3.0, 10.0, 30.0], [0.1, 10.0, 35.0]]
)
HARTMANN3_P = np.array(
    [
        [0.3689, 0.1170, 0.2673],
        [0.4699, 0.4387, 0.7470],
        [0.1091, 0.8732, 0.5547],
        [0.03815, 0.5743, 0.8828],
    ]
)
HARTMANN6_A = np.array(
    [
        [10.0, 3.0, 17.0, 3.5, 1.7, 8.0],
        [0.05, 10.0, 17.0, 0.1, 8.0, 14.0],
        [3.0, 3.5, 1.7, 10.0, 17.0, 8.0],
        [17.0, 8.0, 0.05, 10.0, 0.1, 14.0],
    ]
)
HARTMANN6_P = np.array(
    [
        [0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886],
        [0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991],
        [0.2348, 0.1415, 0.3522, 0.2883, 0.3047, 0.6650],
        [0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381],
    ]
)

SHEKEL_A = np.array(
    [
        [4.0, 4.0, 4.0, 4.0],
        [1.0, 1.0, 1.0, 1.0],
        [8.0, 8.0, 8.0, 8.0],
        [6.0, 6.0, 6.0, 6.0],
        [3.0, 7.0, 3.0, 7.0],
        [2.0, 9.0, 2.0, 9.0],
        [5.0, 5.0, 3.0, 3.0],
        [8.0, 1.0, 8.0, 1.0],
        [6.0, 2.0, 6.0, 2.0],
        [7.0, 3.6, 7.0, 3.6],
    ]
)
SHEKEL_C = np.array([0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5])


def penalty_u(x: np.ndarray, a: float, k: float, m: float) -> np.ndarray:
    """u(x, a, k, m): k(x - a)^m above a, k(-x - a)^m below -a, zero in between."""
    return np.where(x > a, k * (x - a) ** m, 0.0) + np.where(x < -a, k * (-x - a) ** m, 0.0)


def f1(x):
    return np.sum(x**2)


def f2(x):
    ax = np.abs(x)
    return np.sum(ax) + np.prod(ax)


def f3(x):
    return np.sum(np.cumsum(x) ** 2)


def f4(x):
    return np.max(np.abs(x))


def f5(x):
    return np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2)


def f6(x):
    return np.sum((x + 0.5) ** 2)


def f7(x, rng: RngStream):
    i = np.arange(1, x.size + 1)
    return np.sum(i * x**4) + rng.random()


def f8(x):
    return np.sum(-x * np.sin(np.sqrt(np.abs(x))))


def f9(x):
    return np.sum(x**2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0)


def f10(x):
    n = x.size
    return (
        -20.0 * np.exp(-0.2 * np.sqrt(np.sum(x**2) / n))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / n)
        + 20.0
        + np.e
    )


def f11(x):
    i = np.arange(1, x.size + 1)
    return np.sum(x**2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0


def f12(x):
    n = x.size
    y = 1.0 + (x + 1.0) / 4.0
    body = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return np.pi / n * body + np.sum(penalty_u(x, 10.0, 100.0, 4.0))


def f13(x):
    body = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return 0.1 * body + np.sum(penalty_u(x, 5.0, 100.0, 4.0))


def f14(x):
    j = np.arange(1, FOXHOLES.shape[1] + 1)
    holes = np.sum((x[:, None] - FOXHOLES) ** 6, axis=0)
    return 1.0 / (1.0 / 500.0 + np.sum(1.0 / (j + holes)))


def f15(x):
    b = KOWALIK_B
    model = x[0] * (b**2 + x[1] * b) / (b**2 + x[2] * b + x[3])
    return np.sum((KOWALIK_A - model) ** 2)


def f16(x):
    x1, x2 = x[0], x[1]
    return 4 * x1**2 - 2.1 * x1**4 + x1**6 / 3 + x1 * x2 - 4 * x2**2 + 4 * x2**4


def f17(x):
    x1, x2 = x[0], x[1]
    return (
        (x2 - 5.1 / (4 * np.pi**2) * x1**2 + 5 / np.pi * x1 - 6) ** 2
        + 10 * (1 - 1 / (8 * np.pi)) * np.cos(x1)
        + 10
    )


def f18(x):
    x1, x2 = x[0], x[1]
    first = 1 + (x1 + x2 + 1) ** 2 * (
        19 - 14 * x1 + 3 * x1**2 - 14 * x2 + 6 * x1 * x2 + 3 * x2**2
    )
    second = 30 + (2 * x1 - 3 * x2) ** 2 * (
        18 - 32 * x1 + 12 * x1**2 + 48 * x2 - 36 * x1 * x2 + 27 * x2**2
    )
    return first * second


def _hartmann(x, a, p):
    return -np.sum(HARTMANN_C * np.exp(-np.sum(a * (x - p) ** 2, axis=1)))


def f19(x):
    return _hartmann(x, HARTMANN3_A, HARTMANN3_P)


def f20(x):
    return _hartmann(x, HARTMANN6_A, HARTMANN6_P)


def _shekel(x, m):
    diff = x - SHEKEL_A[:m]
    return -np.sum(1.0 / (np.sum(diff**2, axis=1) + SHEKEL_C[:m]))


def f21(x):
    return _shekel(x, 5)


def f22(x):
    return _shekel(x, 7)


def f23(x):
    return _shekel(x, 10)


CLASSICAL_FUNCTIONS: dict[int, Callable] = {
    1: f1, 2: f2, 3: f3, 4: f4, 5: f5, 6: f6, 7: f7, 8: f8,
    9: f9, 10: f10, 11: f11, 12: f12, 13: f13, 14: f14, 15: f15, 16: f16,
    17: f17, 18: f18, 19: f19, 20: f20, 21: f21, 22: f22, 23: f23,
}  # fmt: skip

NOISY_FUNCTIONS = frozenset({7})
