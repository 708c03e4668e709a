# utils.py
"""
Utils - Cấu hình logging và chuyển đổi ma trận nguyên chính xác
"""

import logging
import sys

import numpy as np

from .config import LOG_FORMAT, LOG_LEVEL


def setup_logging(verbosity: int = 0):
    """Cấu hình logging ra stderr (0=WARNING, 1=INFO, 2+=DEBUG)"""
    if verbosity <= 0:
        level = getattr(logging, LOG_LEVEL)
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = logging.DEBUG

    root = logging.getLogger("youngrep")
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(LOG_FORMAT))
        root.addHandler(handler)
    return root


def int_matrix(rows) -> np.ndarray:
    """Tạo ma trận nguyên chính xác (dtype object, int Python)"""
    m = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            m[i, j] = int(v)
    return m


def identity_matrix(dim: int) -> np.ndarray:
    """Ma trận đơn vị nguyên"""
    return int_matrix([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])


def zero_matrix(dim: int) -> np.ndarray:
    return int_matrix([[0] * dim for _ in range(dim)])


def matrix_to_lists(m: np.ndarray) -> list:
    """Chuyển về list lồng nhau của int, dùng cho JSON"""
    return [[int(v) for v in row] for row in m]


def matrix_trace(m: np.ndarray) -> int:
    """Vết ma trận, kiểu int Python"""
    return sum(int(m[i, i]) for i in range(m.shape[0]))


def matrices_equal(a: np.ndarray, b: np.ndarray) -> bool:
    return a.shape == b.shape and np.array_equal(a, b)


def matrix_power(m: np.ndarray, k: int) -> np.ndarray:
    """Lũy thừa bậc k của ma trận vuông"""
    result = identity_matrix(m.shape[0])
    for _ in range(k):
        result = result @ m
    return result
