# characters.py
"""
Characters - Đặc trưng của các biểu diễn tự nhiên Young, bảng đặc trưng
và tích vô hướng trực giao
"""

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .config import CLASS_CONSTANCY_MAX_N
from .errors import CharacterError
from .perm import check_enumerable, class_representative, class_size, conjugacy_classes
from .shapes import Partition, partitions_of
from .specht import rep_matrix
from .tableaux import BasisOrder
from .utils import matrix_trace

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CharacterRow:
    """Vết của X_shape trên từng lớp liên hợp, khóa theo kiểu chu trình"""
    shape: Partition
    values: dict = field(default_factory=dict)

    def __getitem__(self, cls: Partition) -> int:
        return self.values[cls]

    def as_list(self) -> list:
        """Giá trị theo kiểu lớp tăng dần"""
        return [self.values[k] for k in sorted(self.values)]


def character(lam: Partition, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> CharacterRow:
    """Vết trên đại diện của mỗi lớp; với n <= CLASS_CONSTANCY_MAX_N mọi phần tử
    của lớp đều được tính và phải cho cùng giá trị"""
    n = lam.n
    values = {}
    if n <= CLASS_CONSTANCY_MAX_N:
        for cls, members in conjugacy_classes(n).items():
            traces = {matrix_trace(rep_matrix(lam, sigma, order)) for sigma in members}
            if len(traces) != 1:
                raise CharacterError(f"trace of X_{lam} is not constant on class {cls}: {sorted(traces)}")
            values[cls] = traces.pop()
    else:
        check_enumerable(n)
        for cls in partitions_of(n):
            values[cls] = matrix_trace(rep_matrix(lam, class_representative(cls), order))
    logger.debug("character of %s: %s", lam, [values[k] for k in sorted(values)])
    return CharacterRow(lam, values)


def character_table(n: int, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> list:
    """Bảng đặc trưng của S_n
    Returns: list hàng theo shape tăng dần, mỗi hàng theo kiểu lớp tăng dần
    """
    check_enumerable(n)
    return [character(lam, order).as_list() for lam in partitions_of(n)]


def inner_product(a: CharacterRow, b: CharacterRow, n: int) -> Fraction:
    """Tích vô hướng (1/n!) sum |K| a(K) b(K), giá trị Fraction chính xác"""
    if set(a.values) != set(b.values):
        raise CharacterError("characters are defined on different class sets")
    if any(cls.n != n for cls in a.values):
        raise CharacterError(f"class types do not partition n={n}")
    total = sum(class_size(cls) * a[cls] * b[cls] for cls in a.values)
    return Fraction(total, math.factorial(n))


def row_labels(n: int) -> dict:
    """Nhãn hàng của bảng đặc trưng: (1^n) là sign, (n) là trivial"""
    if n == 1:
        return {Partition((1,)): "trivial"}
    return {Partition((1,) * n): "sign", Partition((n,)): "trivial"}
