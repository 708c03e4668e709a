# shapes.py
"""
Shapes - Phân hoạch của n, biểu đồ Ferrers, độ dài móc và công thức móc
"""

import functools
import logging
import math
from dataclasses import dataclass

from .errors import CellOutsideDiagramError, HookFormulaError, ParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class Partition:
    """Phân hoạch: các phần dương giảm dần, so sánh theo thứ tự từ điển"""
    parts: tuple

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("partition must have at least one part")
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"partition {parts} is not weakly decreasing")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, row: int) -> int:
        """Độ dài hàng (đánh số từ 1)"""
        return self.parts[row - 1]

    def __str__(self):
        return ",".join(str(p) for p in self.parts)

    def contains(self, cell: "Cell") -> bool:
        """Kiểm tra ô nằm trong biểu đồ"""
        return 1 <= cell.row <= len(self.parts) and 1 <= cell.col <= self.parts[cell.row - 1]


@dataclass(frozen=True, order=True)
class Cell:
    """Ô (hàng, cột), đánh số từ 1"""
    row: int
    col: int


def parse_partition(text: str) -> Partition:
    """Đọc phân hoạch "3,1"; đầu vào chưa sắp bị từ chối"""
    try:
        parts = tuple(int(tok) for tok in text.replace(" ", "").split(","))
    except ValueError:
        raise ParseError(f"invalid partition {text!r}: expected comma-separated integers")
    try:
        return Partition(parts)
    except ValueError as e:
        raise ParseError(f"invalid partition {text!r}: {e}")


@functools.lru_cache(maxsize=None)
def _partitions_max(n: int, max_part: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_max(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_of(n: int) -> list:
    """Mọi phân hoạch của n, tăng dần theo từ điển ((1,...,1) đầu, (n) cuối)"""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return sorted(Partition(p) for p in _partitions_max(n, n))


def cells(lam: Partition) -> list:
    """Các ô của biểu đồ theo thứ tự hàng"""
    return [Cell(r, c) for r in range(1, len(lam) + 1) for c in range(1, lam[r] + 1)]


def conjugate(lam: Partition) -> Partition:
    """Phân hoạch liên hợp (chuyển vị biểu đồ Ferrers)"""
    return Partition(tuple(sum(1 for p in lam.parts if p >= c) for c in range(1, lam.parts[0] + 1)))


def hook_length(lam: Partition, cell: Cell) -> int:
    """Độ dài móc của một ô: arm + leg + 1"""
    if not lam.contains(cell):
        raise CellOutsideDiagramError(f"cell ({cell.row},{cell.col}) is outside {lam}")
    arm = lam[cell.row] - cell.col
    leg = sum(1 for r in range(cell.row + 1, len(lam) + 1) if lam[r] >= cell.col)
    return arm + leg + 1


def hook_lengths(lam: Partition) -> list:
    """Bảng độ dài móc, từng hàng"""
    return [[hook_length(lam, Cell(r, c)) for c in range(1, lam[r] + 1)]
            for r in range(1, len(lam) + 1)]


def dimension(lam: Partition) -> int:
    """f^lambda = n! / prod(hooks)"""
    hook_product = math.prod(h for row in hook_lengths(lam) for h in row)
    f, rem = divmod(math.factorial(lam.n), hook_product)
    if rem:
        raise HookFormulaError(f"{lam.n}! is not divisible by hook product {hook_product} of {lam}")
    logger.debug("dimension(%s) = %d!/%d = %d", lam, lam.n, hook_product, f)
    return f
