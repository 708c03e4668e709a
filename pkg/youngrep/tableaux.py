# tableaux.py
"""
Tableaux - Tableau Young và tabloid: liệt kê tableau chuẩn theo thứ tự cơ sở,
truy vấn hàng/cột và tác động của hoán vị lên cách điền
"""

import enum
import functools
import itertools
import logging
from dataclasses import dataclass

from .config import PAPER_DEGREE, load_paper_fixtures
from .errors import ColumnsNotSortedError, DegreeMismatchError, ParseError, UnsupportedOrderError
from .perm import Permutation, sign
from .shapes import Cell, Partition

logger = logging.getLogger(__name__)

# Single-digit entries without commas
COMPACT_MAX_N = 9


class BasisOrder(enum.Enum):
    """Thứ tự cơ sở: "paper" (danh sách cố định của S_4) hoặc "rowlex\""""
    PAPER_S4 = "paper"
    ROW_WORD_LEX = "rowlex"

    @classmethod
    def parse(cls, text: str) -> "BasisOrder":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ParseError(f"unknown basis order {text!r}: expected 'paper' or 'rowlex'")


@dataclass(frozen=True)
class Tableau:
    """Cách điền song ánh 1..n vào biểu đồ Ferrers; các hàng từ trên xuống"""
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        shape = Partition(tuple(len(r) for r in rows))
        entries = sorted(v for row in rows for v in row)
        if entries != list(range(1, shape.n + 1)):
            raise ValueError(f"{rows} is not a filling with 1..{shape.n}")
        object.__setattr__(self, "rows", rows)

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, cell: Cell) -> int:
        return self.rows[cell.row - 1][cell.col - 1]

    def __str__(self):
        return "/".join(",".join(str(v) for v in row) for row in self.rows)

    def columns(self) -> list:
        """Các cột của tableau, mỗi cột từ trên xuống"""
        width = len(self.rows[0])
        return [tuple(row[c] for row in self.rows if len(row) > c) for c in range(width)]

    def row_word(self) -> tuple:
        return tuple(v for row in self.rows for v in row)

    def position(self, entry: int) -> Cell:
        """Ô chứa phần tử entry"""
        for r, row in enumerate(self.rows, start=1):
            if entry in row:
                return Cell(r, row.index(entry) + 1)
        raise ValueError(f"{entry} does not occur in {self}")

    @classmethod
    def from_columns(cls, shape: Partition, columns) -> "Tableau":
        return cls(tuple(tuple(columns[c][r] for c in range(shape[r + 1])) for r in range(len(shape))))


@dataclass(frozen=True)
class Tabloid:
    """Lớp tương đương hàng của tableau, mỗi hàng lưu đã sắp"""
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(sorted(int(v) for v in row)) for row in self.rows))

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(r) for r in self.rows))

    def __str__(self):
        return "/".join(",".join(str(v) for v in row) for row in self.rows)


def parse_tableau(text: str, shape: Partition = None) -> Tableau:
    """Đọc tableau "1,3,4/2"; dạng rút gọn "134/2" chỉ khi không có dấu phẩy và n <= 9"""
    chunks = [chunk.strip() for chunk in text.strip().split("/")]
    if any(not chunk for chunk in chunks):
        raise ParseError(f"empty row in tableau {text!r}")
    delimited = "," in text or any(" " in chunk for chunk in chunks)

    rows = []
    for chunk in chunks:
        tokens = chunk.replace(",", " ").split() if delimited else list(chunk)
        if delimited and "," in chunk and any(not tok.strip() for tok in chunk.split(",")):
            raise ParseError(f"empty entry in tableau {text!r}")
        try:
            rows.append(tuple(int(tok) for tok in tokens))
        except ValueError:
            raise ParseError(f"non-integer entry in tableau {text!r}")
    if not delimited and sum(len(r) for r in rows) > COMPACT_MAX_N:
        raise ParseError(f"compact tableau {text!r} has more than {COMPACT_MAX_N} entries; separate entries with commas")

    try:
        t = Tableau(tuple(rows))
    except ValueError as e:
        raise ParseError(f"invalid tableau {text!r}: {e}")
    if shape is not None and t.shape != shape:
        raise ParseError(f"tableau {text!r} has shape {t.shape}, expected {shape}")
    return t


def is_standard(t: Tableau) -> bool:
    """Kiểm tra hàng và cột đều tăng"""
    rows_ok = all(row[k] < row[k + 1] for row in t.rows for k in range(len(row) - 1))
    cols_ok = all(col[k] < col[k + 1] for col in t.columns() for k in range(len(col) - 1))
    return rows_ok and cols_ok


def apply_perm(sigma: Permutation, t: Tableau) -> Tableau:
    """Đổi nhãn mọi phần tử e thành sigma(e)"""
    if sigma.n != t.n:
        raise DegreeMismatchError(f"permutation of degree {sigma.n} cannot act on a tableau with {t.n} cells")
    return Tableau(tuple(tuple(sigma(v) for v in row) for row in t.rows))


def tabloid_of(t: Tableau) -> Tabloid:
    return Tabloid(t.rows)


def act_tabloid(sigma: Permutation, tab: Tabloid) -> Tabloid:
    """Tác động của sigma lên tabloid"""
    return Tabloid(tuple(tuple(sigma(v) for v in row) for row in tab.rows))


def _sorting_sign(seq) -> int:
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def column_sort(t: Tableau) -> tuple:
    """Sắp tăng dần từng cột
    Returns: (tableau, tích dấu của các phép sắp)
    """
    s = 1
    cols = []
    for col in t.columns():
        s *= _sorting_sign(col)
        cols.append(tuple(sorted(col)))
    return Tableau.from_columns(t.shape, cols), s


def first_row_descent(t: Tableau):
    """Ô đầu tiên (theo hàng) có t(r, c) > t(r, c+1); None nếu không có"""
    for col in t.columns():
        if any(col[k] > col[k + 1] for k in range(len(col) - 1)):
            raise ColumnsNotSortedError(f"columns of {t} are not increasing")
    for r, row in enumerate(t.rows, start=1):
        for c in range(len(row) - 1):
            if row[c] > row[c + 1]:
                return Cell(r, c + 1)
    return None


def column_group(t: Tableau) -> list:
    """Mọi cặp (sign, pi) với pi hoán vị mỗi cột của t trong chính cột đó"""
    per_column = []
    for col in t.columns():
        per_column.append([dict(zip(col, p)) for p in itertools.permutations(col)])
    out = []
    for choice in itertools.product(*per_column):
        images = list(range(1, t.n + 1))
        for mapping in choice:
            for src, dst in mapping.items():
                images[src - 1] = dst
        pi = Permutation(tuple(images))
        out.append((sign(pi), pi))
    return out


def _enumerate_standard(lam: Partition) -> list:
    """Đặt n, n-1, ..., 1 bằng cách lần lượt bỏ các góc ngoài"""
    def rec(parts, top):
        if top == 0:
            return [tuple(() for _ in parts)]
        out = []
        for r in range(len(parts)):
            is_corner = parts[r] > 0 and (r + 1 == len(parts) or parts[r + 1] < parts[r])
            if not is_corner:
                continue
            smaller = parts[:r] + (parts[r] - 1,) + parts[r + 1:]
            for rows in rec(smaller, top - 1):
                rows = list(rows)
                rows[r] = rows[r] + (top,)
                out.append(tuple(rows))
        return out

    return [Tableau(rows) for rows in rec(lam.parts, lam.n)]


def _paper_basis(lam: Partition) -> list:
    """Cơ sở "paper" đọc từ dữ liệu S_4"""
    fixtures = load_paper_fixtures()
    return [parse_tableau(s, lam) for s in fixtures["basis"][str(lam)]]


@functools.lru_cache(maxsize=None)
def standard_tableaux(lam: Partition, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> tuple:
    """Các tableau chuẩn của lambda theo thứ tự cơ sở"""
    if order is BasisOrder.PAPER_S4:
        if lam.n != PAPER_DEGREE:
            raise UnsupportedOrderError(f"basis order 'paper' exists only for n={PAPER_DEGREE}, got n={lam.n}")
        return tuple(_paper_basis(lam))
    basis = sorted(_enumerate_standard(lam), key=Tableau.row_word)
    logger.debug("standard tableaux of %s: %d", lam, len(basis))
    return tuple(basis)


@functools.lru_cache(maxsize=None)
def _index_table(lam: Partition, order: BasisOrder) -> dict:
    return {t: k for k, t in enumerate(standard_tableaux(lam, order))}


def index_of(t: Tableau, order: BasisOrder) -> int:
    """Vị trí (từ 0) của tableau chuẩn trong cơ sở"""
    return _index_table(t.shape, order)[t]