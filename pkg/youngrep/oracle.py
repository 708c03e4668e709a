# oracle.py
"""
Oracle - Kiểm chứng brute-force: module hoán vị M^lambda trên tabloid,
polytabloid tường minh và ma trận biểu diễn tính lại bằng giải hệ chính xác.
Không dùng nhánh Garnir trong specht.py.
"""

import functools
import logging
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import sympy

from .config import ORACLE_MAX_DIM, ORACLE_MAX_N
from .errors import DegreeMismatchError, InconsistentSystemError, LimitError, NonIntegralSolutionError
from .perm import Permutation
from .shapes import Partition, dimension
from .specht import PolytabloidExpansion
from .tableaux import BasisOrder, Tableau, act_tabloid, apply_perm, column_group, standard_tableaux, tabloid_of
from .utils import int_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TabloidVector:
    """Phần tử của M^lambda: tabloid -> hệ số hữu tỉ, sắp theo khóa"""
    shape: Partition
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for tab in sorted(self.coeffs, key=lambda tb: tb.rows):
            if tab.shape != self.shape:
                raise ValueError(f"tabloid {tab} does not have shape {self.shape}")
            v = Fraction(self.coeffs[tab])
            if v:
                clean[tab] = v
        object.__setattr__(self, "coeffs", clean)

    def __add__(self, other: "TabloidVector") -> "TabloidVector":
        out = dict(self.coeffs)
        for tab, v in other.coeffs.items():
            out[tab] = out.get(tab, 0) + v
        return TabloidVector(self.shape, out)

    def scale(self, c) -> "TabloidVector":
        return TabloidVector(self.shape, {tab: c * v for tab, v in self.coeffs.items()})

    def __neg__(self):
        return self.scale(-1)

    def __len__(self):
        return len(self.coeffs)


def polytabloid(t: Tableau) -> TabloidVector:
    """e_t = tổng trên nhóm cột của sgn(pi) {pi t}"""
    coeffs = {}
    for s, pi in column_group(t):
        tab = tabloid_of(apply_perm(pi, t))
        coeffs[tab] = coeffs.get(tab, 0) + s
    return TabloidVector(t.shape, coeffs)


def act(sigma: Permutation, v: TabloidVector) -> TabloidVector:
    """Tác động của sigma lên vector tabloid"""
    if sigma.n != v.shape.n:
        raise DegreeMismatchError(f"permutation of degree {sigma.n} cannot act on M^{v.shape}")
    return TabloidVector(v.shape, {act_tabloid(sigma, tab): c for tab, c in v.coeffs.items()})


def check_oracle_limits(lam: Partition):
    """Từ chối shape vượt ORACLE_MAX_N hoặc ORACLE_MAX_DIM"""
    f = dimension(lam)
    if lam.n > ORACLE_MAX_N or f > ORACLE_MAX_DIM:
        raise LimitError(f"oracle limited to n <= {ORACLE_MAX_N} and f <= {ORACLE_MAX_DIM}; "
                         f"{lam} has n={lam.n}, f={f}")


class _StandardBasisSolver:
    """Tọa độ chính xác trong cơ sở polytabloid chuẩn của một shape.

    Ma trận tọa độ tabloid B (hàng: tabloid, cột: e_{t_j}) được rút gọn một lần
    bằng sympy: chọn f hàng độc lập và nghịch đảo khối f x f tương ứng. Mỗi lần
    giải là một phép nhân ma trận-vector Fraction, sau đó kiểm tra lại toàn bộ.
    """

    def __init__(self, lam: Partition, order: BasisOrder):
        self.lam = lam
        self.order = order
        self.basis = standard_tableaux(lam, order)
        self.vectors = [polytabloid(t) for t in self.basis]
        tabloids = sorted({tab for v in self.vectors for tab in v.coeffs}, key=lambda tb: tb.rows)
        self.row_of = {tab: r for r, tab in enumerate(tabloids)}
        b = sympy.zeros(len(tabloids), len(self.basis))
        for j, v in enumerate(self.vectors):
            for tab, c in v.coeffs.items():
                b[self.row_of[tab], j] = sympy.Rational(c.numerator, c.denominator)
        self.matrix = b
        _, pivots = b.T.rref()
        if len(pivots) != len(self.basis):
            raise InconsistentSystemError(f"standard polytabloids of {lam} are linearly dependent")
        self.pivot_tabloids = [tabloids[p] for p in pivots]
        block_inv = b.extract(list(pivots), list(range(len(self.basis)))).inv()
        self.block_inv = [[Fraction(int(x.p), int(x.q)) for x in block_inv.row(i)]
                          for i in range(block_inv.rows)]
        logger.debug("oracle basis for %s: %d tabloids, rank %d", lam, len(tabloids), len(pivots))

    def rank(self) -> int:
        return self.matrix.rank()

    def solve(self, v: TabloidVector) -> list:
        """Tọa độ Fraction của v trong cơ sở chuẩn"""
        rhs = [v.coeffs.get(tab, Fraction(0)) for tab in self.pivot_tabloids]
        coords = [sum(row[k] * rhs[k] for k in range(len(rhs))) for row in self.block_inv]

        recombined = TabloidVector(self.lam)
        for c, vec in zip(coords, self.vectors):
            if c:
                recombined = recombined + vec.scale(c)
        if recombined.coeffs != v.coeffs:
            raise InconsistentSystemError(f"vector is not in the span of the standard polytabloids of {self.lam}")
        return coords


@functools.lru_cache(maxsize=None)
def _solver(lam: Partition, order: BasisOrder) -> _StandardBasisSolver:
    return _StandardBasisSolver(lam, order)


def polytabloid_rank(lam: Partition, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> int:
    """Hạng của ma trận tọa độ tabloid của các polytabloid chuẩn"""
    return _solver(lam, order).rank()


def express_in_standard_basis(v: TabloidVector, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> PolytabloidExpansion:
    """Khai triển v theo cơ sở polytabloid chuẩn, hệ số phải nguyên"""
    coords = _solver(v.shape, order).solve(v)
    if any(c.denominator != 1 for c in coords):
        raise NonIntegralSolutionError(f"non-integral coordinates {coords} for shape {v.shape}")
    return PolytabloidExpansion(v.shape, order, {k: int(c) for k, c in enumerate(coords) if c})


def oracle_matrix(lam: Partition, sigma: Permutation, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> np.ndarray:
    """Cột j = tọa độ của sigma * polytabloid(t_j), giải chính xác"""
    check_oracle_limits(lam)
    if sigma.n != lam.n:
        raise DegreeMismatchError(f"permutation of degree {sigma.n} for shape {lam} of size {lam.n}")
    solver = _solver(lam, order)
    f = len(solver.basis)
    cols = []
    for vec in solver.vectors:
        cols.append(express_in_standard_basis(act(sigma, vec), order).vector())
    return int_matrix([[cols[j][r] for j in range(f)] for r in range(f)])
