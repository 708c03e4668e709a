# specht.py
"""
Specht - Biểu diễn tự nhiên Young: straightening Garnir cho polytabloid
và dựng các ma trận biểu diễn.

Quy ước: cột j của X(sigma) là tọa độ của sigma * e_{t_j} trong cơ sở chuẩn,
nên X(sigma tau) = X(sigma) X(tau).
"""

import functools
import itertools
import logging
from dataclasses import dataclass, field

import numpy as np

from .errors import DegreeMismatchError, GarnirPairError, GeneratorIndexError
from .perm import Permutation, adjacent, adjacent_word, sign
from .shapes import Cell, Partition, dimension
from .tableaux import (
    BasisOrder, Tableau, apply_perm, column_sort, first_row_descent,
    index_of, is_standard, standard_tableaux,
)
from .utils import identity_matrix, int_matrix

logger = logging.getLogger(__name__)

# Action cases of s_i = (i i+1) on a tableau
CASE_SAME_COLUMN = 1
CASE_SAME_ROW = 2
CASE_OTHER = 3


@dataclass(frozen=True)
class PolytabloidExpansion:
    """Tổ hợp nguyên của các polytabloid chuẩn; coeffs: chỉ số -> hệ số, bỏ hệ số 0"""
    shape: Partition
    order: BasisOrder
    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        f = dimension(self.shape)
        clean = {}
        for k, v in sorted(self.coeffs.items()):
            if not 0 <= k < f:
                raise IndexError(f"basis index {k} out of range 0..{f - 1}")
            if v:
                clean[k] = int(v)
        object.__setattr__(self, "coeffs", clean)

    def vector(self) -> list:
        out = [0] * dimension(self.shape)
        for k, v in self.coeffs.items():
            out[k] = v
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, v in self.coeffs.items():
            s = "+" if v > 0 else "-"
            mag = "" if abs(v) == 1 else str(abs(v))
            terms.append(f"{s}{mag}t{k + 1}")
        return " ".join(terms)


@dataclass(frozen=True)
class GarnirPair:
    """A: cột j từ hàng descent trở xuống; B: cột j+1 từ hàng descent trở lên"""
    A: frozenset
    B: frozenset

    def __post_init__(self):
        object.__setattr__(self, "A", frozenset(self.A))
        object.__setattr__(self, "B", frozenset(self.B))
        if not self.A or not self.B:
            raise GarnirPairError("Garnir sets must be nonempty")
        if self.A & self.B:
            raise GarnirPairError(f"Garnir sets overlap in {sorted(self.A & self.B)}")


@dataclass(frozen=True)
class GarnirStep:
    """Một bước viết lại e_t = -sum_{pi != e} sgn(pi) e_{pi t}, t đã sắp cột"""
    tableau: Tableau
    sign: int
    descent: Cell
    pair: GarnirPair
    terms: tuple  # (sign, pi, pi t) for every non-identity representative


def garnir_pair(t: Tableau, descent: Cell) -> GarnirPair:
    """Cặp Garnir tại ô descent của tableau đã sắp cột"""
    cols = t.columns()
    j = descent.col
    left, right = cols[j - 1], cols[j]
    A = left[descent.row - 1:]
    B = right[:descent.row]
    return GarnirPair(frozenset(A), frozenset(B))


def garnir_transversal(pair: GarnirPair, n: int = None) -> list:
    """Đại diện lớp kề có dấu của S_A x S_B trong S_{A u B}.

    Mỗi cách chọn A' (|A'| = |A|) cho một đại diện: ánh xạ A đã sắp lên A' đã sắp
    và B đã sắp lên B' đã sắp. A' = A cho phần tử đơn vị.
    """
    a_sorted = sorted(pair.A)
    b_sorted = sorted(pair.B)
    union = sorted(pair.A | pair.B)
    degree = n if n is not None else union[-1]
    out = []
    for a_new in itertools.combinations(union, len(a_sorted)):
        b_new = [x for x in union if x not in a_new]
        images = list(range(1, degree + 1))
        for src, dst in zip(a_sorted + b_sorted, list(a_new) + b_new):
            images[src - 1] = dst
        pi = Permutation(tuple(images))
        out.append((sign(pi), pi))
    # identity first, matching the usual listing
    out.sort(key=lambda item: not item[1].is_identity())
    return out


def straighten(t: Tableau, order: BasisOrder = BasisOrder.ROW_WORD_LEX, trace=None,
               cache: dict = None) -> PolytabloidExpansion:
    """Khai triển e_t theo cơ sở polytabloid chuẩn.

    trace (nếu có) được gọi với một GarnirStep cho mỗi bước viết lại. cache map
    tableau -> hệ số, có thể dùng chung giữa các lần gọi cùng thứ tự cơ sở.
    """
    if cache is None:
        cache = {}
    coeffs = _straighten(t, order, cache, trace)
    return PolytabloidExpansion(t.shape, order, coeffs)


def _straighten(t: Tableau, order: BasisOrder, cache: dict, trace) -> dict:
    """Đệ quy có memo; trả về dict chỉ số cơ sở -> hệ số"""
    if t in cache:
        return cache[t]

    sorted_t, s = column_sort(t)
    if is_standard(sorted_t):
        result = {index_of(sorted_t, order): s}
        cache[t] = result
        return result

    descent = first_row_descent(sorted_t)
    pair = garnir_pair(sorted_t, descent)
    terms = []
    for pi_sign, pi in garnir_transversal(pair, t.n):
        if pi.is_identity():
            continue
        terms.append((pi_sign, pi, apply_perm(pi, sorted_t)))

    if trace is not None:
        trace(GarnirStep(sorted_t, s, descent, pair, tuple(terms)))
    logger.debug("garnir at %s: A=%s B=%s", sorted_t, sorted(pair.A), sorted(pair.B))

    result = {}
    for pi_sign, _pi, moved in terms:
        for k, v in _straighten(moved, order, cache, trace).items():
            result[k] = result.get(k, 0) - s * pi_sign * v
    result = {k: v for k, v in result.items() if v}
    cache[t] = result
    return result


def case_of(t: Tableau, i: int) -> int:
    """Trường hợp tác động của s_i lên t theo vị trí của i và i+1"""
    a, b = t.position(i), t.position(i + 1)
    if a.col == b.col:
        return CASE_SAME_COLUMN
    if a.row == b.row:
        return CASE_SAME_ROW
    return CASE_OTHER


@functools.lru_cache(maxsize=None)
def generator_matrix(lam: Partition, i: int, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> np.ndarray:
    """X(s_i), dựng từng cột theo ba trường hợp tác động"""
    n = lam.n
    if not 1 <= i <= n - 1:
        raise GeneratorIndexError(f"generator index {i} out of range 1..{n - 1}")
    basis = standard_tableaux(lam, order)
    f = len(basis)
    s_i = adjacent(n, i)
    cache = {}
    cols = []
    for t in basis:
        col = [0] * f
        case = case_of(t, i)
        if case == CASE_SAME_COLUMN:
            col[index_of(t, order)] = -1
        elif case == CASE_SAME_ROW:
            for k, v in straighten(apply_perm(s_i, t), order, cache=cache).coeffs.items():
                col[k] = v
        else:
            col[index_of(apply_perm(s_i, t), order)] = 1
        cols.append(col)
    m = int_matrix([[cols[j][r] for j in range(f)] for r in range(f)])
    m.setflags(write=False)
    return m


def generator_matrices(lam: Partition, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> dict:
    """Mọi ma trận sinh X(s_1) .. X(s_{n-1})"""
    return {i: generator_matrix(lam, i, order) for i in range(1, lam.n)}


def rep_matrix(lam: Partition, sigma: Permutation, order: BasisOrder = BasisOrder.ROW_WORD_LEX) -> np.ndarray:
    """X(sigma) = tích các ma trận sinh theo từ bubble sort"""
    if sigma.n != lam.n:
        raise DegreeMismatchError(f"permutation of degree {sigma.n} for shape {lam} of size {lam.n}")
    m = identity_matrix(dimension(lam))
    for i in adjacent_word(sigma).letters:
        m = m @ generator_matrix(lam, i, order)
    return m
