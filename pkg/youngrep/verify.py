# verify.py
"""
Verify - Bộ kiểm tra của lệnh `verify`: dữ liệu cố định S_4, quan hệ Coxeter,
đồng cấu, công thức móc, trực giao, tính hằng trên lớp và oracle
"""

import logging
import math
import random
import time
from dataclasses import dataclass

from .characters import character, inner_product, row_labels
from .config import (
    EXHAUSTIVE_HOMOMORPHISM_MAX_N, ORACLE_MAX_N, PAPER_DEGREE, RANDOM_PAIRS,
    RANDOM_SEED, load_paper_fixtures,
)
from .errors import CharacterError, LimitError, YoungRepError
from .oracle import oracle_matrix, polytabloid_rank
from .perm import (
    Permutation, adjacent_word, all_permutations, check_enumerable, class_size,
    compose, conjugacy_classes, inverse, parse_cycles, sign,
)
from .shapes import conjugate, dimension, parse_partition, partitions_of
from .specht import CASE_SAME_COLUMN, case_of, generator_matrix, rep_matrix, straighten
from .tableaux import BasisOrder, parse_tableau, standard_tableaux
from .utils import identity_matrix, int_matrix, matrices_equal, matrix_power

logger = logging.getLogger(__name__)

# Exhaustive word checks up to this n, random sample above
WORD_CHECK_EXHAUSTIVE_MAX_N = 6
ORACLE_EXHAUSTIVE_MAX_N = 5


@dataclass(frozen=True)
class CheckResult:
    """Kết quả một bài kiểm tra"""
    name: str
    passed: bool
    detail: str = ""

    def __str__(self):
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _random_perm(rng: random.Random, n: int) -> Permutation:
    return Permutation(tuple(rng.sample(range(1, n + 1), n)))


def _elements(n: int, exhaustive_max: int, rng: random.Random) -> list:
    """Toàn bộ S_n nếu n <= exhaustive_max, ngược lại một mẫu ngẫu nhiên"""
    if n <= exhaustive_max:
        return all_permutations(n)
    return [_random_perm(rng, n) for _ in range(RANDOM_PAIRS)]


# =========================================
# CHECKS
# =========================================

def check_hook_formula(n: int) -> CheckResult:
    """Công thức móc khớp số tableau chuẩn và sum f^2 = n!"""
    for lam in partitions_of(n):
        f = dimension(lam)
        count = len(standard_tableaux(lam, BasisOrder.ROW_WORD_LEX))
        if f != count:
            return CheckResult("hook formula", False, f"{lam}: hook gives {f}, enumeration {count}")
        if dimension(conjugate(lam)) != f:
            return CheckResult("hook formula", False, f"{lam}: f differs from conjugate {conjugate(lam)}")
    total = sum(dimension(lam) ** 2 for lam in partitions_of(n))
    if total != math.factorial(n):
        return CheckResult("hook formula", False, f"sum f^2 = {total} != {n}!")
    return CheckResult("hook formula", True, f"sum f^2 = {total} = {n}!")


def check_words(n: int, rng: random.Random) -> CheckResult:
    """Từ chuyển vị kề tính lại đúng hoán vị, độ dài cùng tính chẵn lẻ với dấu"""
    elements = _elements(n, WORD_CHECK_EXHAUSTIVE_MAX_N, rng)
    for sigma in elements:
        word = adjacent_word(sigma)
        if word.evaluate() != sigma:
            return CheckResult("adjacent words", False, f"word {word} does not evaluate to {sigma}")
        if (-1) ** len(word) != sign(sigma):
            return CheckResult("adjacent words", False, f"parity of {word} disagrees with sign of {sigma}")
    return CheckResult("adjacent words", True, f"{len(elements)} elements")


def check_classes(n: int) -> CheckResult:
    """Kích thước lớp khớp công thức và tổng bằng n!"""
    classes = conjugacy_classes(n)
    for lam, members in classes.items():
        if len(members) != class_size(lam):
            return CheckResult("conjugacy classes", False, f"K({lam}) has {len(members)} members, expected {class_size(lam)}")
    total = sum(len(m) for m in classes.values())
    if total != math.factorial(n):
        return CheckResult("conjugacy classes", False, f"class sizes sum to {total}")
    return CheckResult("conjugacy classes", True, " ".join(str(len(m)) for m in classes.values()))


def check_coxeter(n: int) -> CheckResult:
    """Quan hệ Coxeter trên các ma trận sinh"""
    for lam in partitions_of(n):
        ident = identity_matrix(dimension(lam))
        gens = {i: generator_matrix(lam, i) for i in range(1, n)}
        for i, x in gens.items():
            if not matrices_equal(x @ x, ident):
                return CheckResult("coxeter relations", False, f"X(s_{i})^2 != I for {lam}")
            if i + 1 in gens and not matrices_equal(matrix_power(x @ gens[i + 1], 3), ident):
                return CheckResult("coxeter relations", False, f"(X(s_{i})X(s_{i + 1}))^3 != I for {lam}")
            for j in range(i + 2, n):
                if not matrices_equal(x @ gens[j], gens[j] @ x):
                    return CheckResult("coxeter relations", False, f"X(s_{i}), X(s_{j}) do not commute for {lam}")
    return CheckResult("coxeter relations", True, f"{len(partitions_of(n))} shapes")


def check_case_one_columns(n: int) -> CheckResult:
    """Cột trường hợp cùng cột của X(s_i) là -e_j"""
    for lam in partitions_of(n):
        basis = standard_tableaux(lam)
        for i in range(1, n):
            x = generator_matrix(lam, i)
            for j, t in enumerate(basis):
                if case_of(t, i) != CASE_SAME_COLUMN:
                    continue
                expected = [-1 if r == j else 0 for r in range(len(basis))]
                if [int(v) for v in x[:, j]] != expected:
                    return CheckResult("same-column columns", False, f"{lam}, s_{i}, column {j + 1}")
    return CheckResult("same-column columns", True)


def check_homomorphism(n: int, rng: random.Random) -> CheckResult:
    """X(sigma tau) = X(sigma) X(tau) và X(sigma^-1) X(sigma) = I"""
    if n <= EXHAUSTIVE_HOMOMORPHISM_MAX_N:
        elements = all_permutations(n)
        pairs = [(s, t) for s in elements for t in elements]
    else:
        pairs = [(_random_perm(rng, n), _random_perm(rng, n)) for _ in range(RANDOM_PAIRS)]
    for lam in partitions_of(n):
        ident = identity_matrix(dimension(lam))
        cache = {}

        def rep(s):
            if s not in cache:
                cache[s] = rep_matrix(lam, s)
            return cache[s]

        for s, t in pairs:
            if not matrices_equal(rep(compose(s, t)), rep(s) @ rep(t)):
                return CheckResult("homomorphism", False, f"X({s}{t}) != X({s})X({t}) for {lam}")
            if not matrices_equal(rep(inverse(s)) @ rep(s), ident):
                return CheckResult("homomorphism", False, f"X({s})^-1 != X({inverse(s)}) for {lam}")
    return CheckResult("homomorphism", True, f"{len(pairs)} pairs per shape")


def check_orthogonality(n: int) -> CheckResult:
    """Các đặc trưng trực chuẩn, giá trị tại đơn vị là f^lambda"""
    try:
        chars = [character(lam) for lam in partitions_of(n)]
    except CharacterError as e:
        return CheckResult("orthogonality", False, str(e))
    for a in chars:
        for b in chars:
            expected = 1 if a.shape == b.shape else 0
            got = inner_product(a, b, n)
            if got != expected:
                return CheckResult("orthogonality", False, f"<chi_{a.shape}, chi_{b.shape}> = {got}")
    for chi in chars:
        if any(chi[c] != dimension(chi.shape) for c in chi.values if c.parts == (1,) * n):
            return CheckResult("orthogonality", False, f"chi_{chi.shape} on the identity is not f")
    return CheckResult("orthogonality", True, f"{len(chars)} irreducible characters")


def check_sign_and_trivial(n: int, rng: random.Random) -> CheckResult:
    """Biểu diễn (1^n) là dấu, (n) là tầm thường"""
    sign_shape = parse_partition(",".join(["1"] * n))
    trivial_shape = parse_partition(str(n))
    for sigma in _elements(n, EXHAUSTIVE_HOMOMORPHISM_MAX_N + 1, rng):
        if rep_matrix(sign_shape, sigma)[0, 0] != sign(sigma):
            return CheckResult("sign/trivial", False, f"X_{sign_shape}({sigma}) != sign")
        if rep_matrix(trivial_shape, sigma)[0, 0] != 1:
            return CheckResult("sign/trivial", False, f"X_{trivial_shape}({sigma}) != 1")
    return CheckResult("sign/trivial", True)


def check_paper_fixtures() -> CheckResult:
    """So với ma trận, từ và bảng đặc trưng cố định của S_4"""
    fx = load_paper_fixtures()
    order = BasisOrder.PAPER_S4
    for shape_text, gens in fx["generators"].items():
        lam = parse_partition(shape_text)
        for i, rows in gens.items():
            if not matrices_equal(generator_matrix(lam, int(i), order), int_matrix(rows)):
                return CheckResult("paper matrices", False, f"X_{lam}(s_{i}) differs from the displayed matrix")

    for case in fx["straightening"]:
        lam = parse_partition(case["shape"])
        got = straighten(parse_tableau(case["tableau"], lam), order).vector()
        if got != case["coeffs"]:
            return CheckResult("paper matrices", False, f"straightening {case['tableau']} gave {got}")

    shapes = partitions_of(PAPER_DEGREE)
    for lam in shapes:
        if character(lam, order).as_list() != fx["character_table"][str(lam)]:
            return CheckResult("paper matrices", False, f"character row of {lam} differs")
    classes = conjugacy_classes(PAPER_DEGREE)
    sizes = {str(k): len(v) for k, v in classes.items()}
    if sizes != fx["class_sizes"]:
        return CheckResult("paper matrices", False, f"class sizes {sizes}")
    labels = {str(k): v for k, v in row_labels(PAPER_DEGREE).items()}
    if labels != fx["row_labels"]:
        return CheckResult("paper matrices", False, f"row labels {labels}")

    errata = []
    for entry in fx["decompositions"]:
        target = parse_cycles(entry["perm"], PAPER_DEGREE)
        product = parse_cycles("".join(entry["word"]), PAPER_DEGREE)
        if entry.get("erratum"):
            fixed = parse_cycles("".join(entry["corrected"]), PAPER_DEGREE)
            if product == target or fixed != target:
                return CheckResult("paper matrices", False, f"erratum entry {entry['perm']} mis-handled")
            errata.append(entry["perm"])
        elif product != target:
            return CheckResult("paper matrices", False, f"word for {entry['perm']} does not evaluate")
    return CheckResult("paper matrices", True, f"errata corrected: {', '.join(errata)}")


def check_oracle(n: int, rng: random.Random) -> CheckResult:
    """So X(sigma) với ma trận tính lại bằng oracle tabloid"""
    order = BasisOrder.PAPER_S4 if n == PAPER_DEGREE else BasisOrder.ROW_WORD_LEX
    elements = _elements(n, ORACLE_EXHAUSTIVE_MAX_N, rng)
    for lam in partitions_of(n):
        if polytabloid_rank(lam, order) != dimension(lam):
            return CheckResult("oracle", False, f"standard polytabloids of {lam} are dependent")
        for sigma in elements:
            if not matrices_equal(oracle_matrix(lam, sigma, order), rep_matrix(lam, sigma, order)):
                return CheckResult("oracle", False, f"oracle and Garnir matrices differ at {lam}, {sigma}")
    return CheckResult("oracle", True, f"{len(elements)} elements per shape ({order.value})")


# =========================================
# SUITE
# =========================================

def run_suite(n: int, with_oracle: bool = False, log_callback=None) -> list:
    """Chạy mọi bài kiểm tra áp dụng được cho n
    LimitError được ném ra trước khi chạy bài nào
    Returns: list[CheckResult]
    """
    check_enumerable(n)
    if with_oracle and n > ORACLE_MAX_N:
        raise LimitError(f"oracle checks are limited to n <= {ORACLE_MAX_N}")

    rng = random.Random(RANDOM_SEED)
    checks = [
        ("hook formula", lambda: check_hook_formula(n)),
        ("conjugacy classes", lambda: check_classes(n)),
        ("adjacent words", lambda: check_words(n, rng)),
        ("coxeter relations", lambda: check_coxeter(n)),
        ("same-column columns", lambda: check_case_one_columns(n)),
        ("homomorphism", lambda: check_homomorphism(n, rng)),
        ("sign/trivial", lambda: check_sign_and_trivial(n, rng)),
        ("orthogonality", lambda: check_orthogonality(n)),
    ]
    if n == PAPER_DEGREE:
        checks.append(("paper matrices", check_paper_fixtures))
    if with_oracle:
        checks.append(("oracle", lambda: check_oracle(n, rng)))

    results = []
    for name, check in checks:
        start = time.perf_counter()
        try:
            result = check()
        except YoungRepError as e:
            result = CheckResult(name, False, f"{type(e).__name__}: {e}")
        elapsed = time.perf_counter() - start
        logger.info("%s (%.2fs)", result, elapsed)
        if log_callback:
            log_callback(str(result))
        results.append(result)
    return results
